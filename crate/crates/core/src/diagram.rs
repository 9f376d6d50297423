//! Gluings of the fixed two-colored pattern and the diagrams they generate.
//!
//! Points are numbered `1..=2n` clockwise. The pattern colors the arc from
//! `2i-1` to `2i` black and the arc from `2i` to `2i+1` (and `2n` to `1`)
//! white, so the color of an arc is a function of its endpoints and is never
//! stored. Internally a gluing is kept as a 0-based partner table; everything
//! public speaks 1-based point labels.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A perfect matching of the points `1..=2n`, held in normal form.
///
/// Ordering compares `n` first and then the flattened normal form
/// `(a_1, b_1, a_2, b_2, ...)` lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gluing {
    partner: Vec<usize>,
}

impl Gluing {
    /// Builds the normal-form gluing for an arbitrary collection of
    /// unordered pairs. The point set is `1..=2n`, where `2n` is the larger
    /// of twice the number of pairs and the largest label rounded up to even.
    pub fn normalize(pairs: &[(usize, usize)]) -> Result<Gluing> {
        if pairs.is_empty() {
            return Err(Error::Empty);
        }
        let max_label = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let points = (2 * pairs.len()).max(max_label + (max_label & 1));
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p == 0 {
                    return Err(Error::IndexOutOfRange { index: 0, max: points });
                }
            }
            if a == b {
                return Err(Error::SelfPair(a));
            }
            for p in [a, b] {
                if partner[p - 1] != usize::MAX {
                    return Err(Error::DuplicateIndex(p));
                }
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        if let Some(missing) = partner.iter().position(|&q| q == usize::MAX) {
            return Err(Error::MissingIndex(missing + 1));
        }
        Ok(Gluing { partner })
    }

    /// Wraps a 0-based partner table that is already known to be a
    /// fixed-point-free involution.
    pub(crate) fn from_partners(partner: Vec<usize>) -> Gluing {
        debug_assert!(partner.len().is_multiple_of(2) && !partner.is_empty());
        debug_assert!(partner
            .iter()
            .enumerate()
            .all(|(i, &p)| p != i && partner[p] == i));
        Gluing { partner }
    }

    pub(crate) fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points on the circle, `2n`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// The point joined to `point` (both 1-based).
    ///
    /// Panics if `point` is not in `1..=2n`.
    pub fn partner(&self, point: usize) -> usize {
        self.partner[point - 1] + 1
    }

    /// Chords `(a_i, b_i)` in normal form: `a_1 = 1`, `a_i` increasing,
    /// `a_i < b_i`.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| (i + 1, p + 1))
    }

    /// The sequence `a_1, b_1, a_2, b_2, ...`.
    pub fn flattened(&self) -> Vec<usize> {
        self.chords().flat_map(|(a, b)| [a, b]).collect()
    }

    /// Maps every point `d` to `d + k mod 2n` (residue 0 read as `2n`) and
    /// renormalizes. Any `k` is accepted; shifts are taken modulo `2n`.
    pub fn rotate(&self, k: usize) -> Gluing {
        let points = self.points();
        let k = k % points;
        let mut partner = vec![0; points];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[(i + k) % points] = (p + k) % points;
        }
        Gluing { partner }
    }

    /// Applies a validated rotation.
    pub fn apply(&self, rotation: Rotation) -> Result<Gluing> {
        if rotation.n != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: rotation.n });
        }
        Ok(self.rotate(rotation.k))
    }

    /// Whether every chord joins an odd point to an even point.
    pub fn is_orientable(&self) -> bool {
        self.partner.iter().enumerate().all(|(i, &p)| (i ^ p) & 1 == 1)
    }
}

impl Ord for Gluing {
    fn cmp(&self, other: &Self) -> Ordering {
        // Within a fixed n, the first index where two partner tables differ
        // is a chord opener in both, so the table order is the flattened
        // normal-form order.
        self.n().cmp(&other.n()).then_with(|| self.partner.cmp(&other.partner))
    }
}

impl PartialOrd for Gluing {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.chords() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gluing{self}")
    }
}

impl FromStr for Gluing {
    type Err = Error;

    /// Parses `(a,b)(c,d)...`; whitespace is allowed between tokens.
    fn from_str(s: &str) -> Result<Gluing> {
        let mut pairs = Vec::new();
        let mut rest = s.trim_start();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {:?}", truncate(rest))))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse("unterminated chord, missing ')'".into()))?;
            let (inner, tail) = body.split_at(close);
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("chord ({inner}) needs two points")))?;
            pairs.push((parse_point(a)?, parse_point(b)?));
            rest = tail[1..].trim_start();
        }
        Gluing::normalize(&pairs)
    }
}

fn parse_point(s: &str) -> Result<usize> {
    let s = s.trim();
    s.parse()
        .map_err(|_| Error::Parse(format!("{s:?} is not a point label")))
}

fn truncate(s: &str) -> &str {
    match s.char_indices().nth(12) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

#[derive(Serialize, Deserialize)]
struct GluingJson {
    n: usize,
    chords: Vec<[usize; 2]>,
}

impl Serialize for Gluing {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GluingJson {
            n: self.n(),
            chords: self.chords().map(|(a, b)| [a, b]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Gluing {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GluingJson::deserialize(deserializer)?;
        let pairs: Vec<_> = raw.chords.iter().map(|&[a, b]| (a, b)).collect();
        let gluing = Gluing::normalize(&pairs).map_err(serde::de::Error::custom)?;
        if gluing.n() != raw.n {
            return Err(serde::de::Error::custom(format!(
                "declared n = {} but chords describe n = {}",
                raw.n,
                gluing.n()
            )));
        }
        Ok(gluing)
    }
}

/// Which diagrams a count or enumeration ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramClass {
    /// No chord joins two points of equal parity.
    O,
    /// At least one chord joins two points of equal parity.
    N,
    #[serde(rename = "all")]
    All,
}

impl DiagramClass {
    pub fn contains(self, gluing: &Gluing) -> bool {
        match self {
            DiagramClass::All => true,
            DiagramClass::O => gluing.is_orientable(),
            DiagramClass::N => !gluing.is_orientable(),
        }
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramClass::O => "O",
            DiagramClass::N => "N",
            DiagramClass::All => "all",
        })
    }
}

impl FromStr for DiagramClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "o" => Ok(DiagramClass::O),
            "n" => Ok(DiagramClass::N),
            "all" => Ok(DiagramClass::All),
            _ => Err(Error::Parse(format!("unknown diagram class {s:?}"))),
        }
    }
}

/// A rotation of the circle by `k` steps, `1 <= k <= 2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    n: usize,
    k: usize,
}

impl Rotation {
    pub fn new(n: usize, k: usize) -> Result<Rotation> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if k == 0 || k > 2 * n {
            return Err(Error::RotationOutOfRange { k, max: 2 * n });
        }
        Ok(Rotation { n, k })
    }

    /// A rotation that preserves the pattern coloring.
    pub fn even(n: usize, k: usize) -> Result<Rotation> {
        let rotation = Rotation::new(n, k)?;
        if k % 2 == 1 {
            return Err(Error::OddRotation(k));
        }
        Ok(rotation)
    }

    /// The color-preserving group `{2, 4, ..., 2n}`.
    pub fn even_group(n: usize) -> impl Iterator<Item = Rotation> {
        (1..=n).map(move |m| Rotation { n, k: 2 * m })
    }

    pub fn shift(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_even(&self) -> bool {
        self.k.is_multiple_of(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcColor {
    Black,
    White,
}

impl ArcColor {
    /// Color of the pattern arc running clockwise from `start` to `start + 1`.
    pub fn of_arc_from(start: usize) -> ArcColor {
        if start % 2 == 1 {
            ArcColor::Black
        } else {
            ArcColor::White
        }
    }
}

/// A gluing read as a two-colored chord diagram over the fixed pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ColorDiagram {
    gluing: Gluing,
}

impl ColorDiagram {
    pub fn new(gluing: Gluing) -> ColorDiagram {
        ColorDiagram { gluing }
    }

    pub fn gluing(&self) -> &Gluing {
        &self.gluing
    }

    pub fn into_gluing(self) -> Gluing {
        self.gluing
    }

    pub fn n(&self) -> usize {
        self.gluing.n()
    }

    /// `O` iff every chord joins an odd point to an even one.
    pub fn classify(&self) -> DiagramClass {
        if self.gluing.is_orientable() {
            DiagramClass::O
        } else {
            DiagramClass::N
        }
    }

    /// The other endpoint of the pattern arc of the given color at `point`.
    pub fn arc_mate(&self, point: usize, color: ArcColor) -> usize {
        let points = self.gluing.points();
        let odd = point % 2 == 1;
        match (color, odd) {
            (ArcColor::Black, true) | (ArcColor::White, false) => point % points + 1,
            _ => (point + points - 2) % points + 1,
        }
    }

    pub fn rotate(&self, rotation: Rotation) -> Result<ColorDiagram> {
        if !rotation.is_even() {
            return Err(Error::OddRotation(rotation.k));
        }
        Ok(ColorDiagram::new(self.gluing.apply(rotation)?))
    }

    /// Lexicographically least gluing in the orbit under even rotations.
    pub fn canonical_form(&self) -> Gluing {
        let p = self.gluing.partners();
        let points = p.len();
        let best = (2..points)
            .step_by(2)
            .fold(0, |best, k| match compare_rotations(p, k, best) {
                Ordering::Less => k,
                _ => best,
            });
        self.gluing.rotate(best)
    }

    /// Number of even rotations (including the full turn) fixing the diagram.
    pub fn stabilizer_order(&self) -> usize {
        let p = self.gluing.partners();
        (2..=p.len()).step_by(2).filter(|&k| is_fixed_by(p, k)).count()
    }

    /// Whether the two diagrams differ by an even rotation.
    pub fn isomorphic(&self, other: &ColorDiagram) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.canonical_form() == other.canonical_form())
    }

    /// The diagram of the gluing shifted by one step. Read with the colors
    /// swapped, this is the same picture as `self`.
    pub fn recolor_shift(&self) -> ColorDiagram {
        ColorDiagram::new(self.gluing.rotate(1))
    }
}

impl From<Gluing> for ColorDiagram {
    fn from(gluing: Gluing) -> Self {
        ColorDiagram::new(gluing)
    }
}

impl fmt::Display for ColorDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.gluing.fmt(f)
    }
}

impl FromStr for ColorDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(ColorDiagram::new)
    }
}

/// Compares the partner table rotated by `k` against `p` itself.
#[inline]
pub(crate) fn compare_rotation(p: &[usize], k: usize) -> Ordering {
    let points = p.len();
    for j in 0..points {
        let src = if j >= k { j - k } else { j + points - k };
        let mut v = p[src] + k;
        if v >= points {
            v -= points;
        }
        match v.cmp(&p[j]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Compares `p` rotated by `k` against `p` rotated by `base`.
fn compare_rotations(p: &[usize], k: usize, base: usize) -> Ordering {
    let points = p.len();
    let at = |shift: usize, j: usize| (p[(j + points - shift) % points] + shift) % points;
    (0..points)
        .map(|j| at(k, j).cmp(&at(base, j)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

#[inline]
pub(crate) fn is_fixed_by(p: &[usize], k: usize) -> bool {
    let points = p.len();
    let k = k % points;
    (0..points).all(|j| {
        let mut img = j + k;
        if img >= points {
            img -= points;
        }
        let mut v = p[j] + k;
        if v >= points {
            v -= points;
        }
        p[img] == v
    })
}
