//! Streaming generation of gluings and brute-force orbit counting.
//!
//! Gluings come out in lexicographic order of their normal form: the
//! least unmatched point is always the next chord opener, and its partner
//! runs upward through the unmatched points. Fixing the partner of point 1
//! splits the stream into independent shards of equal size, which is how
//! the census is spread across worker threads.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{double_factorial, factorial};
use crate::diagram::{compare_rotation, is_fixed_by, DiagramClass, Gluing};
use crate::error::{Error, Result};

const UNMATCHED: usize = usize::MAX;

/// Which partners a chord opener may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PartnerRule {
    Any,
    /// Opposite parity only: generates exactly the O-gluings.
    OppositeParity,
}

/// Backtracking walker over normal-form matchings that lends out its 0-based
/// partner table instead of allocating per item.
#[derive(Clone, Debug)]
pub(crate) struct MatchingWalker {
    partner: Vec<usize>,
    /// Chord openers, one per matched level.
    openers: Vec<usize>,
    /// Levels below this are pinned by the shard and never revisited.
    floor: usize,
    rule: PartnerRule,
    started: bool,
    done: bool,
}

impl MatchingWalker {
    fn new(n: usize, rule: PartnerRule) -> Self {
        MatchingWalker {
            partner: vec![UNMATCHED; 2 * n],
            openers: Vec::with_capacity(n),
            floor: 0,
            rule,
            started: false,
            done: n == 0,
        }
    }

    /// Walks only the gluings in which point 1 is joined to `first + 1`.
    fn shard(n: usize, rule: PartnerRule, first: usize) -> Self {
        let mut walker = MatchingWalker::new(n, rule);
        walker.link(0, first);
        walker.floor = 1;
        walker
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
        self.openers.push(a);
    }

    fn candidate_from(&self, a: usize, from: usize) -> Option<usize> {
        let step = match self.rule {
            PartnerRule::Any => 1,
            PartnerRule::OppositeParity => 2,
        };
        let from = match self.rule {
            PartnerRule::OppositeParity if (from ^ a) & 1 == 0 => from + 1,
            _ => from,
        };
        (from..self.partner.len())
            .step_by(step)
            .find(|&b| self.partner[b] == UNMATCHED)
    }

    /// Completes the current prefix with the least choice at every level.
    /// Under both rules any prefix extends, so this cannot fail.
    fn descend(&mut self) {
        let n = self.partner.len() / 2;
        while self.openers.len() < n {
            let after = self.openers.last().map_or(0, |&a| a + 1);
            let a = (after..self.partner.len())
                .find(|&p| self.partner[p] == UNMATCHED)
                .expect("an unmatched point remains");
            let b = self.candidate_from(a, a + 1).expect("every prefix extends");
            self.link(a, b);
        }
    }

    pub(crate) fn next_partners(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(&self.partner);
        }
        loop {
            if self.openers.len() <= self.floor {
                self.done = true;
                return None;
            }
            let a = self.openers.pop().expect("nonempty");
            let b = self.partner[a];
            self.partner[a] = UNMATCHED;
            self.partner[b] = UNMATCHED;
            if let Some(next) = self.candidate_from(a, b + 1) {
                self.link(a, next);
                self.descend();
                return Some(&self.partner);
            }
        }
    }
}

/// Iterator over gluings; see [`enumerate_gluings`] and
/// [`enumerate_o_gluings`].
#[derive(Clone, Debug)]
pub struct Gluings {
    walker: MatchingWalker,
}

impl Iterator for Gluings {
    type Item = Gluing;

    fn next(&mut self) -> Option<Gluing> {
        self.walker.next_partners().map(|p| Gluing::from_partners(p.to_vec()))
    }
}

/// All `(2n-1)!!` gluings of `2n` points, in lexicographic order.
pub fn enumerate_gluings(n: usize) -> Gluings {
    Gluings { walker: MatchingWalker::new(n, PartnerRule::Any) }
}

/// The `n!` O-gluings (every chord joins odd to even), in lexicographic
/// order.
pub fn enumerate_o_gluings(n: usize) -> Gluings {
    Gluings { walker: MatchingWalker::new(n, PartnerRule::OppositeParity) }
}

/// Rotation group used to identify diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    /// Shifts by `2, 4, ..., 2n`: isomorphism of color diagrams.
    Even,
    /// Shifts by `1, 2, ..., 2n`: isomorphism of uncolored chord diagrams.
    Full,
}

impl Symmetry {
    fn step(self) -> usize {
        match self {
            Symmetry::Even => 2,
            Symmetry::Full => 1,
        }
    }

    pub fn order(self, n: usize) -> usize {
        2 * n / self.step()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Lexicographically least member.
    pub representative: Gluing,
    pub size: usize,
    pub stabilizer: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub n: usize,
    pub class: DiagramClass,
    pub symmetry: Symmetry,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub orbit_count: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub total_gluings: BigUint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<Orbit>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointCount {
    pub n: usize,
    pub k: usize,
    pub class: DiagramClass,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub count: BigUint,
}

/// Snapshot handed to the progress callback after each finished shard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub shards_done: usize,
    pub shards_total: usize,
    pub processed: u64,
    pub orbits: u64,
}

/// Default brute-force ceiling: admits `n = 9` for all gluings (34,459,425)
/// and `n = 12` for O-gluings (479,001,600), and nothing larger.
pub const DEFAULT_BUDGET: u64 = 500_000_000;

/// Brute-force driver with a work budget and a worker count.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    budget: u64,
    workers: Option<usize>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { budget: DEFAULT_BUDGET, workers: None }
    }
}

struct ShardTally {
    seen: u64,
    orbits: u64,
    kept: Vec<Orbit>,
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Maximum number of gluings a single scan may visit.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget.max(1);
        self
    }

    /// Worker threads; `None` uses the global rayon pool. One worker runs
    /// every shard on the calling thread.
    pub fn with_workers(mut self, workers: Option<usize>) -> Self {
        self.workers = workers.map(|w| w.max(1));
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Number of gluings a scan over `class` has to walk.
    fn scan_size(n: usize, class: DiagramClass) -> BigUint {
        match class {
            DiagramClass::O => factorial(n as u64),
            DiagramClass::All | DiagramClass::N => {
                double_factorial(2 * n as i64 - 1).expect("odd argument")
            }
        }
    }

    fn check_budget(&self, n: usize, class: DiagramClass) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let required = Self::scan_size(n, class);
        if required > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded { required, budget: self.budget });
        }
        Ok(())
    }

    fn shards(n: usize, class: DiagramClass) -> Vec<MatchingWalker> {
        let rule = match class {
            DiagramClass::O => PartnerRule::OppositeParity,
            _ => PartnerRule::Any,
        };
        let step = if rule == PartnerRule::OppositeParity { 2 } else { 1 };
        (1..2 * n).step_by(step).map(|first| MatchingWalker::shard(n, rule, first)).collect()
    }

    /// Runs `work` over every shard and returns the per-shard results in
    /// shard order, so merged output does not depend on scheduling.
    fn map_shards<T, F>(&self, shards: Vec<MatchingWalker>, work: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(MatchingWalker) -> T + Sync + Send,
    {
        match self.workers {
            Some(1) => Ok(shards.into_iter().map(work).collect()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(|| shards.into_par_iter().map(work).collect()))
            }
            None => Ok(shards.into_par_iter().map(work).collect()),
        }
    }

    /// Orbits of the gluings in `class` under even rotations.
    pub fn orbit_census(&self, n: usize, class: DiagramClass, keep_orbits: bool) -> Result<OrbitCensus> {
        self.census(n, class, Symmetry::Even, keep_orbits, &|_| {})
    }

    /// Orbits of all gluings under every rotation (uncolored diagrams).
    pub fn uncolored_census(&self, n: usize, keep_orbits: bool) -> Result<OrbitCensus> {
        self.census(n, DiagramClass::All, Symmetry::Full, keep_orbits, &|_| {})
    }

    /// Counts orbits by counting the gluings that are the least member of
    /// their own orbit. `progress` is called once per finished shard, from
    /// whichever worker finished it.
    pub fn census(
        &self,
        n: usize,
        class: DiagramClass,
        symmetry: Symmetry,
        keep_orbits: bool,
        progress: &(dyn Fn(Progress) + Sync),
    ) -> Result<OrbitCensus> {
        self.check_budget(n, class)?;
        let shards = Self::shards(n, class);
        let shards_total = shards.len();
        let done = AtomicU64::new(0);
        let processed = AtomicU64::new(0);
        let found = AtomicU64::new(0);
        let group_order = symmetry.order(n);
        let step = symmetry.step();
        let tallies = self.map_shards(shards, |mut walker| {
            let mut tally = ShardTally { seen: 0, orbits: 0, kept: Vec::new() };
            while let Some(p) = walker.next_partners() {
                if class == DiagramClass::N && is_o_partners(p) {
                    continue;
                }
                tally.seen += 1;
                if let Some(stabilizer) = least_member_stabilizer(p, step) {
                    tally.orbits += 1;
                    if keep_orbits {
                        tally.kept.push(Orbit {
                            representative: Gluing::from_partners(p.to_vec()),
                            size: group_order / stabilizer,
                            stabilizer,
                        });
                    }
                }
            }
            let shards_done = done.fetch_add(1, AtomicOrdering::Relaxed) as usize + 1;
            let processed = processed.fetch_add(tally.seen, AtomicOrdering::Relaxed) + tally.seen;
            let orbits = found.fetch_add(tally.orbits, AtomicOrdering::Relaxed) + tally.orbits;
            progress(Progress { shards_done, shards_total, processed, orbits });
            tally
        })?;
        let total: u64 = tallies.iter().map(|t| t.seen).sum();
        let orbit_count: u64 = tallies.iter().map(|t| t.orbits).sum();
        let orbits = keep_orbits.then(|| tallies.into_iter().flat_map(|t| t.kept).collect());
        Ok(OrbitCensus {
            n,
            class,
            symmetry,
            orbit_count: orbit_count.into(),
            total_gluings: total.into(),
            orbits,
        })
    }

    /// Number of gluings in `class` fixed by the rotation by `k`, which must
    /// be even and in `1..=2n`.
    pub fn count_fixed(&self, n: usize, k: usize, class: DiagramClass) -> Result<FixedPointCount> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if k == 0 || k > 2 * n {
            return Err(Error::RotationOutOfRange { k, max: 2 * n });
        }
        if k % 2 == 1 {
            return Err(Error::OddRotation(k));
        }
        let count = self.count_fixed_any(n, k, class)?;
        Ok(FixedPointCount { n, k, class, count })
    }

    /// Like [`Enumerator::count_fixed`] but for any shift, odd or even, as
    /// needed for uncolored diagrams.
    pub fn count_fixed_any(&self, n: usize, k: usize, class: DiagramClass) -> Result<BigUint> {
        self.check_budget(n, class)?;
        let counts = self.map_shards(Self::shards(n, class), |mut walker| {
            let mut count = 0u64;
            while let Some(p) = walker.next_partners() {
                if class == DiagramClass::N && is_o_partners(p) {
                    continue;
                }
                if is_fixed_by(p, k) {
                    count += 1;
                }
            }
            count
        })?;
        Ok(counts.into_iter().sum::<u64>().into())
    }

    /// Fixed-point counts for every even shift `2, 4, ..., 2n` in one scan.
    pub fn fixed_point_profile(&self, n: usize, class: DiagramClass) -> Result<Vec<BigUint>> {
        self.check_budget(n, class)?;
        let profiles = self.map_shards(Self::shards(n, class), |mut walker| {
            let mut counts = vec![0u64; n];
            while let Some(p) = walker.next_partners() {
                if class == DiagramClass::N && is_o_partners(p) {
                    continue;
                }
                for (m, c) in counts.iter_mut().enumerate() {
                    if is_fixed_by(p, 2 * (m + 1)) {
                        *c += 1;
                    }
                }
            }
            counts
        })?;
        Ok((0..n)
            .map(|m| profiles.iter().map(|c| c[m]).sum::<u64>().into())
            .collect())
    }

    /// Checks that the average number of fixed points over the even
    /// rotations equals the number of orbits found by the census.
    pub fn burnside_check(&self, n: usize, class: DiagramClass) -> Result<bool> {
        let profile = self.fixed_point_profile(n, class)?;
        let sum: BigUint = profile.iter().sum();
        let census = self.orbit_census(n, class, false)?;
        Ok(sum == census.orbit_count * BigUint::from(n))
    }
}

fn is_o_partners(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &q)| (i ^ q) & 1 == 1)
}

/// `Some(stabilizer order)` when `p` is the least member of its orbit under
/// shifts by multiples of `step`, `None` otherwise.
#[inline]
fn least_member_stabilizer(p: &[usize], step: usize) -> Option<usize> {
    let mut stabilizer = 1;
    for k in (step..p.len()).step_by(step) {
        match compare_rotation(p, k) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => stabilizer += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    Some(stabilizer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ColorDiagram;

    fn strings(it: Gluings) -> Vec<String> {
        it.map(|g| g.to_string()).collect()
    }

    #[test]
    fn small_streams() {
        assert_eq!(strings(enumerate_gluings(1)), vec!["(1,2)"]);
        assert_eq!(strings(enumerate_gluings(2)), vec!["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        assert_eq!(strings(enumerate_o_gluings(2)), vec!["(1,2)(3,4)", "(1,4)(2,3)"]);
        assert_eq!(enumerate_gluings(6).count(), 10395);
        assert_eq!(enumerate_o_gluings(3).count(), 6);
        assert_eq!(enumerate_gluings(0).count(), 0);
    }

    #[test]
    fn streams_are_strictly_increasing() {
        for n in 1..=5 {
            let all: Vec<_> = enumerate_gluings(n).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            let o: Vec<_> = enumerate_o_gluings(n).collect();
            assert!(o.windows(2).all(|w| w[0] < w[1]));
            assert!(o.iter().all(|g| ColorDiagram::new(g.clone()).classify() == DiagramClass::O));
        }
    }

    #[test]
    fn census_examples() {
        let e = Enumerator::new();
        assert_eq!(e.orbit_census(2, DiagramClass::All, false).unwrap().orbit_count, 3u32.into());
        assert_eq!(e.orbit_census(4, DiagramClass::O, false).unwrap().orbit_count, 10u32.into());
        assert_eq!(e.orbit_census(3, DiagramClass::N, false).unwrap().orbit_count, 3u32.into());
    }

    #[test]
    fn census_keeps_orbit_details() {
        let c = Enumerator::new().orbit_census(3, DiagramClass::All, true).unwrap();
        let orbits = c.orbits.unwrap();
        assert_eq!(orbits.len(), 7);
        assert_eq!(orbits.iter().map(|o| o.size).sum::<usize>(), 15);
        assert!(orbits.iter().all(|o| o.size * o.stabilizer == 3));
        assert_eq!(orbits[0].representative.to_string(), "(1,2)(3,4)(5,6)");
        assert_eq!(orbits[0].stabilizer, 3);
    }

    #[test]
    fn fixed_examples() {
        let e = Enumerator::new();
        assert_eq!(e.count_fixed(3, 2, DiagramClass::O).unwrap().count, 3u32.into());
        assert_eq!(e.count_fixed(2, 2, DiagramClass::All).unwrap().count, 3u32.into());
        for n in 1..=6 {
            let total = double_factorial(2 * n as i64 - 1).unwrap();
            assert_eq!(e.count_fixed(n, 2 * n, DiagramClass::All).unwrap().count, total);
        }
        assert_eq!(e.count_fixed(3, 3, DiagramClass::All), Err(Error::OddRotation(3)));
        assert!(matches!(e.count_fixed(3, 8, DiagramClass::All), Err(Error::RotationOutOfRange { .. })));
    }

    #[test]
    fn burnside_examples() {
        let e = Enumerator::new();
        assert!(e.burnside_check(2, DiagramClass::All).unwrap());
        assert!(e.burnside_check(1, DiagramClass::All).unwrap());
        assert!(e.burnside_check(5, DiagramClass::O).unwrap());
        assert_eq!(e.orbit_census(5, DiagramClass::O, false).unwrap().orbit_count, 28u32.into());
    }

    #[test]
    fn budget_is_enforced() {
        let e = Enumerator::new().with_budget(100);
        assert!(e.orbit_census(4, DiagramClass::O, false).is_ok());
        let err = e.orbit_census(4, DiagramClass::All, false).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { required: 105u32.into(), budget: 100 });
        // the N class is filtered out of the full stream
        assert!(e.orbit_census(4, DiagramClass::N, false).is_err());
        assert!(e.count_fixed(4, 2, DiagramClass::All).is_err());
    }
}
