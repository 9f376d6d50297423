//! Black and white boundary cycles of a color diagram and the topological
//! type of the surface obtained by thickening it.
//!
//! The diagram is read as a ribbon graph with a single vertex disk whose
//! boundary carries the pattern arcs, and one band per chord. A chord whose
//! endpoints have equal parity is a twisted band: walking across it reverses
//! the direction of travel along the circle. Every boundary component is
//! monochrome, so it is either a b-cycle or a w-cycle.

use std::fmt;

use serde::Serialize;

use crate::diagram::{ArcColor, ColorDiagram, DiagramClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Step {
    Arc { from: usize, to: usize, color: ArcColor },
    Chord { from: usize, to: usize },
}

/// A closed alternating sequence `arc, chord, arc, chord, ...`; the step
/// after the last chord is the first arc again.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub color: ArcColor,
    pub steps: Vec<Step>,
}

impl Cycle {
    /// Arcs in traversal order, as `(from, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.steps.iter().filter_map(|s| match *s {
            Step::Arc { from, to, .. } => Some((from, to)),
            Step::Chord { .. } => None,
        })
    }

    pub fn arc_count(&self) -> usize {
        self.arcs().count()
    }
}

impl fmt::Display for Cycle {
    /// Arcs print as `[a,b]`, chords as `(a,b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step {
                Step::Arc { from, to, .. } => write!(f, "[{from},{to}]")?,
                Step::Chord { from, to } => write!(f, "({from},{to})")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub black: Vec<Cycle>,
    pub white: Vec<Cycle>,
}

impl CycleDecomposition {
    /// `(number of b-cycles, number of w-cycles)`.
    pub fn lambda(&self) -> (usize, usize) {
        (self.black.len(), self.white.len())
    }

    pub fn total(&self) -> usize {
        self.black.len() + self.white.len()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.black.iter().enumerate() {
            writeln!(f, "Cb{}={c}", i + 1)?;
        }
        for (i, c) in self.white.iter().enumerate() {
            writeln!(f, "Cw{}={c}", i + 1)?;
        }
        Ok(())
    }
}

/// Traces every b-cycle and w-cycle.
///
/// Each cycle starts at the least-numbered unvisited arc of its color (arcs
/// are numbered by their clockwise starting point) and first runs clockwise.
/// From the end of an arc the walk crosses the chord there, then continues
/// along the same-colored arc at the far end; a same-parity chord flips the
/// direction of travel.
pub fn trace_cycles(diagram: &ColorDiagram) -> CycleDecomposition {
    CycleDecomposition {
        black: trace_color(diagram, ArcColor::Black),
        white: trace_color(diagram, ArcColor::White),
    }
}

fn trace_color(diagram: &ColorDiagram, color: ArcColor) -> Vec<Cycle> {
    let gluing = diagram.gluing();
    let points = gluing.points();
    let step = |p: usize, clockwise: bool| {
        if clockwise {
            p % points + 1
        } else {
            (p + points - 2) % points + 1
        }
    };
    let first_start = match color {
        ArcColor::Black => 1,
        ArcColor::White => 2,
    };
    // indexed by the arc's clockwise start point
    let mut visited = vec![false; points + 1];
    let mut cycles = Vec::new();
    for start in (first_start..=points).step_by(2) {
        if visited[start] {
            continue;
        }
        let mut steps = Vec::new();
        let (mut from, mut clockwise) = (start, true);
        loop {
            let to = step(from, clockwise);
            visited[if clockwise { from } else { to }] = true;
            steps.push(Step::Arc { from, to, color });
            let across = gluing.partner(to);
            steps.push(Step::Chord { from: to, to: across });
            if (to ^ across) & 1 == 0 {
                clockwise = !clockwise;
            }
            from = across;
            debug_assert_eq!(step(from, clockwise), diagram.arc_mate(from, color));
            if from == start && clockwise {
                break;
            }
        }
        cycles.push(Cycle { color, steps });
    }
    cycles
}

/// `(λ_b, λ_w)`: the number of black and white boundary cycles.
pub fn lambda(diagram: &ColorDiagram) -> (usize, usize) {
    trace_cycles(diagram).lambda()
}

/// Topological type of the thickened diagram: one disk and `n` bands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceType {
    pub orientable: bool,
    pub boundary_components: usize,
    pub euler_characteristic: i64,
    /// Orientable genus when `orientable`, otherwise the cross-cap number.
    pub genus: u64,
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "orientable, genus {}", self.genus)?;
        } else {
            write!(f, "non-orientable, cross-cap number {}", self.genus)?;
        }
        write!(
            f,
            ", {} boundary components, euler characteristic {}",
            self.boundary_components, self.euler_characteristic
        )
    }
}

pub fn surface_type(diagram: &ColorDiagram) -> Result<SurfaceType> {
    let (black, white) = lambda(diagram);
    classify_surface(diagram.n(), diagram.classify() == DiagramClass::O, black + white)
}

/// Solves `chi = 2 - 2g - b` (orientable) or `chi = 2 - k - b` for the
/// genus, with `chi = 1 - n`.
pub fn classify_surface(n: usize, orientable: bool, boundary: usize) -> Result<SurfaceType> {
    let euler = 1 - n as i64;
    let deficit = 2 - euler - boundary as i64;
    let genus = if orientable {
        if deficit < 0 || deficit % 2 != 0 {
            return Err(Error::InconsistentTopology(format!(
                "orientable surface with chi = {euler} and {boundary} boundary components"
            )));
        }
        deficit / 2
    } else {
        if deficit < 1 {
            return Err(Error::InconsistentTopology(format!(
                "non-orientable surface with chi = {euler} and {boundary} boundary components"
            )));
        }
        deficit
    };
    Ok(SurfaceType {
        orientable,
        boundary_components: boundary,
        euler_characteristic: euler,
        genus: genus as u64,
    })
}
