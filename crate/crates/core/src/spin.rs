//! One-vertex color spin-graphs and their correspondence with color
//! diagrams.
//!
//! The `2n` half-edges around the vertex become the points of the diagram
//! (in cyclic order), the loops become chords, and the black/white spin
//! pairs between neighboring half-edges become the colored arcs.

use std::collections::{BTreeMap, HashMap};

use crate::diagram::{ArcColor, ColorDiagram, Gluing};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinPartners {
    pub black: u64,
    pub white: u64,
}

/// A graph with one vertex of degree `2n`, `n` loops, and a color spin at
/// the vertex. Half-edges carry arbitrary distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinGraph {
    cyclic_order: Vec<u64>,
    loops: Vec<(u64, u64)>,
    spin: BTreeMap<u64, SpinPartners>,
}

impl SpinGraph {
    /// Validates and builds a spin-graph.
    ///
    /// Every half-edge needs one black and one white partner, distinct from
    /// each other and from itself, and the pairs must be symmetric. The
    /// alternating walk black, white, black, ... has to close into a single
    /// cycle through all `2n` half-edges, and each spin pair must join
    /// neighbors in the cyclic order (spin pairs bound the sectors at the
    /// vertex).
    pub fn new(
        cyclic_order: Vec<u64>,
        loops: Vec<(u64, u64)>,
        spin: BTreeMap<u64, SpinPartners>,
    ) -> Result<SpinGraph> {
        let invalid = |msg: String| Err(Error::InvalidSpin(msg));
        let size = cyclic_order.len();
        if size == 0 || !size.is_multiple_of(2) {
            return invalid(format!("vertex degree {size} is not a positive even number"));
        }
        let position: HashMap<u64, usize> =
            cyclic_order.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        if position.len() != size {
            return invalid("half-edge labels repeat in the cyclic order".into());
        }
        if loops.len() * 2 != size {
            return invalid(format!("{} loops for {size} half-edges", loops.len()));
        }
        let mut on_loop = HashMap::new();
        for &(a, b) in &loops {
            for h in [a, b] {
                if !position.contains_key(&h) {
                    return invalid(format!("loop end {h} is not a half-edge"));
                }
                if on_loop.insert(h, ()).is_some() {
                    return invalid(format!("half-edge {h} lies on two loops"));
                }
            }
        }
        if spin.len() != size || spin.keys().any(|h| !position.contains_key(h)) {
            return invalid("spin must assign partners to exactly the half-edges".into());
        }
        for (&h, p) in &spin {
            // with a single loop both sectors join the same two half-edges
            if (p.black == p.white && size > 2) || p.black == h || p.white == h {
                return invalid(format!("half-edge {h} needs two different partners"));
            }
            let back = |q: u64, color: ArcColor| {
                spin.get(&q).map(|s| match color {
                    ArcColor::Black => s.black,
                    ArcColor::White => s.white,
                })
            };
            if back(p.black, ArcColor::Black) != Some(h) || back(p.white, ArcColor::White) != Some(h) {
                return invalid(format!("spin pairs at {h} are not symmetric"));
            }
            let i = position[&h];
            for q in [p.black, p.white] {
                let j = position[&q];
                if (i + 1) % size != j && (j + 1) % size != i {
                    return invalid(format!("spin pair ({h},{q}) does not bound a sector"));
                }
            }
        }
        let start = cyclic_order[0];
        let (mut cur, mut len) = (start, 0);
        loop {
            cur = spin[&spin[&cur].black].white;
            len += 2;
            if cur == start {
                break;
            }
        }
        if len != size {
            return invalid(format!("alternating spin sequence has length {len}, expected {size}"));
        }
        Ok(SpinGraph { cyclic_order, loops, spin })
    }

    pub fn n(&self) -> usize {
        self.loops.len()
    }

    pub fn cyclic_order(&self) -> &[u64] {
        &self.cyclic_order
    }

    pub fn loops(&self) -> &[(u64, u64)] {
        &self.loops
    }

    pub fn spin(&self, half_edge: u64) -> Option<SpinPartners> {
        self.spin.get(&half_edge).copied()
    }

    /// Orientation-preserving isomorphism: a relabeling that rotates the
    /// cyclic order and carries loops to loops and black pairs to black
    /// pairs.
    pub fn is_isomorphic(&self, other: &SpinGraph) -> bool {
        let size = self.cyclic_order.len();
        if size != other.cyclic_order.len() {
            return false;
        }
        let their_loops: HashMap<u64, u64> =
            other.loops.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        (0..size).any(|shift| {
            let map: HashMap<u64, u64> = (0..size)
                .map(|i| (self.cyclic_order[i], other.cyclic_order[(i + shift) % size]))
                .collect();
            self.loops.iter().all(|&(a, b)| their_loops[&map[&a]] == map[&b])
                && self.spin.iter().all(|(h, p)| other.spin[&map[h]].black == map[&p.black])
        })
    }

    /// Whether the two ends of every loop sit at cyclic positions `i`, `j`
    /// with `i + j` odd; this holds exactly for spin-graphs of O-diagrams.
    pub fn has_odd_loop_positions(&self) -> bool {
        let position: HashMap<u64, usize> =
            self.cyclic_order.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        self.loops.iter().all(|(a, b)| (position[a] + position[b]) % 2 == 1)
    }
}

/// Half-edges are labeled `1..=2n` in cyclic order; label `i` is point `i`.
pub fn diagram_to_spin_graph(diagram: &ColorDiagram) -> SpinGraph {
    let points = diagram.gluing().points();
    let cyclic_order: Vec<u64> = (1..=points as u64).collect();
    let loops = diagram.gluing().chords().map(|(a, b)| (a as u64, b as u64)).collect();
    let spin = (1..=points)
        .map(|p| {
            let partners = SpinPartners {
                black: diagram.arc_mate(p, ArcColor::Black) as u64,
                white: diagram.arc_mate(p, ArcColor::White) as u64,
            };
            (p as u64, partners)
        })
        .collect();
    SpinGraph { cyclic_order, loops, spin }
}

/// Numbers the half-edges along the cyclic order, starting so that the
/// first sector is black, and reads the loops off as chords.
pub fn spin_graph_to_diagram(graph: &SpinGraph) -> ColorDiagram {
    let order = &graph.cyclic_order;
    let size = order.len();
    let offset = if graph.spin[&order[0]].black == order[1 % size] { 0 } else { 1 };
    let point: HashMap<u64, usize> = order
        .iter()
        .enumerate()
        .map(|(i, &h)| (h, (i + size - offset) % size + 1))
        .collect();
    let pairs: Vec<_> = graph.loops.iter().map(|(a, b)| (point[a], point[b])).collect();
    let gluing = Gluing::normalize(&pairs).expect("validated spin-graph loops form a matching");
    ColorDiagram::new(gluing)
}
