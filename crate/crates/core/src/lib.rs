//! Exact combinatorics of color chord diagrams over a fixed black/white
//! pattern. Brute-force orbit census under rotation sits next to the
//! closed-form counts, so each can be checked against the other.

pub mod counting;
pub mod cycles;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod serde_big;
pub mod spin;

pub use counting::{build_table, CountRow, CountTable};
pub use cycles::{lambda, surface_type, trace_cycles, Cycle, CycleDecomposition, Step, SurfaceType};
pub use diagram::{ArcColor, ColorDiagram, DiagramClass, Gluing, Rotation};
pub use enumerate::{
    enumerate_gluings, enumerate_o_gluings, Enumerator, FixedPointCount, Orbit, OrbitCensus, Progress,
    Symmetry, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use spin::{diagram_to_spin_graph, spin_graph_to_diagram, SpinGraph, SpinPartners};
