//! Criterion benchmarks for `chord-census`; see `benches/census.rs`.
