//! Criterion benchmarks for polyperm-core; see `benches/`.
