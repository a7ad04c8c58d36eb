//! Benchmarks for the jya workspace live under `benches/`.
