//! Benchmarks for the elimination and character oracles live in `benches/`.
