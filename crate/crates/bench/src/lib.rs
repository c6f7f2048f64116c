//! Benchmark-only crate; see `benches/matfuncs.rs`.
