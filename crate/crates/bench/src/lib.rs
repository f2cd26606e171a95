//! Benchmark-only crate; see `benches/complex.rs`.
