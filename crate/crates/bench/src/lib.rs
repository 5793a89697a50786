//! Benchmark host crate; the measured kernels live in `benches/kernels.rs`.
