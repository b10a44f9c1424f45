//! Benchmark workloads for `tricalc-core`; see `benches/calculus.rs`.
