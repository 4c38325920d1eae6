//! Benchmark-only crate; the measurements live in `benches/solvers.rs`.
//! Run them with `cargo bench -p maj-confine-bench`.
