//! Criterion benchmarks for qta-core live in `benches/`.
