//! Benchmark-only crate; see `benches/pipeline.rs`.
//!
//! Shared helpers for the benchmarks live here so the bench target stays a
//! thin criterion harness.

use orbk_core::builders;
use orbk_core::OrbitComplex;

/// The largest bundled inputs, used as benchmark subjects.
pub fn subjects() -> Vec<(&'static str, OrbitComplex)> {
    vec![
        ("lambda_8", builders::lambda_n(8).expect("valid n")),
        ("gamma_6", builders::gamma_n(6).expect("valid n")),
        (
            "crystallographic",
            builders::crystallographic_sym().expect("builds"),
        ),
    ]
}
