//! Human-readable report rendering. The reports spell out the intermediate
//! quantities (boundary counts, the auxiliary 2-complex, the Euler
//! characteristic) so the derivation of each rank can be followed step by
//! step.

use std::fmt::Write;

use orbk_core::bredon::BredonComplex;
use orbk_core::{KTheoryReport, OrbitComplex, ValidationReport};

fn census(complex: &OrbitComplex) -> String {
    format!(
        "{} vertices, {} edges, {} faces, {} solid cells",
        complex.cells_of_dim(0).len(),
        complex.cells_of_dim(1).len(),
        complex.cells_of_dim(2).len(),
        complex.cells_of_dim(3).len(),
    )
}

pub fn validation(complex: &OrbitComplex, report: &ValidationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cells: {}", census(complex));
    if report.is_valid() {
        let _ = writeln!(out, "validation: OK");
    } else {
        let _ = writeln!(out, "validation: FAILED");
        for issue in &report.issues {
            let _ = writeln!(out, "  - {issue}");
        }
    }
    let _ = write!(
        out,
        "fast path (single 3-cell orbit): {}",
        if report.fast_path {
            "eligible"
        } else {
            "not eligible"
        }
    );
    out
}

pub fn fast(complex: &OrbitComplex, k: &KTheoryReport) -> String {
    let class = complex
        .classify_boundary()
        .expect("classification succeeded during compute");
    let b2y = complex.betti2_of_2complex(&class.y);
    let mut out = String::new();
    let _ = writeln!(out, "cells: {}", census(complex));
    let _ = writeln!(out, "boundary classification:");
    let _ = writeln!(
        out,
        "  components: {} ({} dihedral, {} non-dihedral)",
        class.components.len(),
        class.components.iter().filter(|c| c.dihedral).count(),
        class.components.iter().filter(|c| !c.dihedral).count(),
    );
    let _ = writeln!(
        out,
        "  s = {}, t = {}, t' = {}",
        class.s, class.t, class.t_prime
    );
    let _ = writeln!(
        out,
        "  closed orientable quotient: {}",
        if k.classification.closed_orientable {
            "yes"
        } else {
            "no"
        }
    );
    let _ = writeln!(
        out,
        "  beta2(Y) = {b2y} (Y has {} faces)",
        class.y.faces.len()
    );
    let _ = writeln!(out, "invariants:");
    let _ = writeln!(
        out,
        "  beta0 = {:<4} merged stabilizer conjugacy classes over the 1-skeleton",
        k.beta0
    );
    let _ = writeln!(out, "  beta1 = {:<4} beta0 + beta2 - beta3 - chi", k.beta1);
    let beta2_how = if k.classification.closed_orientable {
        "beta2(Y) for the closed orientable quotient".to_string()
    } else {
        format!(
            "s + t' + 2t + beta2(Y) - 1 = {} + {} + {} + {b2y} - 1",
            class.s,
            class.t_prime,
            2 * class.t
        )
    };
    let _ = writeln!(out, "  beta2 = {:<4} {beta2_how}", k.beta2);
    let beta3_how = if k.beta3 == 1 {
        "quotient is a closed orientable manifold"
    } else {
        "quotient is not a closed orientable manifold"
    };
    let _ = writeln!(out, "  beta3 = {:<4} {beta3_how}", k.beta3);
    let _ = writeln!(
        out,
        "  chi   = {:<4} alternating sum of stabilizer class counts",
        k.chi
    );
    let _ = writeln!(out, "K-theory ranks (rationalized):");
    let _ = writeln!(out, "  K0 rank = {:<4} beta0 + beta2", k.k0_rank);
    let _ = write!(out, "  K1 rank = {:<4} beta1 + beta3", k.k1_rank);
    out
}

pub fn oracle(chain: &BredonComplex, betas: [usize; 4]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "chain dimensions by degree: {:?} (sum of stabilizer class counts per cell)",
        chain.dims
    );
    let ranks: Vec<usize> = chain.differentials.iter().map(|d| d.rank()).collect();
    let _ = writeln!(out, "differential ranks d1, d2, d3: {ranks:?}");
    let _ = write!(out, "homology ranks (beta0..beta3): {betas:?}");
    out
}
