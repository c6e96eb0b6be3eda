//! The fast combinatorial algorithm for the rationalized equivariant
//! K-homology ranks of a single-3-cell orbit complex.
//!
//! Degree 0 counts equivalence classes of stabilizer conjugacy classes
//! merged across the 1-skeleton; degree 3 is decided by closed-orientability
//! of the quotient; degree 2 reduces to boundary-component counting plus the
//! ordinary second Betti number of an explicit 2-complex; degree 1 falls out
//! of the Euler characteristic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{BoundaryClassification, OrbitComplex};
use crate::error::ComplexError;
use crate::unionfind::UnionFind;

/// Summary of the boundary classification carried in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub s: usize,
    pub t: usize,
    pub t_prime: usize,
    pub closed_orientable: bool,
}

/// The computed invariants of one complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KTheoryReport {
    pub beta0: usize,
    pub beta1: usize,
    pub beta2: usize,
    pub beta3: usize,
    pub chi: i64,
    pub k0_rank: usize,
    pub k1_rank: usize,
    pub classification: ClassificationSummary,
    pub fast_path: bool,
}

impl KTheoryReport {
    pub fn betas(&self) -> [usize; 4] {
        [self.beta0, self.beta1, self.beta2, self.beta3]
    }
}

/// Number of equivalence classes on the disjoint union of vertex-stabilizer
/// conjugacy classes, merged through every edge inclusion: for an edge `e`
/// with endpoint inclusions into vertices `v` and `w`, each conjugacy class
/// of the edge stabilizer identifies its images in the two vertex groups.
/// An edge with both endpoints on one vertex merges the two (possibly
/// different) inclusion images. Only the 1-skeleton participates.
pub fn beta0(c: &OrbitComplex) -> usize {
    // Deterministic node order: vertices sorted by id, classes in group order.
    let mut node_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut total = 0usize;
    for &vi in c.cells_of_dim(0) {
        for k in 0..c.cell(vi).stabilizer.class_count() {
            node_of.insert((vi, k), total);
            total += 1;
        }
    }
    let mut uf = UnionFind::new(total);
    for &ei in c.cells_of_dim(1) {
        let maps: Vec<(usize, Vec<usize>)> = c
            .incidences_of_cell(ei)
            .map(|inc| {
                let vi = c.cell_index(&inc.face).unwrap();
                (vi, inc.inclusion.class_map())
            })
            .collect();
        let classes = c.cell(ei).stabilizer.class_count();
        for k in 0..classes {
            for pair in maps.windows(2) {
                let (v_a, map_a) = &pair[0];
                let (v_b, map_b) = &pair[1];
                uf.union(node_of[&(*v_a, map_a[k])], node_of[&(*v_b, map_b[k])]);
            }
        }
    }
    uf.class_count()
}

/// 1 when the quotient is a closed orientable manifold, else 0.
pub fn beta3(c: &OrbitComplex) -> Result<usize, ComplexError> {
    Ok(if c.is_closed_orientable()? { 1 } else { 0 })
}

/// Degree-2 rank from the boundary classification: `beta2(Y)` in the closed
/// orientable case, `s + t' + 2t + beta2(Y) - 1` otherwise. A negative value
/// in the second branch means the input cannot come from a valid model.
pub fn beta2(c: &OrbitComplex) -> Result<usize, ComplexError> {
    let (value, _) = beta2_with_classification(c)?;
    Ok(value)
}

pub fn beta2_with_classification(
    c: &OrbitComplex,
) -> Result<(usize, BoundaryClassification), ComplexError> {
    let class = c.classify_boundary()?;
    let b2y = c.betti2_of_2complex(&class.y);
    let value = if c.is_closed_orientable()? {
        b2y
    } else {
        let raw = class.s as i64 + class.t_prime as i64 + 2 * class.t as i64 + b2y as i64 - 1;
        if raw < 0 {
            return Err(ComplexError::NegativeRank(format!(
                "s + t' + 2t + beta2(Y) - 1 = {raw}"
            )));
        }
        raw as usize
    };
    Ok((value, class))
}

/// Euler characteristic of the weighted chain complex: each cell contributes
/// (-1)^dim times the number of conjugacy classes of its stabilizer.
pub fn euler_characteristic(c: &OrbitComplex) -> i64 {
    c.cells()
        .iter()
        .map(|cell| {
            let sign = if cell.dim % 2 == 0 { 1 } else { -1 };
            sign * cell.stabilizer.class_count() as i64
        })
        .sum()
}

/// Degree-1 rank via the Euler characteristic identity
/// `beta1 = beta0 + beta2 - beta3 - chi`; a negative value is diagnostic of
/// invalid input, not clamped.
pub fn beta1(c: &OrbitComplex) -> Result<usize, ComplexError> {
    let b0 = beta0(c) as i64;
    let b2 = beta2(c)? as i64;
    let b3 = beta3(c)? as i64;
    let chi = euler_characteristic(c);
    let raw = b0 + b2 - b3 - chi;
    if raw < 0 {
        return Err(ComplexError::NegativeRank(format!(
            "beta0 + beta2 - beta3 - chi = {raw}"
        )));
    }
    Ok(raw as usize)
}

/// Runs the whole fast path and assembles the report:
/// `k0 = beta0 + beta2`, `k1 = beta1 + beta3`.
pub fn compute(c: &OrbitComplex) -> Result<KTheoryReport, ComplexError> {
    let b0 = beta0(c);
    let b3 = beta3(c)?;
    let (b2, class) = beta2_with_classification(c)?;
    let chi = euler_characteristic(c);
    let raw_b1 = b0 as i64 + b2 as i64 - b3 as i64 - chi;
    if raw_b1 < 0 {
        return Err(ComplexError::NegativeRank(format!(
            "beta0 + beta2 - beta3 - chi = {raw_b1}"
        )));
    }
    let b1 = raw_b1 as usize;
    Ok(KTheoryReport {
        beta0: b0,
        beta1: b1,
        beta2: b2,
        beta3: b3,
        chi,
        k0_rank: b0 + b2,
        k1_rank: b1 + b3,
        classification: ClassificationSummary {
            s: class.s,
            t: class.t,
            t_prime: class.t_prime,
            closed_orientable: c.is_closed_orientable()?,
        },
        fast_path: true,
    })
}
