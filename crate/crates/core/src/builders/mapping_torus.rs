//! Mapping tori of self-maps of the 2-torus: the torsion-free corner of the
//! corpus. The fundamental group is Z² ⋊_α Z for α in GL2(Z).

use crate::complex::{OrbitCell, OrbitComplex};
use crate::error::ComplexError;
use crate::group::FiniteGroup;

use super::trivial_incidence;

fn det(alpha: [[i64; 2]; 2]) -> i64 {
    alpha[0][0] * alpha[1][1] - alpha[0][1] * alpha[1][0]
}

fn trace(alpha: [[i64; 2]; 2]) -> i64 {
    alpha[0][0] + alpha[1][1]
}

/// Second Betti number of the mapping torus of the torus self-map induced by
/// `alpha`, from the five-case trace/determinant classification.
pub fn expected_mapping_torus_beta2(alpha: [[i64; 2]; 2]) -> Result<usize, ComplexError> {
    let d = det(alpha);
    if d.abs() != 1 {
        return Err(ComplexError::Invalid(format!(
            "mapping torus matrix must have determinant +-1, got {d}"
        )));
    }
    let identity = alpha == [[1, 0], [0, 1]];
    Ok(match (d, trace(alpha)) {
        _ if identity => 3,
        (1, 2) => 2,
        (1, _) => 1,
        (-1, 0) => 1,
        _ => 0,
    })
}

/// CW structure on the mapping torus with one vertex, edges `a`, `b`, `t`,
/// the torus 2-cell plus the two annulus 2-cells swept by `a` and `b`, and
/// one 3-cell. The annulus glued along `t x t⁻¹ α(x)⁻¹` leaves attaching
/// degrees `Id − α` on the `(a, b)` edges. The 3-cell attaches with total
/// degree zero on every face when `det α = 1`; when `det α = −1` the fiber
/// orientation is reversed and the torus face is covered twice coherently.
pub fn mapping_torus(alpha: [[i64; 2]; 2]) -> Result<OrbitComplex, ComplexError> {
    let d = det(alpha);
    if d.abs() != 1 {
        return Err(ComplexError::Invalid(format!(
            "mapping torus matrix must have determinant +-1, got {d}"
        )));
    }
    let triv = FiniteGroup::trivial();
    let cell = |id: &str, dim: u8| OrbitCell {
        id: id.to_string(),
        dim,
        stabilizer: triv.clone(),
    };
    let cells = vec![
        cell("v", 0),
        cell("a", 1),
        cell("b", 1),
        cell("t", 1),
        cell("f_torus", 2),
        cell("f_a", 2),
        cell("f_b", 2),
        cell("solid", 3),
    ];
    let mut incidences = Vec::new();
    for e in ["a", "b", "t"] {
        incidences.push(trivial_incidence(e, "v", 1, &triv));
        incidences.push(trivial_incidence(e, "v", -1, &triv));
    }
    // Commutator boundary of the torus cell: everything cancels.
    incidences.push(trivial_incidence("f_torus", "a", 0, &triv));
    incidences.push(trivial_incidence("f_torus", "b", 0, &triv));
    incidences.push(trivial_incidence("f_a", "t", 0, &triv));
    incidences.push(trivial_incidence("f_a", "a", 1 - alpha[0][0], &triv));
    incidences.push(trivial_incidence("f_a", "b", -alpha[1][0], &triv));
    incidences.push(trivial_incidence("f_b", "t", 0, &triv));
    incidences.push(trivial_incidence("f_b", "a", -alpha[0][1], &triv));
    incidences.push(trivial_incidence("f_b", "b", 1 - alpha[1][1], &triv));
    let torus_degree = if d == 1 { 0 } else { 2 };
    incidences.push(trivial_incidence("solid", "f_torus", torus_degree, &triv));
    incidences.push(trivial_incidence("solid", "f_a", 0, &triv));
    incidences.push(trivial_incidence("solid", "f_b", 0, &triv));
    OrbitComplex::new(cells, incidences)
}
