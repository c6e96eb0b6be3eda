//! Quotient structure for the semidirect product of the integral Heisenberg
//! group by a Z4 symmetry, acting on nil-geometry. The fundamental prism
//! folds up to a closed orientable quotient with three vertices, six edges,
//! four faces and one solid cell.
//!
//! The attaching degrees below realize the stated cell census: two side
//! squares fold into cylinders joined along the `b` loop, the free end of
//! one cylinder wraps the `c` loop four times, the second cylinder is cut
//! into a hexagon and a triangle by a diagonal edge, and the remaining
//! square caps everything off through the diagonal with winding one.

use crate::complex::{Incidence, OrbitCell, OrbitComplex};
use crate::error::ComplexError;
use crate::group::{FiniteGroup, GroupHom};

use super::{incidence, trivial_incidence};

pub fn heisenberg_z4() -> Result<OrbitComplex, ComplexError> {
    let triv = FiniteGroup::trivial();
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);

    let cells = vec![
        OrbitCell {
            id: "A".into(),
            dim: 0,
            stabilizer: z4.clone(),
        },
        OrbitCell {
            id: "B".into(),
            dim: 0,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "C".into(),
            dim: 0,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "a_loop".into(),
            dim: 1,
            stabilizer: z4.clone(),
        },
        OrbitCell {
            id: "b_loop".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "c_loop".into(),
            dim: 1,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "ab".into(),
            dim: 1,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "bc".into(),
            dim: 1,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "bc_diag".into(),
            dim: 1,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "f_side".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "f_cap".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "f_hex".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "f_tri".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "solid".into(),
            dim: 3,
            stabilizer: triv.clone(),
        },
    ];

    let mut incidences: Vec<Incidence> = Vec::new();
    // Loop edges carry the full vertex stabilizer at both ends.
    for (val, hom) in [
        (1, GroupHom::identity(z4.clone())),
        (-1, GroupHom::identity(z4.clone())),
    ] {
        incidences.push(incidence("a_loop", "A", val, hom));
    }
    for (val, hom) in [
        (1, GroupHom::identity(z2.clone())),
        (-1, GroupHom::identity(z2.clone())),
    ] {
        incidences.push(incidence("b_loop", "B", val, hom));
    }
    incidences.push(trivial_incidence("c_loop", "C", 1, &triv));
    incidences.push(trivial_incidence("c_loop", "C", -1, &triv));
    incidences.push(trivial_incidence("ab", "B", 1, &z2));
    incidences.push(trivial_incidence("ab", "A", -1, &z4));
    incidences.push(trivial_incidence("bc", "C", 1, &triv));
    incidences.push(trivial_incidence("bc", "B", -1, &z2));
    incidences.push(trivial_incidence("bc_diag", "C", 1, &triv));
    incidences.push(trivial_incidence("bc_diag", "B", -1, &z2));

    // First cylinder: boundary word ab . b_loop . ab⁻¹ . a_loop⁻¹.
    incidences.push(trivial_incidence("f_side", "a_loop", -1, &z4));
    incidences.push(trivial_incidence("f_side", "b_loop", 1, &z2));
    incidences.push(trivial_incidence("f_side", "ab", 0, &triv));
    // Cap square: ab . bc . bc_diag⁻¹ . ab⁻¹, winding once around c_loop
    // after the cylinders collapse.
    incidences.push(trivial_incidence("f_cap", "bc", 1, &triv));
    incidences.push(trivial_incidence("f_cap", "bc_diag", -1, &triv));
    incidences.push(trivial_incidence("f_cap", "ab", 0, &triv));
    // Hexagon and triangle: the second cylinder, cut along the diagonal,
    // with its free boundary circle wrapping c_loop four times in total.
    incidences.push(trivial_incidence("f_hex", "b_loop", -1, &z2));
    incidences.push(trivial_incidence("f_hex", "c_loop", 3, &triv));
    incidences.push(trivial_incidence("f_hex", "bc", 1, &triv));
    incidences.push(trivial_incidence("f_hex", "bc_diag", -1, &triv));
    incidences.push(trivial_incidence("f_tri", "c_loop", 1, &triv));
    incidences.push(trivial_incidence("f_tri", "bc", -1, &triv));
    incidences.push(trivial_incidence("f_tri", "bc_diag", 1, &triv));
    // All face pairings reverse orientation: the solid cell attaches with
    // net degree zero everywhere and the quotient is closed orientable.
    for f in ["f_side", "f_cap", "f_hex", "f_tri"] {
        incidences.push(trivial_incidence("solid", f, 0, &triv));
    }

    OrbitComplex::new(cells, incidences)
}
