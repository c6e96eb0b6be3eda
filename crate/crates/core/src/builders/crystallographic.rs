//! The maximal split crystallographic quotient: a five-face fundamental
//! polyhedron whose top and bottom triangles fold in half along π-rotation
//! axes. Three quadrilateral sides are mirrors; the folded triangles become
//! interior faces; the two rotation axes become interior edges with cyclic
//! Z2 stabilizer.
//!
//! Quotient cells, with the reference charts used for the inclusions:
//! vertices `va`, `vb` (corners on a rotation axis, stabilizer D3 × Z2),
//! `vc`, `vd` (corners identified with their fold partners, D3), `ve`, `vf`
//! (axis endpoints at edge midpoints, Klein). The fold rotation through
//! `ve` preserves the mirror plane of side `a` and swaps the other two
//! mirrors; the rotation through `vf` preserves side `b` and swaps sides
//! `a` and `c`. That conjugation pattern fixes all generator images below.

use crate::complex::{Incidence, OrbitCell, OrbitComplex};
use crate::error::ComplexError;
use crate::group::{FiniteGroup, GroupHom};
use crate::perm::Permutation;

use super::incidence;

pub fn crystallographic_sym() -> Result<OrbitComplex, ComplexError> {
    let d3 = FiniteGroup::dihedral(3)?;
    let d3z2 = FiniteGroup::dihedral_times_z2(3)?;
    let klein = FiniteGroup::klein();
    let z2 = FiniteGroup::cyclic(2);
    let triv = FiniteGroup::trivial();

    // Reflection generators of the D3 factors and the central involution.
    let big0 = d3z2.generators()[0].clone();
    let big1 = d3z2.generators()[1].clone();
    let big_z = d3z2.generators()[2].clone();
    // The third reflection of the D3 factor, conjugate of one generator by
    // the other; the fold rotation maps into D3 × Z2 as (third reflection)·z.
    let third = big0.compose(&big1).compose(&big0);
    let rotation_image = third.compose(&big_z);
    let small0 = d3.generators()[0].clone();
    let small1 = d3.generators()[1].clone();

    let cells = vec![
        OrbitCell {
            id: "va".into(),
            dim: 0,
            stabilizer: d3z2.clone(),
        },
        OrbitCell {
            id: "vb".into(),
            dim: 0,
            stabilizer: d3z2.clone(),
        },
        OrbitCell {
            id: "vc".into(),
            dim: 0,
            stabilizer: d3.clone(),
        },
        OrbitCell {
            id: "vd".into(),
            dim: 0,
            stabilizer: d3.clone(),
        },
        OrbitCell {
            id: "ve".into(),
            dim: 0,
            stabilizer: klein.clone(),
        },
        OrbitCell {
            id: "vf".into(),
            dim: 0,
            stabilizer: klein.clone(),
        },
        // Half-sides of the folded triangles (mirror Z2 stabilizers).
        OrbitCell {
            id: "e_cm2".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "e_bc".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "e_ad".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "e_dm5".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        // The two fold axes (rotation Z2 stabilizers, interior edges).
        OrbitCell {
            id: "e_axis_top".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "e_axis_bot".into(),
            dim: 1,
            stabilizer: z2.clone(),
        },
        // The three mirror-intersection edges (stabilizer D3).
        OrbitCell {
            id: "e_ca".into(),
            dim: 1,
            stabilizer: d3.clone(),
        },
        OrbitCell {
            id: "e_dc".into(),
            dim: 1,
            stabilizer: d3.clone(),
        },
        OrbitCell {
            id: "e_db".into(),
            dim: 1,
            stabilizer: d3.clone(),
        },
        // Three mirror quadrilaterals and the two folded triangles.
        OrbitCell {
            id: "side_a".into(),
            dim: 2,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "side_b".into(),
            dim: 2,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "side_c".into(),
            dim: 2,
            stabilizer: z2.clone(),
        },
        OrbitCell {
            id: "top_tri".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "bot_tri".into(),
            dim: 2,
            stabilizer: triv.clone(),
        },
        OrbitCell {
            id: "solid".into(),
            dim: 3,
            stabilizer: triv.clone(),
        },
    ];

    let into_d3 = |image: &Permutation| {
        GroupHom::from_perms(z2.clone(), d3.clone(), std::slice::from_ref(image))
    };
    let into_d3z2 = |image: &Permutation| {
        GroupHom::from_perms(z2.clone(), d3z2.clone(), std::slice::from_ref(image))
    };
    let into_klein = |image: &Permutation| {
        GroupHom::from_perms(z2.clone(), klein.clone(), std::slice::from_ref(image))
    };
    let kg0 = klein.generators()[0].clone();
    let kg1 = klein.generators()[1].clone();
    // D3 edge groups into the corner stabilizers; generator order is
    // (mirror listed first in the edge id, the other mirror).
    let d3_id = GroupHom::identity(d3.clone());
    let d3_swap = GroupHom::from_perms(d3.clone(), d3.clone(), &[small1.clone(), small0.clone()])?;
    let d3_into_big =
        GroupHom::from_perms(d3.clone(), d3z2.clone(), &[big0.clone(), big1.clone()])?;

    let mut incidences: Vec<Incidence> = Vec::new();
    let mut push = |inc: Incidence| incidences.push(inc);

    // Edge endpoints. Mirror half-side stabilizers include identically into
    // the Klein vertices (reflection component) and as a reflection into the
    // corner groups; the fold axes include as the rotation component at the
    // midpoint and as (reflection)·z at the big corner they reach.
    push(incidence("e_cm2", "ve", 1, into_klein(&kg0)?));
    push(incidence("e_cm2", "vc", -1, into_d3(&small0)?));
    push(incidence("e_bc", "vc", 1, into_d3(&small1)?));
    push(incidence("e_bc", "vb", -1, into_d3z2(&big1)?));
    push(incidence(
        "e_axis_top",
        "vb",
        1,
        into_d3z2(&rotation_image)?,
    ));
    push(incidence("e_axis_top", "ve", -1, into_klein(&kg1)?));
    push(incidence("e_ad", "vd", 1, into_d3(&small1)?));
    push(incidence("e_ad", "va", -1, into_d3z2(&big0)?));
    push(incidence("e_dm5", "vf", 1, into_klein(&kg0)?));
    push(incidence("e_dm5", "vd", -1, into_d3(&small0)?));
    push(incidence("e_axis_bot", "vf", 1, into_klein(&kg1)?));
    push(incidence(
        "e_axis_bot",
        "va",
        -1,
        into_d3z2(&rotation_image)?,
    ));
    push(incidence("e_ca", "va", 1, d3_into_big.clone()));
    push(incidence("e_ca", "vc", -1, d3_id.clone()));
    push(incidence("e_dc", "vc", 1, d3_id.clone()));
    push(incidence("e_dc", "vd", -1, d3_swap.clone()));
    push(incidence("e_db", "vb", 1, d3_into_big.clone()));
    push(incidence("e_db", "vd", -1, d3_id.clone()));

    // Mirror faces. Each includes into its boundary edges as its own
    // reflection; along identified charts the fold rotations carry one
    // mirror to another, which is why `side_a` meets `e_dc` in the first
    // generator slot and `side_b` in the second.
    let z2_id = GroupHom::identity(z2.clone());
    let first_in_d3 = GroupHom::from_perms(z2.clone(), d3.clone(), std::slice::from_ref(&small0))?;
    let second_in_d3 = GroupHom::from_perms(z2.clone(), d3.clone(), std::slice::from_ref(&small1))?;

    push(incidence("side_a", "e_ca", 1, first_in_d3.clone()));
    push(incidence("side_a", "e_ad", 1, z2_id.clone()));
    push(incidence("side_a", "e_dc", 1, first_in_d3.clone()));
    push(incidence("side_a", "e_cm2", 1, z2_id.clone()));
    push(incidence("side_a", "e_cm2", -1, z2_id.clone()));

    push(incidence("side_b", "e_dc", -1, second_in_d3.clone()));
    push(incidence("side_b", "e_db", 1, first_in_d3.clone()));
    push(incidence("side_b", "e_bc", 1, z2_id.clone()));
    push(incidence("side_b", "e_dm5", 1, z2_id.clone()));
    push(incidence("side_b", "e_dm5", -1, z2_id.clone()));

    push(incidence("side_c", "e_ca", 1, second_in_d3.clone()));
    push(incidence("side_c", "e_ad", 1, z2_id.clone()));
    push(incidence("side_c", "e_db", 1, second_in_d3.clone()));
    push(incidence("side_c", "e_bc", 1, z2_id.clone()));

    // Folded triangles: interior faces with trivial stabilizer.
    let t_z2 = GroupHom::from_trivial(z2.clone());
    let t_triv = GroupHom::from_trivial(triv.clone());
    push(incidence("top_tri", "e_cm2", 1, t_z2.clone()));
    push(incidence("top_tri", "e_axis_top", 1, t_z2.clone()));
    push(incidence("top_tri", "e_bc", 1, t_z2.clone()));
    push(incidence("bot_tri", "e_ad", 1, t_z2.clone()));
    push(incidence("bot_tri", "e_dm5", 1, t_z2.clone()));
    push(incidence("bot_tri", "e_axis_bot", -1, t_z2.clone()));

    // The solid cell meets each mirror once; the folded triangles pair up
    // with reversed orientation and contribute net zero.
    push(incidence("solid", "side_a", 1, t_z2.clone()));
    push(incidence("solid", "side_b", 1, t_z2.clone()));
    push(incidence("solid", "side_c", -1, t_z2.clone()));
    push(incidence("solid", "top_tri", 0, t_triv.clone()));
    push(incidence("solid", "bot_tri", 0, t_triv));

    OrbitComplex::new(cells, incidences)
}
