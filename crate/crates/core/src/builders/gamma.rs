//! Reflection family II: the Coxeter group of a hyperbolic combinatorial
//! cube (n ≥ 2). Eleven edges have dihedral angle π/3 or π/2; one marked
//! edge has angle π/n. Six corners carry S4, the two corners of the marked
//! edge carry D_n × Z2; the edge stabilizers are D3, the Klein group, and
//! D_n; every face is a mirror with stabilizer Z2.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{Incidence, OrbitCell, OrbitComplex};
use crate::error::ComplexError;
use crate::group::{FiniteGroup, GroupHom};
use crate::perm::Permutation;

use super::incidence;

/// Faces are numbered 1..=6; opposite pairs are (1,3), (2,4), (5,6). The
/// marked edge is (1,2); the five right-angle edges are (1,5), (1,6), (3,4),
/// (2,5), (2,6); the remaining six edges have angle π/3.
fn edge_order(n: usize, f: u8, g: u8) -> usize {
    match (f.min(g), f.max(g)) {
        (1, 2) => n,
        (1, 5) | (1, 6) | (3, 4) | (2, 5) | (2, 6) => 2,
        _ => 3,
    }
}

/// The eight corners as face triples, with their cube coordinates.
const CORNERS: [([u8; 3], [u8; 3]); 8] = [
    ([1, 4, 5], [0, 0, 0]),
    ([1, 4, 6], [1, 0, 0]),
    ([3, 4, 5], [0, 1, 0]),
    ([3, 4, 6], [1, 1, 0]),
    ([1, 2, 5], [0, 0, 1]),
    ([1, 2, 6], [1, 0, 1]),
    ([2, 3, 5], [0, 1, 1]),
    ([2, 3, 6], [1, 1, 1]),
];

fn corner_id(faces: [u8; 3]) -> String {
    format!("v{}{}{}", faces[0], faces[1], faces[2])
}

fn edge_id(f: u8, g: u8) -> String {
    format!("e{}{}", f.min(g), f.max(g))
}

pub fn gamma_n(n: usize) -> Result<OrbitComplex, ComplexError> {
    if n < 2 {
        return Err(ComplexError::Invalid(format!(
            "cube family needs n >= 2, got {n}"
        )));
    }
    let s4 = FiniteGroup::symmetric4();
    let d3 = FiniteGroup::dihedral(3)?;
    let klein = FiniteGroup::klein();
    let dn = FiniteGroup::dihedral(n)?;
    let dnz2 = FiniteGroup::dihedral_times_z2(n)?;
    let z2 = FiniteGroup::cyclic(2);
    let triv = FiniteGroup::trivial();

    // Reflection image of face `f` inside the stabilizer of each corner. At
    // an S4 corner the three mirrors map to the adjacent transpositions
    // (0 1), (1 2), (2 3) of the A3 diagram, the middle one being the face
    // that makes angle π/3 with both others. At a marked corner the two
    // faces of the marked edge map to the dihedral reflections and the third
    // face to the central involution.
    let mut vertex_group: BTreeMap<String, Arc<FiniteGroup>> = BTreeMap::new();
    let mut vertex_image: BTreeMap<(String, u8), Permutation> = BTreeMap::new();
    for (faces, _) in CORNERS {
        let id = corner_id(faces);
        let marked = faces.contains(&1) && faces.contains(&2);
        if marked {
            vertex_group.insert(id.clone(), dnz2.clone());
            let third = faces.iter().copied().find(|&f| f != 1 && f != 2).unwrap();
            vertex_image.insert((id.clone(), 1), dnz2.generators()[0].clone());
            vertex_image.insert((id.clone(), 2), dnz2.generators()[1].clone());
            vertex_image.insert((id.clone(), third), dnz2.generators()[2].clone());
        } else {
            vertex_group.insert(id.clone(), s4.clone());
            let middle = faces
                .iter()
                .copied()
                .find(|&m| {
                    faces
                        .iter()
                        .filter(|&&o| o != m)
                        .all(|&o| edge_order(n, m, o) == 3)
                })
                .expect("each plain corner has a middle mirror");
            let mut outer: Vec<u8> = faces.iter().copied().filter(|&f| f != middle).collect();
            outer.sort_unstable();
            vertex_image.insert(
                (id.clone(), outer[0]),
                Permutation::from_cycles(4, &[&[0, 1]]),
            );
            vertex_image.insert(
                (id.clone(), middle),
                Permutation::from_cycles(4, &[&[1, 2]]),
            );
            vertex_image.insert(
                (id.clone(), outer[1]),
                Permutation::from_cycles(4, &[&[2, 3]]),
            );
        }
    }

    let edge_group = |f: u8, g: u8| -> Arc<FiniteGroup> {
        if (f.min(g), f.max(g)) == (1, 2) {
            dn.clone()
        } else if edge_order(n, f, g) == 2 {
            klein.clone()
        } else {
            d3.clone()
        }
    };

    let mut cells = Vec::new();
    let mut incidences: Vec<Incidence> = Vec::new();
    for (faces, _) in CORNERS {
        cells.push(OrbitCell {
            id: corner_id(faces),
            dim: 0,
            stabilizer: vertex_group[&corner_id(faces)].clone(),
        });
    }

    // Twelve edges: orientation runs from the lexicographically smaller cube
    // coordinate to the larger.
    let mut edges: Vec<(u8, u8, String, String)> = Vec::new();
    for (i, &(fa, ca)) in CORNERS.iter().enumerate() {
        for &(fb, cb) in CORNERS.iter().skip(i + 1) {
            let shared: Vec<u8> = fa.iter().copied().filter(|f| fb.contains(f)).collect();
            if shared.len() != 2 {
                continue;
            }
            let (tail, head) = if ca <= cb {
                (corner_id(fa), corner_id(fb))
            } else {
                (corner_id(fb), corner_id(fa))
            };
            edges.push((
                shared[0].min(shared[1]),
                shared[0].max(shared[1]),
                tail,
                head,
            ));
        }
    }
    assert_eq!(edges.len(), 12);
    for (f, g, tail, head) in &edges {
        let group = edge_group(*f, *g);
        cells.push(OrbitCell {
            id: edge_id(*f, *g),
            dim: 1,
            stabilizer: group.clone(),
        });
        for (vid, degree) in [(head, 1i64), (tail, -1i64)] {
            let images = vec![
                vertex_image[&(vid.clone(), *f)].clone(),
                vertex_image[&(vid.clone(), *g)].clone(),
            ];
            let hom = GroupHom::from_perms(group.clone(), vertex_group[vid].clone(), &images)?;
            incidences.push(incidence(&edge_id(*f, *g), vid, degree, hom));
        }
    }

    // Face boundary cycles with the coherent outer orientation of the cube
    // boundary, so the solid cell attaches with the signs below.
    let face_cycles: [(u8, [[u8; 3]; 4], i64); 6] = [
        (5, [[0, 0, 0], [0, 1, 0], [0, 1, 1], [0, 0, 1]], -1),
        (6, [[1, 0, 0], [1, 1, 0], [1, 1, 1], [1, 0, 1]], 1),
        (1, [[0, 0, 0], [1, 0, 0], [1, 0, 1], [0, 0, 1]], 1),
        (3, [[0, 1, 0], [1, 1, 0], [1, 1, 1], [0, 1, 1]], -1),
        (4, [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]], -1),
        (2, [[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]], 1),
    ];
    let corner_by_coord = |coord: [u8; 3]| -> [u8; 3] {
        CORNERS
            .iter()
            .find(|(_, c)| *c == coord)
            .map(|(f, _)| *f)
            .unwrap()
    };
    for (f, cycle, solid_sign) in face_cycles {
        let fid = format!("f{f}");
        cells.push(OrbitCell {
            id: fid.clone(),
            dim: 2,
            stabilizer: z2.clone(),
        });
        for w in 0..4 {
            let a = corner_by_coord(cycle[w]);
            let b = corner_by_coord(cycle[(w + 1) % 4]);
            let shared: Vec<u8> = a.iter().copied().filter(|x| b.contains(x)).collect();
            let (ef, eg) = (shared[0].min(shared[1]), shared[0].max(shared[1]));
            // Traversal sign relative to the edge's lex orientation.
            let forward = cycle[w] <= cycle[(w + 1) % 4];
            let degree = if forward { 1 } else { -1 };
            let group = edge_group(ef, eg);
            // The face includes as the generator matching its own label.
            let gen = if f == ef { 0 } else { 1 };
            let hom = GroupHom::from_perms(
                z2.clone(),
                group.clone(),
                &[group.generators()[gen].clone()],
            )?;
            incidences.push(incidence(&fid, &edge_id(ef, eg), degree, hom));
        }
        incidences.push(incidence(
            "solid",
            &fid,
            solid_sign,
            GroupHom::from_trivial(z2.clone()),
        ));
    }
    cells.push(OrbitCell {
        id: "solid".into(),
        dim: 3,
        stabilizer: triv,
    });

    OrbitComplex::new(cells, incidences)
}
