//! Reflection family I: the Coxeter group of a hyperbolic prism over an
//! n-gon (n ≥ 5). The quotient is the prism itself: every face is a mirror,
//! the n-gon edges have dihedral angle π/3 and all side edges π/2, so vertex
//! stabilizers are S4, the polygon edges carry D3, the vertical edges carry
//! the Klein group, and every face carries the reflection Z2.

use std::sync::Arc;

use crate::complex::{Incidence, OrbitCell, OrbitComplex};
use crate::error::ComplexError;
use crate::group::{FiniteGroup, GroupHom};
use crate::perm::Permutation;

use super::incidence;

pub fn lambda_n(n: usize) -> Result<OrbitComplex, ComplexError> {
    if n < 5 {
        return Err(ComplexError::Invalid(format!(
            "prism family needs n >= 5, got {n}"
        )));
    }
    let s4 = FiniteGroup::symmetric4();
    let d3 = FiniteGroup::dihedral(3)?;
    let klein = FiniteGroup::klein();
    let z2 = FiniteGroup::cyclic(2);

    // D3 into S4 as the stabilizer of the point 3; cycle types are preserved.
    let extend = |p: &Permutation| {
        let mut images: Vec<usize> = p.images().to_vec();
        images.push(3);
        Permutation::from_images(images).unwrap()
    };
    let d3_into_s4 = GroupHom::from_perms(
        d3.clone(),
        s4.clone(),
        &d3.generators().iter().map(extend).collect::<Vec<_>>(),
    )?;
    // Klein into S4 as ⟨(0 1), (2 3)⟩.
    let klein_into_s4 = GroupHom::from_perms(
        klein.clone(),
        s4.clone(),
        &[
            Permutation::from_cycles(4, &[&[0, 1]]),
            Permutation::from_cycles(4, &[&[2, 3]]),
        ],
    )?;
    // Face reflections inside the edge stabilizers: the polygon face and the
    // side face meet along a polygon edge as the two D3 generators; two side
    // faces meet along a vertical edge as the two Klein generators.
    let z2_into = |codomain: &Arc<FiniteGroup>, image: &Permutation| {
        GroupHom::from_perms(z2.clone(), codomain.clone(), std::slice::from_ref(image))
    };
    let ngon_in_d3 = z2_into(&d3, &d3.generators()[0])?;
    let quad_in_d3 = z2_into(&d3, &d3.generators()[1])?;
    let quad_in_klein_first = z2_into(&klein, &klein.generators()[0])?;
    let quad_in_klein_second = z2_into(&klein, &klein.generators()[1])?;
    let triv_in_z2 = GroupHom::from_trivial(z2.clone());

    let mut cells = Vec::new();
    let mut incidences: Vec<Incidence> = Vec::new();
    for i in 0..n {
        for half in ["t", "b"] {
            cells.push(OrbitCell {
                id: format!("v{half}{i}"),
                dim: 0,
                stabilizer: s4.clone(),
            });
            cells.push(OrbitCell {
                id: format!("e{half}{i}"),
                dim: 1,
                stabilizer: d3.clone(),
            });
        }
        cells.push(OrbitCell {
            id: format!("ev{i}"),
            dim: 1,
            stabilizer: klein.clone(),
        });
        cells.push(OrbitCell {
            id: format!("fq{i}"),
            dim: 2,
            stabilizer: z2.clone(),
        });
    }
    for id in ["ftop", "fbot"] {
        cells.push(OrbitCell {
            id: id.into(),
            dim: 2,
            stabilizer: z2.clone(),
        });
    }
    cells.push(OrbitCell {
        id: "solid".into(),
        dim: 3,
        stabilizer: FiniteGroup::trivial(),
    });

    for i in 0..n {
        let next = (i + 1) % n;
        for half in ["t", "b"] {
            incidences.push(incidence(
                &format!("e{half}{i}"),
                &format!("v{half}{next}"),
                1,
                d3_into_s4.clone(),
            ));
            incidences.push(incidence(
                &format!("e{half}{i}"),
                &format!("v{half}{i}"),
                -1,
                d3_into_s4.clone(),
            ));
        }
        incidences.push(incidence(
            &format!("ev{i}"),
            &format!("vt{i}"),
            1,
            klein_into_s4.clone(),
        ));
        incidences.push(incidence(
            &format!("ev{i}"),
            &format!("vb{i}"),
            -1,
            klein_into_s4.clone(),
        ));
        // Polygon faces run around the top and bottom n-gons.
        incidences.push(incidence("ftop", &format!("et{i}"), 1, ngon_in_d3.clone()));
        incidences.push(incidence("fbot", &format!("eb{i}"), 1, ngon_in_d3.clone()));
        // Side quad i: bottom edge, the vertical on its far side, the top
        // edge reversed, the vertical on its near side reversed.
        incidences.push(incidence(
            &format!("fq{i}"),
            &format!("eb{i}"),
            1,
            quad_in_d3.clone(),
        ));
        incidences.push(incidence(
            &format!("fq{i}"),
            &format!("ev{next}"),
            1,
            quad_in_klein_first.clone(),
        ));
        incidences.push(incidence(
            &format!("fq{i}"),
            &format!("et{i}"),
            -1,
            quad_in_d3.clone(),
        ));
        incidences.push(incidence(
            &format!("fq{i}"),
            &format!("ev{i}"),
            -1,
            quad_in_klein_second.clone(),
        ));
        incidences.push(incidence("solid", &format!("fq{i}"), 1, triv_in_z2.clone()));
    }
    incidences.push(incidence("solid", "ftop", 1, triv_in_z2.clone()));
    incidences.push(incidence("solid", "fbot", -1, triv_in_z2));

    OrbitComplex::new(cells, incidences)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory;

    #[test]
    fn rejects_small_n() {
        assert!(lambda_n(4).is_err());
    }

    #[test]
    fn census_at_n5() {
        let c = lambda_n(5).unwrap();
        let report = c.validate();
        assert!(report.is_valid(), "{:?}", report.issues);
        assert!(report.fast_path);
        assert_eq!(c.cells_of_dim(0).len(), 10);
        assert_eq!(c.cells_of_dim(1).len(), 15);
        assert_eq!(c.cells_of_dim(2).len(), 7);
        assert_eq!(c.cells_of_dim(3).len(), 1);
    }

    #[test]
    fn boundary_is_one_even_dihedral_sphere() {
        let c = lambda_n(5).unwrap();
        let class = c.classify_boundary().unwrap();
        assert_eq!(class.components.len(), 1);
        let comp = &class.components[0];
        assert!(comp.dihedral && comp.even && comp.orientable);
        assert_eq!((class.s, class.t, class.t_prime), (1, 0, 0));
        assert!(class.y.faces.is_empty());
        assert_eq!(c.betti2_of_2complex(&class.y), 0);
    }

    #[test]
    fn invariants_at_n5_and_n6() {
        let c5 = lambda_n(5).unwrap();
        let k5 = ktheory::compute(&c5).unwrap();
        assert_eq!(ktheory::euler_characteristic(&c5), 13);
        assert_eq!(k5.betas(), [19, 6, 0, 0]);
        assert_eq!((k5.k0_rank, k5.k1_rank), (19, 6));

        let c6 = lambda_n(6).unwrap();
        let k6 = ktheory::compute(&c6).unwrap();
        assert_eq!((k6.k0_rank, k6.k1_rank), (22, 7));
    }
}
