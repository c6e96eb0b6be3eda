//! Independent oracle: the full rationalized equivariant chain complex with
//! induction-map differentials, and its homology ranks by exact elimination.
//!
//! Degree p of the complex is the direct sum, over p-cells, of the class
//! function space of the cell's stabilizer. The block of the differential
//! between a cell and a face is the sum, over their incidence records, of
//! the attaching degree times the induction matrix of the record's
//! inclusion. Unlike the fast path this accepts any number of 3-cells
//! (including zero), so it is strictly more general.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::complex::OrbitComplex;
use crate::error::ComplexError;
use crate::linalg::RationalMatrix;

/// The assembled chain complex. `differentials[p]` maps degree p + 1 to
/// degree p chains.
#[derive(Debug)]
pub struct BredonComplex {
    pub dims: [usize; 4],
    pub differentials: [RationalMatrix; 3],
    /// Column of each (cell id, conjugacy class index) pair, per degree.
    pub basis_index: [BTreeMap<(String, usize), usize>; 4],
}

/// Builds the complex and verifies that consecutive differentials compose
/// to zero; a nonzero composition means the incidence data is incoherent.
pub fn assemble(c: &OrbitComplex) -> Result<BredonComplex, ComplexError> {
    let mut basis_index: [BTreeMap<(String, usize), usize>; 4] = Default::default();
    let mut dims = [0usize; 4];
    for dim in 0..4u8 {
        let mut col = 0usize;
        for &ci in c.cells_of_dim(dim) {
            let cell = c.cell(ci);
            for k in 0..cell.stabilizer.class_count() {
                basis_index[dim as usize].insert((cell.id.clone(), k), col);
                col += 1;
            }
        }
        dims[dim as usize] = col;
    }

    let mut differentials: Vec<RationalMatrix> = Vec::with_capacity(3);
    for p in 1..=3u8 {
        let mut d = RationalMatrix::zeros(dims[p as usize - 1], dims[p as usize]);
        for &ci in c.cells_of_dim(p) {
            let cell = c.cell(ci);
            let col0 = basis_index[p as usize][&(cell.id.clone(), 0)];
            for inc in c.incidences_of_cell(ci) {
                if inc.degree == 0 {
                    continue;
                }
                let row0 = basis_index[p as usize - 1][&(inc.face.clone(), 0)];
                let block = inc.inclusion.induction_matrix();
                let scale = BigRational::from(BigInt::from(inc.degree));
                d.add_block(row0, col0, &block, &scale);
            }
        }
        differentials.push(d);
    }

    for p in 0..2 {
        if !differentials[p].mul(&differentials[p + 1]).is_zero() {
            return Err(ComplexError::NonzeroComposition(p as u8 + 1, p as u8 + 2));
        }
    }

    Ok(BredonComplex {
        dims,
        differentials: differentials.try_into().expect("three differentials"),
        basis_index,
    })
}

/// Homology ranks over Q: `beta_p = dim_p - rank(d_p) - rank(d_{p+1})`,
/// with the absent outer differentials of rank zero.
pub fn homology_ranks(b: &BredonComplex) -> [usize; 4] {
    let ranks: Vec<usize> = b.differentials.iter().map(|d| d.rank()).collect();
    let mut betas = [0usize; 4];
    for p in 0..4 {
        let incoming = if p < 3 { ranks[p] } else { 0 };
        let outgoing = if p > 0 { ranks[p - 1] } else { 0 };
        betas[p] = b.dims[p] - outgoing - incoming;
    }
    betas
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Incidence, OrbitCell, OrbitComplex};
    use crate::group::{FiniteGroup, GroupHom};

    #[test]
    fn single_point_with_trivial_group() {
        let c = OrbitComplex::new(
            vec![OrbitCell {
                id: "v".into(),
                dim: 0,
                stabilizer: FiniteGroup::trivial(),
            }],
            vec![],
        )
        .unwrap();
        let b = assemble(&c).unwrap();
        assert_eq!(b.dims, [1, 0, 0, 0]);
        assert_eq!(homology_ranks(&b), [1, 0, 0, 0]);
    }

    #[test]
    fn injective_top_differential_onto_a_mirror_face() {
        // A 3-cell over a single 2-cell with order-2 stabilizer: the block is
        // the regular-representation column, so the top differential injects.
        let triv = FiniteGroup::trivial();
        let z2 = FiniteGroup::cyclic(2);
        let cells = vec![
            OrbitCell {
                id: "f".into(),
                dim: 2,
                stabilizer: z2.clone(),
            },
            OrbitCell {
                id: "solid".into(),
                dim: 3,
                stabilizer: triv.clone(),
            },
        ];
        let incidences = vec![Incidence {
            cell: "solid".into(),
            face: "f".into(),
            degree: 1,
            inclusion: GroupHom::from_trivial(z2.clone()),
        }];
        let c = OrbitComplex::new(cells, incidences).unwrap();
        let b = assemble(&c).unwrap();
        assert_eq!(b.dims, [0, 0, 2, 1]);
        assert_eq!(b.differentials[2].rank(), 1);
        let betas = homology_ranks(&b);
        assert_eq!(betas[3], 0);
    }
}
