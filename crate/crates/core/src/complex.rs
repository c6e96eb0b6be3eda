//! The orbit-complex data model: the quotient of a cocompact action on a
//! 3-manifold, given as cells with stabilizers and degree-weighted
//! incidences, plus validation and the boundary-component classification.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::ComplexError;
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::RationalMatrix;
use crate::unionfind::UnionFind;

/// One cell orbit of the quotient space.
#[derive(Debug, Clone)]
pub struct OrbitCell {
    pub id: String,
    pub dim: u8,
    pub stabilizer: Arc<FiniteGroup>,
}

/// One incidence record between a cell and one of its faces. A pair of cells
/// may carry several records (for example the two endpoints of an edge whose
/// ends are identified); each record has its own attaching degree and its
/// own stabilizer inclusion.
#[derive(Debug, Clone)]
pub struct Incidence {
    pub cell: String,
    pub face: String,
    pub degree: i64,
    /// Injective inclusion of the cell's stabilizer into the face's.
    pub inclusion: GroupHom,
}

/// Quotient complex with stabilizers; immutable after construction.
#[derive(Debug)]
pub struct OrbitComplex {
    cells: Vec<OrbitCell>,
    incidences: Vec<Incidence>,
    by_id: BTreeMap<String, usize>,
    /// Cell indices per dimension, sorted by id for deterministic layouts.
    per_dim: [Vec<usize>; 4],
    /// Incidence indices grouped by the higher-dimensional cell.
    by_cell: Vec<Vec<usize>>,
    /// Incidence indices grouped by the face.
    by_face: Vec<Vec<usize>>,
}

/// Result of `validate`: all broken invariants, by offending cell, plus the
/// fast-path applicability flag (exactly one 3-cell orbit).
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub issues: Vec<String>,
    pub fast_path: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn into_result(self) -> Result<(), ComplexError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(ComplexError::Invalid(self.issues.join("\n")))
        }
    }
}

/// A sub-2-complex given by face and edge ids (closed under taking the edges
/// of its faces).
#[derive(Debug, Clone, Default)]
pub struct SubTwoComplex {
    pub faces: Vec<String>,
    pub edges: Vec<String>,
}

/// One connected component of the boundary surface.
#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub faces: Vec<String>,
    pub edges: Vec<String>,
    /// No edge of the component has stabilizer of order 2.
    pub dihedral: bool,
    /// Some edge stabilizer has order divisible by 4.
    pub even: bool,
    pub orientable: bool,
}

/// Boundary classification feeding the degree-2 homology bookkeeping.
#[derive(Debug, Clone)]
pub struct BoundaryClassification {
    pub components: Vec<BoundaryComponent>,
    /// Orientable, even, dihedral components.
    pub s: usize,
    /// Orientable, odd, dihedral components.
    pub t: usize,
    /// Orientable, odd components of the boundary of `y`.
    pub t_prime: usize,
    /// Closure of the interior faces together with the non-dihedral
    /// boundary components.
    pub y: SubTwoComplex,
    /// The non-dihedral boundary components (the boundary of `y`).
    pub dy: SubTwoComplex,
    /// Union of the dihedral boundary components.
    pub z: SubTwoComplex,
}

impl OrbitComplex {
    /// Structural assembly: ids resolve, dimensions drop by one along
    /// incidences, and every inclusion connects the right stabilizers.
    /// Semantic checks (stabilizer shapes, boundary-of-boundary, manifold
    /// sanity) live in [`OrbitComplex::validate`].
    pub fn new(cells: Vec<OrbitCell>, incidences: Vec<Incidence>) -> Result<Self, ComplexError> {
        let mut by_id = BTreeMap::new();
        for (i, cell) in cells.iter().enumerate() {
            if by_id.insert(cell.id.clone(), i).is_some() {
                return Err(ComplexError::DuplicateCellId(cell.id.clone()));
            }
            if cell.dim > 3 {
                return Err(ComplexError::Invalid(format!(
                    "cell `{}` has dimension {} > 3",
                    cell.id, cell.dim
                )));
            }
        }
        let mut per_dim: [Vec<usize>; 4] = Default::default();
        for (dim, list) in per_dim.iter_mut().enumerate() {
            let mut ids: Vec<usize> = (0..cells.len())
                .filter(|&i| cells[i].dim as usize == dim)
                .collect();
            ids.sort_by(|&a, &b| cells[a].id.cmp(&cells[b].id));
            *list = ids;
        }
        let mut by_cell = vec![Vec::new(); cells.len()];
        let mut by_face = vec![Vec::new(); cells.len()];
        for (k, inc) in incidences.iter().enumerate() {
            let ci = *by_id
                .get(&inc.cell)
                .ok_or_else(|| ComplexError::UnknownCellId(inc.cell.clone()))?;
            let fi = *by_id
                .get(&inc.face)
                .ok_or_else(|| ComplexError::UnknownCellId(inc.face.clone()))?;
            if cells[ci].dim != cells[fi].dim + 1 {
                return Err(ComplexError::BadIncidenceDims {
                    cell: inc.cell.clone(),
                    face: inc.face.clone(),
                });
            }
            if !inc.inclusion.domain().same_group(&cells[ci].stabilizer)
                || !inc.inclusion.codomain().same_group(&cells[fi].stabilizer)
            {
                return Err(ComplexError::InclusionGroupMismatch {
                    cell: inc.cell.clone(),
                    face: inc.face.clone(),
                });
            }
            by_cell[ci].push(k);
            by_face[fi].push(k);
        }
        Ok(OrbitComplex {
            cells,
            incidences,
            by_id,
            per_dim,
            by_cell,
            by_face,
        })
    }

    pub fn cells(&self) -> &[OrbitCell] {
        &self.cells
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn cell_index(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn cell(&self, idx: usize) -> &OrbitCell {
        &self.cells[idx]
    }

    /// Cell indices of the given dimension, sorted by id.
    pub fn cells_of_dim(&self, dim: u8) -> &[usize] {
        &self.per_dim[dim as usize]
    }

    pub fn incidences_of_cell(&self, idx: usize) -> impl Iterator<Item = &Incidence> {
        self.by_cell[idx].iter().map(|&k| &self.incidences[k])
    }

    /// Net attaching degree of `cell` on `face`, summed over records.
    pub fn net_degree(&self, cell: usize, face: usize) -> i64 {
        self.by_cell[cell]
            .iter()
            .map(|&k| &self.incidences[k])
            .filter(|inc| self.by_id[&inc.face] == face)
            .map(|inc| inc.degree)
            .sum()
    }

    /// Ordinary cellular boundary matrix in degree `k` (rows: (k-1)-cells,
    /// columns: k-cells, both sorted by id; entries: net degrees).
    pub fn ordinary_boundary_matrix(&self, k: u8) -> RationalMatrix {
        assert!((1..=3).contains(&k));
        let rows = self.cells_of_dim(k - 1);
        let cols = self.cells_of_dim(k);
        let row_pos: BTreeMap<usize, usize> =
            rows.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut m = RationalMatrix::zeros(rows.len(), cols.len());
        for (cpos, &ci) in cols.iter().enumerate() {
            for inc in self.incidences_of_cell(ci) {
                let fi = self.by_id[&inc.face];
                let rpos = row_pos[&fi];
                m.add_assign_at(
                    rpos,
                    cpos,
                    &num_rational::BigRational::from(num_bigint::BigInt::from(inc.degree)),
                );
            }
        }
        m
    }

    /// Checks every structural invariant and reports violations with the
    /// offending cell ids. Inclusion homomorphisms were already verified at
    /// construction, so this concentrates on stabilizer shapes, the chain
    /// condition, connectivity and the manifold-model sanity conditions.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();

        if self.cells.is_empty() {
            issues.push("complex has no cells".to_string());
        }

        for cell in &self.cells {
            let order = cell.stabilizer.order();
            match cell.dim {
                3 => {
                    if order != 1 {
                        issues.push(format!(
                            "3-cell `{}` must have trivial stabilizer, found order {order}",
                            cell.id
                        ));
                    }
                }
                2 => {
                    if order > 2 {
                        issues.push(format!(
                            "2-cell `{}` must have stabilizer of order 1 or 2, found order {order}",
                            cell.id
                        ));
                    }
                }
                1 if order > 2
                    && !cell.stabilizer.is_cyclic()
                    && !cell.stabilizer.is_dihedral() =>
                {
                    issues.push(format!(
                            "edge `{}` has a stabilizer of order {order} that is neither cyclic nor dihedral",
                            cell.id
                        ));
                }
                _ => {}
            }
        }

        // Each edge carries exactly two endpoint records with degrees +1, -1.
        for &ei in self.cells_of_dim(1) {
            let mut degs: Vec<i64> = self.incidences_of_cell(ei).map(|inc| inc.degree).collect();
            degs.sort_unstable();
            if degs != vec![-1, 1] {
                issues.push(format!(
                    "edge `{}` must have exactly two endpoint incidences with degrees +1 and -1",
                    self.cells[ei].id
                ));
            }
        }

        // Boundary-of-boundary vanishes for the ordinary chain complex.
        for k in 1..=2u8 {
            let dk = self.ordinary_boundary_matrix(k);
            let dk1 = self.ordinary_boundary_matrix(k + 1);
            if !dk.mul(&dk1).is_zero() {
                issues.push(format!(
                    "ordinary boundary matrices do not compose to zero in degrees {} and {}",
                    k,
                    k + 1
                ));
            }
        }

        // Connectivity through incidences.
        if !self.cells.is_empty() {
            let mut uf = UnionFind::new(self.cells.len());
            for inc in &self.incidences {
                uf.union(self.by_id[&inc.cell], self.by_id[&inc.face]);
            }
            if uf.class_count() != 1 {
                issues.push("complex is not connected".to_string());
            }
        }

        // Manifold-model sanity on 2-cells.
        for &fi in self.cells_of_dim(2) {
            let face = &self.cells[fi];
            let records: Vec<&Incidence> = self.by_face[fi]
                .iter()
                .map(|&k| &self.incidences[k])
                .filter(|inc| self.cells[self.by_id[&inc.cell]].dim == 3)
                .collect();
            let net: i64 = records.iter().map(|inc| inc.degree).sum();
            match face.stabilizer.order() {
                1 => {
                    if !(net == 0 || net.abs() == 2) {
                        issues.push(format!(
                            "interior 2-cell `{}` has total signed 3-cell incidence {net}, expected 0 or +-2",
                            face.id
                        ));
                    }
                }
                2 if (records.len() != 1 || records[0].degree.abs() != 1) => {
                    issues.push(format!(
                            "boundary 2-cell `{}` must appear in exactly one 3-cell boundary with degree +-1",
                            face.id
                        ));
                }
                _ => {}
            }
        }

        ValidationReport {
            issues,
            fast_path: self.cells_of_dim(3).len() == 1,
        }
    }

    /// True iff the quotient is topologically a closed orientable manifold:
    /// no 2-cell has stabilizer of order 2, and every 2-cell has vanishing
    /// total signed degree in the single 3-cell boundary.
    pub fn is_closed_orientable(&self) -> Result<bool, ComplexError> {
        let three = self.cells_of_dim(3);
        if three.len() != 1 {
            return Err(ComplexError::NotSingleThreeCell(three.len()));
        }
        let solid = three[0];
        for &fi in self.cells_of_dim(2) {
            if self.cells[fi].stabilizer.order() == 2 {
                return Ok(false);
            }
            if self.net_degree(solid, fi) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Second Betti number of a 2-complex over Q: the kernel dimension of
    /// its degree-2 cellular boundary matrix.
    pub fn betti2_of_2complex(&self, sub: &SubTwoComplex) -> usize {
        if sub.faces.is_empty() {
            return 0;
        }
        let edge_pos: BTreeMap<&str, usize> = sub
            .edges
            .iter()
            .enumerate()
            .map(|(p, id)| (id.as_str(), p))
            .collect();
        let mut m = RationalMatrix::zeros(sub.edges.len(), sub.faces.len());
        for (cpos, fid) in sub.faces.iter().enumerate() {
            let fi = self.by_id[fid];
            for inc in self.incidences_of_cell(fi) {
                let rpos = edge_pos[inc.face.as_str()];
                m.add_assign_at(
                    rpos,
                    cpos,
                    &num_rational::BigRational::from(num_bigint::BigInt::from(inc.degree)),
                );
            }
        }
        m.kernel_dim()
    }

    /// Classifies the boundary components of the quotient and assembles the
    /// splitting of the 2-skeleton into `y` (interior faces plus non-dihedral
    /// boundary) and `z` (dihedral boundary).
    pub fn classify_boundary(&self) -> Result<BoundaryClassification, ComplexError> {
        let boundary_faces: Vec<usize> = self
            .cells_of_dim(2)
            .iter()
            .copied()
            .filter(|&fi| self.cells[fi].stabilizer.order() == 2)
            .collect();
        let interior_faces: Vec<usize> = self
            .cells_of_dim(2)
            .iter()
            .copied()
            .filter(|&fi| self.cells[fi].stabilizer.order() == 1)
            .collect();

        // Oriented covering slots of each boundary edge by boundary faces: a
        // record of degree d contributes |d| slots of sign(d).
        let mut edge_slots: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for &fi in &boundary_faces {
            for inc in self.incidences_of_cell(fi) {
                let ei = self.by_id[&inc.face];
                let slots = edge_slots.entry(ei).or_default();
                for _ in 0..inc.degree.unsigned_abs() {
                    slots.push((fi, inc.degree.signum()));
                }
            }
        }
        for (&ei, slots) in &edge_slots {
            if slots.len() != 2 {
                return Err(ComplexError::BoundaryNotClosed(
                    self.cells[ei].id.clone(),
                    slots.len(),
                ));
            }
        }

        // Components of the boundary subcomplex through shared edges and
        // vertices.
        let mut uf = UnionFind::new(self.cells.len());
        for (&ei, slots) in &edge_slots {
            for &(fi, _) in slots {
                uf.union(ei, fi);
            }
            for inc in self.incidences_of_cell(ei) {
                uf.union(ei, self.by_id[&inc.face]);
            }
        }
        let mut comp_faces: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &fi in &boundary_faces {
            comp_faces.entry(uf.find(fi)).or_default().push(fi);
        }

        let mut components = Vec::new();
        for faces in comp_faces.values() {
            let mut edges: Vec<usize> = edge_slots
                .iter()
                .filter(|(_, slots)| slots.iter().any(|&(fi, _)| faces.contains(&fi)))
                .map(|(&ei, _)| ei)
                .collect();
            edges.sort_by(|&a, &b| self.cells[a].id.cmp(&self.cells[b].id));
            let dihedral = edges
                .iter()
                .all(|&ei| self.cells[ei].stabilizer.order() > 2);
            let even = edges
                .iter()
                .any(|&ei| self.cells[ei].stabilizer.order().is_multiple_of(4));
            let orientable = self.component_orientable(faces, &edge_slots)?;
            let mut face_ids: Vec<String> =
                faces.iter().map(|&fi| self.cells[fi].id.clone()).collect();
            face_ids.sort();
            components.push(BoundaryComponent {
                faces: face_ids,
                edges: edges.iter().map(|&ei| self.cells[ei].id.clone()).collect(),
                dihedral,
                even,
                orientable,
            });
        }
        components.sort_by(|a, b| a.faces.cmp(&b.faces));

        let s = components
            .iter()
            .filter(|c| c.orientable && c.even && c.dihedral)
            .count();
        let t = components
            .iter()
            .filter(|c| c.orientable && !c.even && c.dihedral)
            .count();
        let t_prime = components
            .iter()
            .filter(|c| c.orientable && !c.even && !c.dihedral)
            .count();

        let closure_edges = |face_ids: &[usize]| -> Vec<String> {
            let mut ids: Vec<String> = face_ids
                .iter()
                .flat_map(|&fi| self.incidences_of_cell(fi).map(|inc| inc.face.clone()))
                .collect();
            ids.sort();
            ids.dedup();
            ids
        };

        let mut y_faces: Vec<String> = interior_faces
            .iter()
            .map(|&fi| self.cells[fi].id.clone())
            .collect();
        let mut dy_faces = Vec::new();
        let mut z_faces = Vec::new();
        for comp in &components {
            if comp.dihedral {
                z_faces.extend(comp.faces.iter().cloned());
            } else {
                y_faces.extend(comp.faces.iter().cloned());
                dy_faces.extend(comp.faces.iter().cloned());
            }
        }
        y_faces.sort();
        dy_faces.sort();
        z_faces.sort();
        let to_idx = |ids: &[String]| ids.iter().map(|id| self.by_id[id]).collect::<Vec<_>>();
        let y = SubTwoComplex {
            edges: closure_edges(&to_idx(&y_faces)),
            faces: y_faces,
        };
        let dy = SubTwoComplex {
            edges: closure_edges(&to_idx(&dy_faces)),
            faces: dy_faces,
        };
        let z = SubTwoComplex {
            edges: closure_edges(&to_idx(&z_faces)),
            faces: z_faces,
        };

        Ok(BoundaryClassification {
            components,
            s,
            t,
            t_prime,
            y,
            dy,
            z,
        })
    }

    /// Orientation propagation over the faces of one closed boundary
    /// component, cross-checked against its ordinary second Betti number.
    fn component_orientable(
        &self,
        faces: &[usize],
        edge_slots: &BTreeMap<usize, Vec<(usize, i64)>>,
    ) -> Result<bool, ComplexError> {
        let mut sign: BTreeMap<usize, i64> = BTreeMap::new();
        let mut propagated = true;
        'outer: for &start in faces {
            if sign.contains_key(&start) {
                continue;
            }
            sign.insert(start, 1);
            let mut stack = vec![start];
            while let Some(fi) = stack.pop() {
                for slots in edge_slots.values() {
                    let here: Vec<(usize, i64)> = slots.clone();
                    if !here.iter().any(|&(f, _)| f == fi) {
                        continue;
                    }
                    if !here.iter().all(|(f, _)| faces.contains(f)) {
                        continue;
                    }
                    let (f1, s1) = here[0];
                    let (f2, s2) = here[1];
                    if f1 == f2 {
                        // Same face twice: coherent only with opposite signs.
                        if s1 == s2 {
                            propagated = false;
                            break 'outer;
                        }
                        continue;
                    }
                    // eps_f1 * s1 + eps_f2 * s2 = 0
                    let (known, unknown, sk, su) = if sign.contains_key(&f1) {
                        (f1, f2, s1, s2)
                    } else if sign.contains_key(&f2) {
                        (f2, f1, s2, s1)
                    } else {
                        continue;
                    };
                    let forced = -sign[&known] * sk * su;
                    match sign.get(&unknown) {
                        Some(&existing) if existing != forced => {
                            propagated = false;
                            break 'outer;
                        }
                        Some(_) => {}
                        None => {
                            sign.insert(unknown, forced);
                            stack.push(unknown);
                        }
                    }
                }
            }
        }

        // Independent detection: a closed connected surface complex has
        // second Betti number 1 exactly when it is orientable.
        let face_ids: Vec<String> = faces.iter().map(|&fi| self.cells[fi].id.clone()).collect();
        let mut edge_ids: Vec<String> = edge_slots
            .iter()
            .filter(|(_, slots)| slots.iter().any(|&(f, _)| faces.contains(&f)))
            .map(|(&ei, _)| self.cells[ei].id.clone())
            .collect();
        edge_ids.sort();
        let betti = self.betti2_of_2complex(&SubTwoComplex {
            faces: face_ids.clone(),
            edges: edge_ids,
        });
        let by_betti = betti == 1;
        if propagated != by_betti {
            return Err(ComplexError::OrientabilityMismatch(
                face_ids.first().cloned().unwrap_or_default(),
            ));
        }
        Ok(propagated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn point() -> OrbitComplex {
        OrbitComplex::new(
            vec![OrbitCell {
                id: "v".into(),
                dim: 0,
                stabilizer: FiniteGroup::trivial(),
            }],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn point_is_valid_but_not_fast_path() {
        let c = point();
        let report = c.validate();
        assert!(report.is_valid());
        assert!(!report.fast_path);
    }

    #[test]
    fn face_with_order_3_stabilizer_is_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        let c = OrbitComplex::new(
            vec![OrbitCell {
                id: "f".into(),
                dim: 2,
                stabilizer: z3,
            }],
            vec![],
        )
        .unwrap();
        let report = c.validate();
        assert!(report
            .issues
            .iter()
            .any(|m| m.contains("`f`") && m.contains("order 3")));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let t = FiniteGroup::trivial();
        let err = OrbitComplex::new(
            vec![
                OrbitCell {
                    id: "v".into(),
                    dim: 0,
                    stabilizer: t.clone(),
                },
                OrbitCell {
                    id: "v".into(),
                    dim: 0,
                    stabilizer: t,
                },
            ],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateCellId(_)));
    }

    #[test]
    fn empty_sub_two_complex_has_betti2_zero() {
        let c = point();
        assert_eq!(c.betti2_of_2complex(&SubTwoComplex::default()), 0);
    }

    #[test]
    fn edge_with_non_cyclic_non_dihedral_stabilizer_is_rejected() {
        // Z3 x Z3 on 6 points: abelian but not cyclic, and not dihedral.
        use crate::perm::Permutation;
        let g = FiniteGroup::generate(
            6,
            vec![
                Permutation::from_cycles(6, &[&[0, 1, 2]]),
                Permutation::from_cycles(6, &[&[3, 4, 5]]),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 9);
        let c = OrbitComplex::new(
            vec![OrbitCell {
                id: "e".into(),
                dim: 1,
                stabilizer: g,
            }],
            vec![],
        )
        .unwrap();
        assert!(c
            .validate()
            .issues
            .iter()
            .any(|m| m.contains("neither cyclic nor dihedral")));
    }

    #[test]
    fn nonvanishing_boundary_of_boundary_is_rejected() {
        use crate::group::GroupHom;
        let triv = FiniteGroup::trivial();
        let cell = |id: &str, dim: u8| OrbitCell {
            id: id.into(),
            dim,
            stabilizer: triv.clone(),
        };
        let inc = |cell: &str, face: &str, degree: i64| Incidence {
            cell: cell.into(),
            face: face.into(),
            degree,
            inclusion: GroupHom::from_trivial(triv.clone()),
        };
        // A face attached to a non-closed edge path: d1 . d2 != 0.
        let c = OrbitComplex::new(
            vec![cell("v", 0), cell("w", 0), cell("e", 1), cell("f", 2)],
            vec![inc("e", "v", 1), inc("e", "w", -1), inc("f", "e", 1)],
        )
        .unwrap();
        assert!(c
            .validate()
            .issues
            .iter()
            .any(|m| m.contains("compose to zero")));
    }

    #[test]
    fn dangling_boundary_edge_is_a_structural_error() {
        use crate::group::GroupHom;
        let z2 = FiniteGroup::cyclic(2);
        let id = GroupHom::identity(z2.clone());
        let c = OrbitComplex::new(
            vec![
                OrbitCell {
                    id: "v".into(),
                    dim: 0,
                    stabilizer: z2.clone(),
                },
                OrbitCell {
                    id: "e".into(),
                    dim: 1,
                    stabilizer: z2.clone(),
                },
                OrbitCell {
                    id: "f".into(),
                    dim: 2,
                    stabilizer: z2.clone(),
                },
            ],
            vec![
                Incidence {
                    cell: "e".into(),
                    face: "v".into(),
                    degree: 1,
                    inclusion: id.clone(),
                },
                Incidence {
                    cell: "e".into(),
                    face: "v".into(),
                    degree: -1,
                    inclusion: id.clone(),
                },
                Incidence {
                    cell: "f".into(),
                    face: "e".into(),
                    degree: 1,
                    inclusion: id,
                },
            ],
        )
        .unwrap();
        // One boundary-face slot on `e` instead of two.
        assert!(matches!(
            c.classify_boundary(),
            Err(ComplexError::BoundaryNotClosed(edge, 1)) if edge == "e"
        ));
    }

    #[test]
    fn fast_path_guard_counts_three_cells() {
        let triv = FiniteGroup::trivial();
        let c = OrbitComplex::new(
            vec![
                OrbitCell {
                    id: "s1".into(),
                    dim: 3,
                    stabilizer: triv.clone(),
                },
                OrbitCell {
                    id: "s2".into(),
                    dim: 3,
                    stabilizer: triv.clone(),
                },
            ],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            c.is_closed_orientable(),
            Err(ComplexError::NotSingleThreeCell(2))
        ));
        assert!(!c.validate().fast_path);
    }
}
