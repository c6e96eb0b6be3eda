//! Exact character-theoretic data for dihedral groups.
//!
//! The generic rank machinery works on class functions and never needs
//! character values. Dihedral groups get special treatment because the edge
//! differential at a boundary edge with stabilizer D_n, written in the
//! irreducible basis, has a closed form whose kernel drives the surface
//! bookkeeping; the character table here exists to cross-validate that
//! closed form. Two-dimensional character values 2cos(2πpr/n) are kept exact
//! as cyclotomic integers in Z[x]/Φ_n(x).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::GroupError;
use crate::linalg::RationalMatrix;

/// An element of Z[ζ_n], stored as an integer polynomial in ζ reduced
/// modulo the n-th cyclotomic polynomial. Coefficient vectors have length
/// deg Φ_n = φ(n), so equality is coefficient equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Cyc{}{:?}",
            self.n,
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// Φ_n as an integer coefficient vector (constant term first), computed by
/// exact division of x^n − 1 by the proper-divisor cyclotomics.
fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)]; // x - 1
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact polynomial division (remainder must vanish).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(lead.is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        let qi = i - dd;
        quot[qi] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            rem[qi + j] -= &c * dc;
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "non-exact polynomial division"
    );
    quot
}

fn phi_degree(n: usize) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

impl Cyclotomic {
    pub fn zero(n: usize) -> Self {
        Cyclotomic {
            n,
            coeffs: vec![BigInt::zero(); phi_degree(n)],
        }
    }

    pub fn from_int(n: usize, value: i64) -> Self {
        let mut c = Self::zero(n);
        if phi_degree(n) > 0 {
            c.coeffs[0] = BigInt::from(value);
        }
        c
    }

    /// ζ_n^k reduced modulo Φ_n.
    pub fn root_power(n: usize, k: usize) -> Self {
        let k = k % n;
        let mut raw = vec![BigInt::zero(); k + 1];
        raw[k] = BigInt::one();
        Self::reduce(n, raw)
    }

    /// 2cos(2πk/n) = ζ^k + ζ^−k, exactly.
    pub fn two_cos(n: usize, k: usize) -> Self {
        let k = k % n;
        Self::root_power(n, k).add(&Self::root_power(n, (n - k) % n))
    }

    fn reduce(n: usize, mut raw: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let top = raw.len() - 1;
            let c = raw[top].clone();
            if !c.is_zero() {
                for (j, pc) in phi.iter().enumerate() {
                    raw[top - deg + j] -= &c * pc;
                }
            }
            raw.pop();
        }
        raw.resize(deg, BigInt::zero());
        Cyclotomic { n, coeffs: raw }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut raw = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.n, raw)
    }

    pub fn scale(&self, by: i64) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * BigInt::from(by)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigInt::zero))
        } else {
            None
        }
    }
}

/// Conjugacy classes of D_n = ⟨s1, s2 | s1² = s2² = (s1 s2)^n⟩ in the fixed
/// order used by rows and columns of the dihedral tables. Writing ρ = s1 s2,
/// the reflections are s2 ρ^r; for even n those split by the parity of r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralClass {
    Identity,
    /// Rotations ρ^±k, 1 ≤ k ≤ n/2; for even n, k = n/2 is the half turn.
    Rotation(usize),
    /// Reflections s2 ρ^r with r even (all reflections when n is odd).
    ReflectionEven,
    /// Reflections s2 ρ^r with r odd (even n only).
    ReflectionOdd,
}

/// One irreducible character of D_n.
#[derive(Debug, Clone)]
pub struct DihedralCharacter {
    pub label: String,
    pub degree: i64,
    /// Values on the class columns, in `DihedralCharTable::classes` order.
    pub values: Vec<Cyclotomic>,
}

/// The full character table of D_n with exact entries.
#[derive(Debug, Clone)]
pub struct DihedralCharTable {
    pub n: usize,
    pub classes: Vec<(DihedralClass, usize)>,
    pub irreducibles: Vec<DihedralCharacter>,
}

/// Exact character table of D_n (n ≥ 2). Row order: the two linear
/// characters, the two hatted linear characters when n is even, then the
/// two-dimensional characters φ_p with φ_p(ρ^r) = 2cos(2πpr/n).
pub fn dihedral_character_table(n: usize) -> Result<DihedralCharTable, GroupError> {
    if n < 2 {
        return Err(GroupError::DihedralTooSmall(n));
    }
    let even = n.is_multiple_of(2);
    let mut classes = vec![(DihedralClass::Identity, 1usize)];
    for k in 1..=n / 2 {
        let size = if even && k == n / 2 { 1 } else { 2 };
        classes.push((DihedralClass::Rotation(k), size));
    }
    if even {
        classes.push((DihedralClass::ReflectionEven, n / 2));
        classes.push((DihedralClass::ReflectionOdd, n / 2));
    } else {
        classes.push((DihedralClass::ReflectionEven, n));
    }

    let int = |v: i64| Cyclotomic::from_int(n, v);
    let value = |class: &DihedralClass,
                 on_rot: &dyn Fn(usize) -> Cyclotomic,
                 even_refl: i64,
                 odd_refl: i64| match class {
        DihedralClass::Identity => on_rot(0),
        DihedralClass::Rotation(k) => on_rot(*k),
        DihedralClass::ReflectionEven => int(even_refl),
        DihedralClass::ReflectionOdd => int(odd_refl),
    };

    let mut irreducibles = Vec::new();
    let all = |cls: &[(DihedralClass, usize)],
               on_rot: &dyn Fn(usize) -> Cyclotomic,
               even_refl: i64,
               odd_refl: i64| {
        cls.iter()
            .map(|(c, _)| value(c, on_rot, even_refl, odd_refl))
            .collect::<Vec<_>>()
    };
    irreducibles.push(DihedralCharacter {
        label: "chi1".into(),
        degree: 1,
        values: all(&classes, &|_| int(1), 1, 1),
    });
    irreducibles.push(DihedralCharacter {
        label: "chi2".into(),
        degree: 1,
        values: all(&classes, &|_| int(1), -1, -1),
    });
    if even {
        let sign = |r: usize| int(if r.is_multiple_of(2) { 1 } else { -1 });
        irreducibles.push(DihedralCharacter {
            label: "chi3hat".into(),
            degree: 1,
            values: all(&classes, &sign, 1, -1),
        });
        irreducibles.push(DihedralCharacter {
            label: "chi4hat".into(),
            degree: 1,
            values: all(&classes, &sign, -1, 1),
        });
    }
    let two_dim = if even { n / 2 - 1 } else { (n - 1) / 2 };
    for p in 1..=two_dim {
        irreducibles.push(DihedralCharacter {
            label: format!("phi{p}"),
            degree: 2,
            values: all(&classes, &|r| Cyclotomic::two_cos(n, (p * r) % n), 0, 0),
        });
    }
    Ok(DihedralCharTable {
        n,
        classes,
        irreducibles,
    })
}

impl DihedralCharTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Σ_g χ_i(g) χ_j(g) over the group, exactly (the values are real, so no
    /// conjugation is needed). Equals |D_n| δ_ij for a correct table.
    pub fn inner_product(&self, i: usize, j: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.n);
        for (col, (_, size)) in self.classes.iter().enumerate() {
            let prod = self.irreducibles[i].values[col].mul(&self.irreducibles[j].values[col]);
            acc = acc.add(&prod.scale(*size as i64));
        }
        acc
    }
}

/// The difference of the two reflection-subgroup inductions into D_n in the
/// irreducible basis: (a, b, c, d) ↦ (a−c, b−d, [b−c, a−d,] S, …, S) with
/// S = a + b − c − d, rows ordered as in `dihedral_character_table`. The
/// third and fourth rows appear only when n is even.
pub fn dihedral_edge_map(n: usize) -> Result<RationalMatrix, GroupError> {
    if n < 2 {
        return Err(GroupError::DihedralTooSmall(n));
    }
    let even = n.is_multiple_of(2);
    let two_dim = if even { n / 2 - 1 } else { (n - 1) / 2 };
    let mut rows: Vec<Vec<i64>> = vec![vec![1, 0, -1, 0], vec![0, 1, 0, -1]];
    if even {
        rows.push(vec![0, 1, -1, 0]);
        rows.push(vec![1, 0, 0, -1]);
    }
    for _ in 0..two_dim {
        rows.push(vec![1, 1, -1, -1]);
    }
    Ok(RationalMatrix::from_integers(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, GroupHom};
    use num_rational::BigRational;

    #[test]
    fn table_shape_matches_class_counts() {
        // n = 3: irreducibles of degrees 1, 1, 2. n = 4: 1, 1, 1, 1, 2.
        let t3 = dihedral_character_table(3).unwrap();
        assert_eq!(
            t3.irreducibles.iter().map(|c| c.degree).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
        let t4 = dihedral_character_table(4).unwrap();
        assert_eq!(
            t4.irreducibles.iter().map(|c| c.degree).collect::<Vec<_>>(),
            vec![1, 1, 1, 1, 2]
        );
        for n in 2..=12 {
            let t = dihedral_character_table(n).unwrap();
            let g = FiniteGroup::dihedral(n).unwrap();
            assert_eq!(t.class_count(), g.class_count(), "n = {n}");
            assert_eq!(t.irreducibles.len(), t.class_count());
            let group_order: usize = t.classes.iter().map(|(_, s)| s).sum();
            assert_eq!(group_order, 2 * n);
        }
        assert!(dihedral_character_table(1).is_err());
    }

    #[test]
    fn identity_column_lists_degrees() {
        for n in 2..=9 {
            let t = dihedral_character_table(n).unwrap();
            for chi in &t.irreducibles {
                assert_eq!(
                    chi.values[0].as_integer().unwrap(),
                    BigInt::from(chi.degree),
                    "n = {n}, {}",
                    chi.label
                );
            }
        }
    }

    #[test]
    fn rows_are_orthogonal_with_norm_group_order() {
        for n in 2..=12 {
            let t = dihedral_character_table(n).unwrap();
            for i in 0..t.irreducibles.len() {
                for j in 0..t.irreducibles.len() {
                    let ip = t.inner_product(i, j);
                    let expected = if i == j { 2 * n as i64 } else { 0 };
                    assert_eq!(
                        ip.as_integer()
                            .expect("inner products are rational integers"),
                        BigInt::from(expected),
                        "n = {n}, rows {i},{j}"
                    );
                }
            }
        }
    }

    /// Rebuilds the edge map from the character table via Frobenius
    /// reciprocity: the multiplicity of χ in Ind(ρ±) from a reflection
    /// subgroup ⟨s⟩ is (χ(e) ± χ(s)) / 2. The s1 subgroup meets the odd
    /// reflection class, the s2 subgroup the even one.
    #[test]
    fn edge_map_agrees_with_frobenius_reciprocity() {
        for n in 2..=12 {
            let t = dihedral_character_table(n).unwrap();
            let m = dihedral_edge_map(n).unwrap();
            assert_eq!(m.rows(), t.class_count());
            let refl_value = |chi: &DihedralCharacter, odd: bool| -> i64 {
                let class = if odd && n % 2 == 0 {
                    DihedralClass::ReflectionOdd
                } else {
                    DihedralClass::ReflectionEven
                };
                let col = t.classes.iter().position(|(c, _)| *c == class).unwrap();
                let v: BigInt = chi.values[col].as_integer().unwrap();
                i64::try_from(&v).unwrap()
            };
            for (row, chi) in t.irreducibles.iter().enumerate() {
                // Columns: (a, b) = trivial/sign through ⟨s1⟩; (c, d) the same
                // through ⟨s2⟩ with opposite orientation.
                let s1 = refl_value(chi, true);
                let s2 = refl_value(chi, false);
                let expected = [
                    (chi.degree + s1) / 2,
                    (chi.degree - s1) / 2,
                    -(chi.degree + s2) / 2,
                    -(chi.degree - s2) / 2,
                ];
                for (col, &e) in expected.iter().enumerate() {
                    assert_eq!(
                        m.get(row, col),
                        &BigRational::from(BigInt::from(e)),
                        "n = {n}, row {row} ({}), col {col}",
                        chi.label
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_dimensions_follow_parity() {
        for n in 2..=12 {
            let m = dihedral_edge_map(n).unwrap();
            let expected = if n % 2 == 1 { 2 } else { 1 };
            assert_eq!(m.kernel_dim(), expected, "n = {n}");
        }
        // Kernel vectors themselves: (1,0,1,0) and (0,1,0,1) for odd n,
        // (1,1,1,1) for even n.
        for n in 2..=12 {
            let m = dihedral_edge_map(n).unwrap();
            let vecs: Vec<Vec<i64>> = if n % 2 == 1 {
                vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
            } else {
                vec![vec![1, 1, 1, 1]]
            };
            for v in vecs {
                let col =
                    RationalMatrix::from_integers(&v.iter().map(|&x| vec![x]).collect::<Vec<_>>());
                assert!(m.mul(&col).is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn image_meets_all_ones_only_at_zero_for_n_at_least_3() {
        for n in 3..=12 {
            let m = dihedral_edge_map(n).unwrap();
            let ones = vec![BigRational::from(BigInt::from(1)); m.rows()];
            let augmented = m.with_extra_column(&ones);
            assert_eq!(augmented.rank(), m.rank() + 1, "n = {n}");
        }
    }

    /// For n = 2 the all-ones vector genuinely lies in the image: the Klein
    /// group has no two-dimensional irreducibles, so the regular
    /// representation is the all-ones vector and it is induced from either
    /// reflection subgroup. The identity above therefore starts at n = 3.
    #[test]
    fn klein_exception_all_ones_is_hit() {
        let m = dihedral_edge_map(2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 4));
        let ones = vec![BigRational::from(BigInt::from(1)); 4];
        let augmented = m.with_extra_column(&ones);
        assert_eq!(augmented.rank(), m.rank());
        // Witness: (a, b, c, d) = (1, 1, 0, 0) maps to (1, 1, 1, 1).
        let v = RationalMatrix::from_integers(&[vec![1], vec![1], vec![0], vec![0]]);
        let image = m.mul(&v);
        for r in 0..4 {
            assert_eq!(image.get(r, 0), &BigRational::from(BigInt::from(1)));
        }
    }

    /// The closed-form matrix, living in the irreducible basis, must have the
    /// same rank as the difference of the two reflection-subgroup induction
    /// matrices computed on class functions: the character table is an
    /// invertible change of basis between the two.
    #[test]
    fn edge_map_rank_matches_class_function_route() {
        for n in 2..=12 {
            let dn = FiniteGroup::dihedral(n).unwrap();
            let z2 = FiniteGroup::cyclic(2);
            let s1 = GroupHom::from_perms(z2.clone(), dn.clone(), &[dn.generators()[0].clone()])
                .unwrap();
            let s2 = GroupHom::from_perms(z2.clone(), dn.clone(), &[dn.generators()[1].clone()])
                .unwrap();
            let m1 = s1.induction_matrix();
            let m2 = s2.induction_matrix();
            let mut diff = RationalMatrix::zeros(dn.class_count(), 4);
            let one = BigRational::from(BigInt::from(1));
            let neg = BigRational::from(BigInt::from(-1));
            diff.add_block(0, 0, &m1, &one);
            diff.add_block(0, 2, &m2, &neg);
            let closed_form = dihedral_edge_map(n).unwrap();
            assert_eq!(diff.rank(), closed_form.rank(), "n = {n}");
            assert_eq!(diff.kernel_dim(), closed_form.kernel_dim(), "n = {n}");
        }
    }
}
