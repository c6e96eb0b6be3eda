//! Dense exact rational matrices and rank/kernel computations.
//!
//! Everything here is exact: entries are arbitrary-precision rationals and
//! rank is computed by fraction-free (Bareiss) elimination over big integers
//! after clearing denominators. No floating point anywhere. The complexes we
//! handle are small (at most a few hundred rows), so dense storage is fine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| BigRational::from(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_assign_at(&mut self, r: usize, c: usize, value: &BigRational) {
        let idx = r * self.cols + c;
        self.data[idx] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_assign_at(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    /// Appends a column on the right; used for membership-in-image tests.
    pub fn with_extra_column(&self, col: &[BigRational]) -> Self {
        assert_eq!(col.len(), self.rows);
        let mut out = Self::zeros(self.rows, self.cols + 1);
        for (r, extra) in col.iter().enumerate() {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            out.set(r, self.cols, extra.clone());
        }
        out
    }

    /// Adds `scale` times `block` into `self` at offset `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &RationalMatrix, scale: &BigRational) {
        if scale.is_zero() {
            return;
        }
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.get(r, c);
                if !v.is_zero() {
                    self.add_assign_at(r0 + r, c0 + c, &(v * scale));
                }
            }
        }
    }

    /// Rank over Q by Bareiss fraction-free elimination on the integer matrix
    /// obtained by clearing each row's denominators.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    let d = self.get(r, c).denom();
                    lcm = lcm_bigint(&lcm, d);
                }
                (0..self.cols)
                    .map(|c| {
                        let v = self.get(r, c);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m, self.rows, self.cols)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn image_dim(&self) -> usize {
        self.rank()
    }
}

fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a / gcd_bigint(a, b)) * b
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Fraction-free elimination; intermediate entries stay integral because each
/// 2x2 determinant step divides exactly by the previous pivot.
fn bareiss_rank(m: &mut [Vec<BigInt>], rows: usize, cols: usize) -> usize {
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    let mut pivot_col = 0usize;
    while rank < rows && pivot_col < cols {
        // Partial pivoting on exact values: smallest nonzero magnitude keeps
        // the integers small; ties break on row order for determinism.
        let mut pivot_row = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            if row[pivot_col].is_zero() {
                continue;
            }
            match pivot_row {
                None => pivot_row = Some(r),
                Some(p) => {
                    if m[r][pivot_col].abs() < m[p][pivot_col].abs() {
                        pivot_row = Some(r);
                    }
                }
            }
        }
        let Some(p) = pivot_row else {
            pivot_col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in pivot_col + 1..cols {
                let num = &m[rank][pivot_col] * &m[r][c] - &m[r][pivot_col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][pivot_col] = BigInt::zero();
        }
        prev = m[rank][pivot_col].clone();
        rank += 1;
        pivot_col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain Gaussian elimination over the rationals; the independent oracle
    /// for the fraction-free path.
    fn naive_rank(m: &RationalMatrix) -> usize {
        let mut rows: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = &row[col] / &pivot_row[col];
                    for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                        let sub = pv * &factor;
                        row[c] -= sub;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RationalMatrix::zeros(3, 4).kernel_dim(), 4);
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(RationalMatrix::identity(7).rank(), 7);
        assert_eq!(RationalMatrix::identity(5).kernel_dim(), 0);
    }

    #[test]
    fn dependent_rows_collapse() {
        let m = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rational_entries_are_cleared_exactly() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let m = RationalMatrix::from_rows(vec![
            vec![
                third.clone(),
                third.clone() * BigRational::from(BigInt::from(2)),
            ],
            vec![
                BigRational::from(BigInt::from(5)),
                BigRational::from(BigInt::from(10)),
            ],
        ]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn bareiss_matches_naive_gaussian(rows in 1usize..6, cols in 1usize..6,
                                          entries in proptest::collection::vec(-9i64..=9, 36)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| entries[r * cols + c]).collect())
                .collect();
            let m = RationalMatrix::from_integers(&data);
            prop_assert_eq!(m.rank(), naive_rank(&m));
        }

        #[test]
        fn rank_equals_rank_of_transpose(rows in 1usize..6, cols in 1usize..6,
                                         entries in proptest::collection::vec(-9i64..=9, 36)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| entries[r * cols + c]).collect())
                .collect();
            let m = RationalMatrix::from_integers(&data);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn product_rank_bounded_by_factors(n in 1usize..5,
                                           a in proptest::collection::vec(-5i64..=5, 25),
                                           b in proptest::collection::vec(-5i64..=5, 25)) {
            let ma = RationalMatrix::from_integers(
                &(0..n).map(|r| (0..n).map(|c| a[r * n + c]).collect()).collect::<Vec<_>>());
            let mb = RationalMatrix::from_integers(
                &(0..n).map(|r| (0..n).map(|c| b[r * n + c]).collect()).collect::<Vec<_>>());
            let prod = ma.mul(&mb);
            prop_assert!(prod.rank() <= ma.rank().min(mb.rank()));
        }

        #[test]
        fn rank_invariant_under_row_permutation(rows in 2usize..6, cols in 1usize..6,
                                                entries in proptest::collection::vec(-9i64..=9, 36),
                                                swap in (0usize..6, 0usize..6)) {
            let mut data: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| entries[r * cols + c]).collect())
                .collect();
            let before = RationalMatrix::from_integers(&data).rank();
            let (i, j) = (swap.0 % rows, swap.1 % rows);
            data.swap(i, j);
            prop_assert_eq!(RationalMatrix::from_integers(&data).rank(), before);
        }
    }
}
