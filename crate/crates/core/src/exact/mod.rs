//! Exact integer and rational arithmetic kernels: integer matrices and their
//! Smith normal form, determinants over arbitrary commutative rings, dense
//! rational linear algebra, and polynomial factorization over prime fields.

pub mod det;
pub mod linalg;
pub mod modp;
pub mod snf;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use num_bigint::BigInt as Int;
pub type Rat = num_rational::Ratio<BigInt>;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("enumeration budget exceeded: {needed} candidates > {budget}")]
    EnumerationBudget { needed: u128, budget: u128 },
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mat_mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mat_mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += vi * &self[(i, j)];
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn det(&self) -> Result<BigInt, ExactError> {
        let ring = det::BigIntRing;
        let m = det::RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.entries.clone(),
        };
        det::det_exact(&ring, &m)
    }

    /// Exact inverse of a matrix with determinant +-1.
    pub fn inverse_unimodular(&self) -> IntMatrix {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let rat_rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| self.row(i).iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let inv = linalg::invert_rat(&rat_rows).expect("unimodular matrix must be invertible");
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let e = &inv[i][j];
                assert!(e.is_integer(), "inverse of unimodular matrix must be integral");
                out[(i, j)] = e.to_integer();
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}
