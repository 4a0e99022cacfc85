//! Smith normal form of integer matrices with full transformation tracking.
//!
//! Exact integer pivoting only; no modular shortcuts. The matrices involved
//! here are relation lattices of desk-scale quotient rings, so clarity and
//! auditability win over asymptotics.

use super::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// `u * input * v = d` with `u`, `v` unimodular and `d` diagonal satisfying
/// `d[0] | d[1] | ...` with nonnegative entries.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let swap_rows = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..a.cols {
            a.entries.swap(i * a.cols + c, j * a.cols + c);
        }
        for c in 0..u.cols {
            u.entries.swap(i * u.cols + c, j * u.cols + c);
        }
    };
    let swap_cols = |a: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize| {
        if i == j {
            return;
        }
        for r in 0..a.rows {
            a.entries.swap(r * a.cols + i, r * a.cols + j);
        }
        for r in 0..v.rows {
            v.entries.swap(r * v.cols + i, r * v.cols + j);
        }
    };
    // row_i -= q * row_k
    let row_sub = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize, q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for c in 0..a.cols {
            let t = q * &a[(k, c)];
            a[(i, c)] -= t;
        }
        for c in 0..u.cols {
            let t = q * &u[(k, c)];
            u[(i, c)] -= t;
        }
    };
    // col_j -= q * col_k
    let col_sub = |a: &mut IntMatrix, v: &mut IntMatrix, j: usize, k: usize, q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for r in 0..a.rows {
            let t = q * &a[(r, k)];
            a[(r, j)] -= t;
        }
        for r in 0..v.rows {
            let t = q * &v[(r, k)];
            v[(r, j)] -= t;
        }
    };

    let n = rows.min(cols);
    for k in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !a[(i, j)].is_zero()
                        && best.map_or(true, |(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // trailing block is zero
            };
            swap_rows(&mut a, &mut u, k, pi);
            swap_cols(&mut a, &mut v, k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                let q = &a[(i, k)] / &a[(k, k)];
                row_sub(&mut a, &mut u, i, k, &q);
                if !a[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                let q = &a[(k, j)] / &a[(k, k)];
                col_sub(&mut a, &mut v, j, k, &q);
                if !a[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot; // remainders became new, smaller pivot candidates
            }

            // pivot must divide every entry of the trailing block
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[(i, j)] % &a[(k, k)]).is_zero() {
                        // fold row i into row k, then restart elimination at k
                        let minus_one = BigInt::from(-1);
                        row_sub(&mut a, &mut u, k, i, &minus_one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                if a[(k, k)].is_negative() {
                    // negate row k
                    for c in 0..cols {
                        let t = -a[(k, c)].clone();
                        a[(k, c)] = t;
                    }
                    for c in 0..u.cols {
                        let t = -u[(k, c)].clone();
                        u[(k, c)] = t;
                    }
                }
                break 'pivot;
            }
        }
    }

    SmithDecomposition { u, d: a, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mat_mul(m).mat_mul(&s.v), s.d, "u*m*v != d");
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.det().unwrap().abs(), BigInt::one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {:?}", diag);
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn identity_is_its_own_snf() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let s = check(&IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn gaussian_two_lattice() {
        // relation matrix of (1+i)Z[i] in basis {1, i}
        let s = check(&IntMatrix::from_i64_rows(&[vec![1, -1], vec![1, 1]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        check(&IntMatrix::from_i64_rows(&[vec![2, 4, 6], vec![4, 8, 12]]));
        check(&IntMatrix::from_i64_rows(&[vec![0, 0], vec![0, 0]]));
        check(&IntMatrix::from_i64_rows(&[vec![3], vec![5]]));
    }

    #[test]
    fn random_small_matrices() {
        // deterministic lcg over a few shapes
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        for rows in 1..=4usize {
            for cols in 1..=4usize {
                for _ in 0..8 {
                    let m = IntMatrix::from_i64_rows(
                        &(0..rows)
                            .map(|_| (0..cols).map(|_| next()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    );
                    check(&m);
                }
            }
        }
    }
}
