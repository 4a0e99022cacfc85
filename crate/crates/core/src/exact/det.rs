//! Determinants and characteristic polynomials over arbitrary commutative
//! rings, by Laplace expansion with column-subset memoization (no division,
//! so it works over rings like O_K where Bareiss pivots may not divide).

use super::{ExactError, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Minimal commutative-ring interface for exact linear algebra.
pub trait CommRing: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> RMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        RMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn map<F, T: Clone>(&self, f: F) -> RMatrix<T>
    where
        F: Fn(&E) -> T,
    {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

#[derive(Clone)]
pub struct BigIntRing;

impl CommRing for BigIntRing {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

#[derive(Clone)]
pub struct RatRing;

impl CommRing for RatRing {
    type Elem = Rat;
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
}

/// Exact determinant by Laplace expansion along rows, memoized over the set
/// of still-unused columns. O(2^n * n) ring operations; n stays below ~12
/// at desk scale (largest codeword matrices are 6x6).
pub fn det_exact<R: CommRing>(ring: &R, m: &RMatrix<R::Elem>) -> Result<R::Elem, ExactError> {
    if m.rows != m.cols {
        return Err(ExactError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    assert!(n <= 63, "determinant size out of supported range");
    let full: u64 = if n == 63 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, R::Elem> = HashMap::new();

    fn minor<R: CommRing>(
        ring: &R,
        m: &RMatrix<R::Elem>,
        mask: u64,
        memo: &mut HashMap<u64, R::Elem>,
    ) -> R::Elem {
        if mask == 0 {
            return ring.one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let n = m.rows;
        let row = n - mask.count_ones() as usize; // expand along the first unused row
        let mut acc = ring.zero();
        let mut sign_positive = true;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let a = m.get(row, j);
            if !ring.is_zero(a) {
                let sub = minor(ring, m, mask & !(1 << j), memo);
                let term = ring.mul(a, &sub);
                acc = if sign_positive {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    Ok(minor(ring, m, full, &mut memo))
}

/// Dense univariate polynomials over a commutative ring, as a ring.
/// Coefficient vectors are kept trimmed of trailing zeros.
#[derive(Clone)]
pub struct PolyRing<R: CommRing> {
    pub base: R,
}

impl<R: CommRing> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn trim(&self, mut p: Vec<R::Elem>) -> Vec<R::Elem> {
        while p.last().map_or(false, |c| self.base.is_zero(c)) {
            p.pop();
        }
        p
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        self.trim(vec![c])
    }

    pub fn x(&self) -> Vec<R::Elem> {
        vec![self.base.zero(), self.base.one()]
    }
}

impl<R: CommRing> CommRing for PolyRing<R> {
    type Elem = Vec<R::Elem>;
    fn zero(&self) -> Vec<R::Elem> {
        vec![]
    }
    fn one(&self) -> Vec<R::Elem> {
        vec![self.base.one()]
    }
    fn add(&self, a: &Vec<R::Elem>, b: &Vec<R::Elem>) -> Vec<R::Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| self.base.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| self.base.zero());
            out.push(self.base.add(&x, &y));
        }
        self.trim(out)
    }
    fn neg(&self, a: &Vec<R::Elem>) -> Vec<R::Elem> {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Vec<R::Elem>, b: &Vec<R::Elem>) -> Vec<R::Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.trim(out)
    }
    fn is_zero(&self, a: &Vec<R::Elem>) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }
}

/// Characteristic polynomial det(X*I - M), returned as coefficients
/// c_0..c_n with c_n = 1.
pub fn charpoly<R: CommRing>(
    ring: &R,
    m: &RMatrix<R::Elem>,
) -> Result<Vec<R::Elem>, ExactError> {
    if m.rows != m.cols {
        return Err(ExactError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let pring = PolyRing::new(ring.clone());
    let n = m.rows;
    let mut xm = RMatrix::filled(n, n, pring.zero());
    for i in 0..n {
        for j in 0..n {
            let mut p = pring.constant(ring.neg(m.get(i, j)));
            if i == j {
                p = pring.add(&p, &pring.x());
            }
            xm.set(i, j, p);
        }
    }
    let mut p = det_exact(&pring, &xm)?;
    while p.len() < n + 1 {
        p.push(ring.zero());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive permutation-sum determinant, used as an independent oracle.
    fn det_permutation(ring: &BigIntRing, m: &RMatrix<BigInt>) -> BigInt {
        let n = m.rows;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = BigInt::zero();
        fn go(
            ring: &BigIntRing,
            m: &RMatrix<BigInt>,
            perm: &mut Vec<usize>,
            k: usize,
            sign: i32,
            acc: &mut BigInt,
        ) {
            let n = m.rows;
            if k == n {
                let mut term = BigInt::one();
                for i in 0..n {
                    term = ring.mul(&term, m.get(i, perm[i]));
                }
                if sign > 0 {
                    *acc += term;
                } else {
                    *acc -= term;
                }
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                let s = if i == k { sign } else { -sign };
                go(ring, m, perm, k + 1, s, acc);
                perm.swap(k, i);
            }
        }
        go(ring, m, &mut perm, 0, 1, &mut acc);
        acc
    }

    #[test]
    fn identity_has_det_one() {
        let ring = BigIntRing;
        for n in 0..5 {
            let mut m = RMatrix::filled(n, n, BigInt::zero());
            for i in 0..n {
                m.set(i, i, BigInt::one());
            }
            assert_eq!(det_exact(&ring, &m).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn rejects_non_square() {
        let ring = BigIntRing;
        let m = RMatrix::filled(2, 3, BigInt::zero());
        assert!(matches!(
            det_exact(&ring, &m),
            Err(ExactError::NotSquare { .. })
        ));
    }

    #[test]
    fn agrees_with_permutation_expansion() {
        let ring = BigIntRing;
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) as i64 % 9) - 4
        };
        for n in 1..=4usize {
            for _ in 0..20 {
                let m = RMatrix::from_rows(
                    (0..n)
                        .map(|_| (0..n).map(|_| BigInt::from(next())).collect())
                        .collect(),
                );
                assert_eq!(det_exact(&ring, &m).unwrap(), det_permutation(&ring, &m));
            }
        }
    }

    #[test]
    fn charpoly_of_companion() {
        // companion matrix of x^2 - x - 1
        let ring = BigIntRing;
        let m = RMatrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ]);
        let p = charpoly(&ring, &m).unwrap();
        assert_eq!(p, vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)]);
    }
}
