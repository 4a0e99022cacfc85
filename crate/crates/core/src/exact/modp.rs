//! Univariate polynomials over prime fields Z/p and their factorization by
//! exhaustive divisor search. Every instance this library meets is tiny
//! (p^deg well under 10^6), so the trusted core stays deterministic and
//! free of probabilistic splitting.

use super::ExactError;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended euclid; a != 0 mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// Polynomial over Z/p with canonical residues and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl ModPPoly {
    pub fn new(p: u64, coeffs: Vec<i64>) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        let mut c: Vec<u64> = coeffs
            .into_iter()
            .map(|x| (((x % p as i64) + p as i64) % p as i64) as u64)
            .collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Ok(ModPPoly { p, coeffs: c })
    }

    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPPoly { p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &ModPPoly) -> ModPPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPPoly::raw(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        ModPPoly::raw(self.p, out)
    }

    /// (quotient, remainder) with divisor of nonzero leading coefficient.
    pub fn divmod(&self, divisor: &ModPPoly) -> (ModPPoly, ModPPoly) {
        assert_eq!(self.p, divisor.p);
        assert!(!divisor.is_zero());
        let p = self.p;
        let dlead = *divisor.coeffs.last().unwrap();
        let dinv = inv_mod(dlead, p);
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        if rem.len() <= dd {
            return (ModPPoly::raw(p, vec![]), ModPPoly::raw(p, rem));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let k = rem.len() - 1 - dd;
            let q = lead * dinv % p;
            if q != 0 {
                quot[k] = q;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = q * c % p;
                    rem[k + i] = (rem[k + i] + p - sub) % p;
                }
            }
            debug_assert_eq!(*rem.last().unwrap(), 0);
            rem.pop();
        }
        (ModPPoly::raw(p, quot), ModPPoly::raw(p, rem))
    }

    pub fn monic(&self) -> ModPPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(*self.coeffs.last().unwrap(), self.p);
        ModPPoly::raw(
            self.p,
            self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
        )
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// Monic polynomials of the given degree, in lexicographic coefficient order.
fn monic_of_degree(p: u64, deg: usize) -> impl Iterator<Item = ModPPoly> {
    let total = (p as u128).pow(deg as u32);
    (0..total).map(move |idx| {
        let mut coeffs = Vec::with_capacity(deg + 1);
        let mut rest = idx;
        for _ in 0..deg {
            coeffs.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        coeffs.push(1);
        ModPPoly { p, coeffs }
    })
}

/// Factorization into monic irreducibles with multiplicities; the product of
/// the factors equals the input up to the unit lead coefficient.
pub fn factor_mod_p(f: &ModPPoly) -> Result<Vec<(ModPPoly, u32)>, ExactError> {
    factor_mod_p_budget(f, 1_000_000)
}

pub fn factor_mod_p_budget(
    f: &ModPPoly,
    budget: u128,
) -> Result<Vec<(ModPPoly, u32)>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut factors: Vec<(ModPPoly, u32)> = vec![];
    let mut rest = f.monic();
    'outer: while rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        for d in 1..=deg / 2 {
            let candidates = (f.p as u128).pow(d as u32);
            if candidates > budget {
                return Err(ExactError::EnumerationBudget {
                    needed: candidates,
                    budget,
                });
            }
            for cand in monic_of_degree(f.p, d) {
                let (q, r) = rest.divmod(&cand);
                if r.is_zero() {
                    // cand is irreducible: it is a smallest-degree divisor
                    let mut mult = 1;
                    rest = q;
                    loop {
                        let (q2, r2) = rest.divmod(&cand);
                        if r2.is_zero() {
                            mult += 1;
                            rest = q2;
                        } else {
                            break;
                        }
                    }
                    factors.push((cand, mult));
                    continue 'outer;
                }
            }
        }
        // no divisor of degree <= deg/2: rest itself is irreducible
        factors.push((rest.clone(), 1));
        break;
    }
    factors.sort_by(|a, b| (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs)));
    Ok(factors)
}

/// Exhaustive irreducibility check, kept independent of `factor_mod_p` as a
/// test oracle for small degrees.
pub fn is_irreducible_naive(f: &ModPPoly) -> bool {
    let Some(deg) = f.degree() else { return false };
    if deg == 0 {
        return false;
    }
    for d in 1..deg {
        for cand in monic_of_degree(f.p, d) {
            let (_, r) = f.divmod(&cand);
            if r.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(
            ModPPoly::new(6, vec![1, 1]),
            Err(ExactError::NotPrime(6))
        ));
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = ModPPoly::new(5, vec![1, 0, 1]).unwrap();
        let factors = factor_mod_p(&f).unwrap();
        assert_eq!(factors.len(), 2);
        let expect_a = ModPPoly::new(5, vec![2, 1]).unwrap(); // x + 2
        let expect_b = ModPPoly::new(5, vec![3, 1]).unwrap(); // x + 3
        assert_eq!(factors[0], (expect_a, 1));
        assert_eq!(factors[1], (expect_b, 1));
    }

    #[test]
    fn x2_plus_1_mod_3_is_irreducible() {
        let f = ModPPoly::new(3, vec![1, 0, 1]).unwrap();
        let factors = factor_mod_p(&f).unwrap();
        assert_eq!(factors, vec![(f, 1)]);
    }

    #[test]
    fn x_mod_2_is_already_irreducible() {
        let f = ModPPoly::new(2, vec![0, 1]).unwrap();
        let factors = factor_mod_p(&f).unwrap();
        assert_eq!(factors, vec![(f, 1)]);
    }

    #[test]
    fn products_reproduce_input_and_factors_are_irreducible() {
        for p in [2u64, 3, 5] {
            let total = (p as u128).pow(4);
            for idx in 0..total {
                let mut coeffs = vec![];
                let mut rest = idx;
                for _ in 0..4 {
                    coeffs.push((rest % p as u128) as i64);
                    rest /= p as u128;
                }
                let f = ModPPoly::new(p, coeffs).unwrap();
                if f.is_zero() || f.degree() == Some(0) {
                    continue;
                }
                let factors = factor_mod_p(&f).unwrap();
                let mut prod = ModPPoly::new(p, vec![1]).unwrap();
                for (g, mult) in &factors {
                    assert!(
                        g.degree().unwrap() > 2 || is_irreducible_naive(g),
                        "reducible factor {g:?}"
                    );
                    for _ in 0..*mult {
                        prod = prod.mul(g);
                    }
                }
                assert_eq!(prod, f.monic(), "factor product mismatch for {f:?}");
            }
        }
    }
}
