//! Skew polynomial arithmetic S[t; sigma, delta] over any coefficient ring
//! that exposes its operations together with sigma and delta. Multiplication
//! extends t*a = sigma(a)*t + delta(a); the code is written once against the
//! [`SkewRing`] trait and instantiated with rings of integers, finite
//! quotient rings, and orders in cyclic algebras.

use crate::field::{FieldAutomorphism, FieldDerivation, FieldElement, NumberField};
use crate::quotient::{CanonElem, FiniteQuotientRing, InducedMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkewError {
    #[error("leading coefficient is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("coefficient ring is not a finite field")]
    NotAFiniteField,
    #[error("coefficient ring does not expose additive generators")]
    UnsupportedCoefficientRing,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("sigma is not injective; kernel witness {0}")]
    SigmaNotInjective(String),
    #[error("delta violates the twisted Leibniz rule at generators ({0},{1})")]
    BadDerivation(usize, usize),
}

/// Coefficient ring handle carrying (sigma, delta) for a skew polynomial ring.
pub trait SkewRing: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

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
    fn invert(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    fn delta(&self, a: &Self::Elem) -> Self::Elem;
    fn has_delta(&self) -> bool;
    fn sigma_pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        let mut out = a.clone();
        for _ in 0..k {
            out = self.sigma(&out);
        }
        out
    }

    /// Finite additive spanning set (a basis at desk scale); None when the
    /// ring cannot provide one.
    fn additive_generators(&self) -> Option<Vec<Self::Elem>>;
    /// All elements in a deterministic order; None when infinite or too big.
    fn enumerate(&self) -> Option<Vec<Self::Elem>>;
    fn cardinality(&self) -> Option<u128>;
    fn is_commutative(&self) -> bool;
    fn is_finite_field(&self) -> bool;

    /// Additive orders of the flattened coordinates, when the ring has a
    /// canonical coordinate form (enables F_p-linear fast paths).
    fn coord_orders(&self) -> Option<Vec<u64>>;
    fn flatten(&self, a: &Self::Elem) -> Option<Vec<u64>>;
    fn unflatten(&self, coords: &[u64]) -> Option<Self::Elem>;

    fn render_elem(&self, a: &Self::Elem) -> String;
}

/// Degree with the distinguished bottom value for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Skew polynomial: coefficient list c_0..c_deg, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly<E> {
    pub coeffs: Vec<E>,
}

impl<E> SkewPoly<E> {
    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// The ring S[t; sigma, delta].
#[derive(Clone)]
pub struct SkewPolyRing<R: SkewRing> {
    pub coeff: R,
}

impl<R: SkewRing> SkewPolyRing<R> {
    pub fn new(coeff: R) -> Self {
        SkewPolyRing { coeff }
    }

    /// Validate sigma injectivity (finite rings) and the delta laws on
    /// additive generators.
    pub fn validate(&self) -> Result<(), SkewError> {
        if let Some(elems) = self.coeff.enumerate() {
            let mut seen = std::collections::HashSet::new();
            for a in &elems {
                let img = self.coeff.sigma(a);
                if !seen.insert(img) {
                    return Err(SkewError::SigmaNotInjective(self.coeff.render_elem(a)));
                }
            }
        }
        if self.coeff.has_delta() {
            let gens = self
                .coeff
                .additive_generators()
                .ok_or(SkewError::UnsupportedCoefficientRing)?;
            if !self.coeff.is_zero(&self.coeff.delta(&self.coeff.one())) {
                return Err(SkewError::BadDerivation(0, 0));
            }
            for (i, a) in gens.iter().enumerate() {
                for (j, b) in gens.iter().enumerate() {
                    let lhs = self.coeff.delta(&self.coeff.mul(a, b));
                    let rhs = self.coeff.add(
                        &self.coeff.mul(&self.coeff.sigma(a), &self.coeff.delta(b)),
                        &self.coeff.mul(&self.coeff.delta(a), b),
                    );
                    if lhs != rhs {
                        return Err(SkewError::BadDerivation(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> SkewPoly<R::Elem> {
        while coeffs.last().map_or(false, |c| self.coeff.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero_poly(&self) -> SkewPoly<R::Elem> {
        SkewPoly { coeffs: vec![] }
    }

    pub fn one_poly(&self) -> SkewPoly<R::Elem> {
        SkewPoly {
            coeffs: vec![self.coeff.one()],
        }
    }

    /// a * t^k
    pub fn monomial(&self, a: R::Elem, k: usize) -> SkewPoly<R::Elem> {
        if self.coeff.is_zero(&a) {
            return self.zero_poly();
        }
        let mut coeffs = vec![self.coeff.zero(); k + 1];
        coeffs[k] = a;
        SkewPoly { coeffs }
    }

    /// Monic t^m - d.
    pub fn binomial(&self, m: usize, d: &R::Elem) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![self.coeff.zero(); m + 1];
        coeffs[0] = self.coeff.neg(d);
        coeffs[m] = self.coeff.one();
        self.poly(coeffs)
    }

    pub fn degree(&self, f: &SkewPoly<R::Elem>) -> Degree {
        match f.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self, f: &SkewPoly<R::Elem>) -> Option<&R::Elem> {
        f.coeffs.last()
    }

    pub fn is_monic(&self, f: &SkewPoly<R::Elem>) -> bool {
        self.leading(f) == Some(&self.coeff.one())
    }

    pub fn add(&self, g: &SkewPoly<R::Elem>, h: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let n = g.coeffs.len().max(h.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = g.coeffs.get(i).cloned().unwrap_or_else(|| self.coeff.zero());
                let b = h.coeffs.get(i).cloned().unwrap_or_else(|| self.coeff.zero());
                self.coeff.add(&a, &b)
            })
            .collect();
        self.poly(coeffs)
    }

    pub fn neg(&self, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        SkewPoly {
            coeffs: g.coeffs.iter().map(|c| self.coeff.neg(c)).collect(),
        }
    }

    pub fn sub(&self, g: &SkewPoly<R::Elem>, h: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.add(g, &self.neg(h))
    }

    /// t * f, one application of the commutation rule.
    fn times_t(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![self.coeff.zero(); f.coeffs.len() + 1];
        for (j, c) in f.coeffs.iter().enumerate() {
            if self.coeff.is_zero(c) {
                continue;
            }
            coeffs[j + 1] = self.coeff.add(&coeffs[j + 1], &self.coeff.sigma(c));
            if self.coeff.has_delta() {
                let d = self.coeff.delta(c);
                coeffs[j] = self.coeff.add(&coeffs[j], &d);
            }
        }
        self.poly(coeffs)
    }

    /// a * f with a coefficient on the left.
    fn scale_left(&self, a: &R::Elem, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        if self.coeff.is_zero(a) {
            return self.zero_poly();
        }
        self.poly(f.coeffs.iter().map(|c| self.coeff.mul(a, c)).collect())
    }

    /// Product g * h in S[t; sigma, delta].
    pub fn mul(&self, g: &SkewPoly<R::Elem>, h: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let mut acc = self.zero_poly();
        let mut t_pow_h = h.clone(); // t^i * h
        for (i, gi) in g.coeffs.iter().enumerate() {
            if i > 0 {
                t_pow_h = self.times_t(&t_pow_h);
            }
            if !self.coeff.is_zero(gi) {
                acc = self.add(&acc, &self.scale_left(gi, &t_pow_h));
            }
        }
        acc
    }

    /// Unique (q, r) with g = q*f + r and deg r < deg f. Requires a monic or
    /// invertibly-led divisor.
    pub fn right_divmod(
        &self,
        g: &SkewPoly<R::Elem>,
        f: &SkewPoly<R::Elem>,
    ) -> Result<(SkewPoly<R::Elem>, SkewPoly<R::Elem>), SkewError> {
        let Degree::Finite(df) = self.degree(f) else {
            return Err(SkewError::DivisionByZero);
        };
        let f_lead = self.leading(f).unwrap().clone();
        let monic = f_lead == self.coeff.one();
        let mut rem = g.clone();
        let mut quo = self.zero_poly();
        while let Degree::Finite(dg) = self.degree(&rem) {
            if dg < df {
                break;
            }
            let k = dg - df;
            let lead = self.leading(&rem).unwrap().clone();
            let q_k = if monic {
                lead
            } else {
                let twisted = self.coeff.sigma_pow(&f_lead, k);
                let inv = self
                    .coeff
                    .invert(&twisted)
                    .ok_or(SkewError::NonInvertibleLeadingCoefficient)?;
                self.coeff.mul(&lead, &inv)
            };
            let m = self.monomial(q_k, k);
            let prod = self.mul(&m, f);
            debug_assert_eq!(self.degree(&prod), self.degree(&rem));
            rem = self.sub(&rem, &prod);
            debug_assert!(self.degree(&rem) < Degree::Finite(dg + 1));
            if self.degree(&rem) == Degree::Finite(dg) {
                // leading terms must cancel exactly
                unreachable!("right division failed to reduce the degree");
            }
            quo = self.add(&quo, &m);
        }
        Ok((quo, rem))
    }

    pub fn rem(
        &self,
        g: &SkewPoly<R::Elem>,
        f: &SkewPoly<R::Elem>,
    ) -> Result<SkewPoly<R::Elem>, SkewError> {
        Ok(self.right_divmod(g, f)?.1)
    }

    /// f is (right-)invariant iff f*a mod_r f = 0 for every additive
    /// generator a of the coefficient ring and f*t mod_r f = 0.
    pub fn is_invariant(&self, f: &SkewPoly<R::Elem>) -> Result<bool, SkewError> {
        let gens = self
            .coeff
            .additive_generators()
            .ok_or(SkewError::UnsupportedCoefficientRing)?;
        for a in gens {
            let fa = self.mul(f, &self.poly(vec![a]));
            if !self.rem(&fa, f)?.coeffs.is_empty() {
                return Ok(false);
            }
        }
        let t = self.monomial(self.coeff.one(), 1);
        let ft = self.mul(f, &t);
        Ok(self.rem(&ft, f)?.coeffs.is_empty())
    }

    /// All monic polynomials of the given degree over a finite ring.
    pub fn monic_of_degree(&self, deg: usize) -> Option<Vec<SkewPoly<R::Elem>>> {
        let elems = self.coeff.enumerate()?;
        let count = (elems.len() as u128).checked_pow(deg as u32)?;
        let mut out = Vec::with_capacity(count as usize);
        let mut idx = vec![0usize; deg];
        loop {
            let mut coeffs: Vec<R::Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
            coeffs.push(self.coeff.one());
            out.push(SkewPoly { coeffs });
            // increment mixed radix
            let mut pos = 0;
            loop {
                if pos == deg {
                    return Some(out);
                }
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if deg == 0 {
                return Some(out);
            }
        }
    }

    /// Irreducibility over a finite field by exhaustive enumeration of monic
    /// right factors of every degree 1 <= k < deg f.
    pub fn is_irreducible_finite(&self, f: &SkewPoly<R::Elem>) -> Result<bool, SkewError> {
        if !self.coeff.is_finite_field() {
            return Err(SkewError::NotAFiniteField);
        }
        let Degree::Finite(df) = self.degree(f) else {
            return Err(SkewError::DivisionByZero);
        };
        assert!(df >= 1, "irreducibility needs degree >= 1");
        if df == 1 {
            return Ok(true);
        }
        for k in 1..df {
            for h in self.monic_of_degree(k).ok_or(SkewError::NotAFiniteField)? {
                if self.rem(f, &h)?.coeffs.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn render(&self, f: &SkewPoly<R::Elem>, var: &str) -> String {
        if f.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = vec![];
        for (i, c) in f.coeffs.iter().enumerate() {
            if self.coeff.is_zero(c) {
                continue;
            }
            let cs = self.coeff.render_elem(c);
            let part = match i {
                0 => cs,
                1 if c == &self.coeff.one() => var.to_string(),
                1 => format!("({cs})*{var}"),
                _ if c == &self.coeff.one() => format!("{var}^{i}"),
                _ => format!("({cs})*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// SkewRing instances

/// A number field K with a chosen automorphism and optional derivation.
#[derive(Clone)]
pub struct NumberFieldSkew {
    pub field: Arc<NumberField>,
    pub sigma: FieldAutomorphism,
    pub delta: Option<FieldDerivation>,
}

impl NumberFieldSkew {
    pub fn new(
        field: Arc<NumberField>,
        sigma: FieldAutomorphism,
        delta: Option<FieldDerivation>,
    ) -> Self {
        NumberFieldSkew { field, sigma, delta }
    }
}

impl SkewRing for NumberFieldSkew {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        self.field.zero()
    }
    fn one(&self) -> FieldElement {
        self.field.one()
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.field.add(a, b)
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.field.neg(a)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.field.mul(a, b)
    }
    fn invert(&self, a: &FieldElement) -> Option<FieldElement> {
        self.field.inverse(a).ok()
    }
    fn sigma(&self, a: &FieldElement) -> FieldElement {
        self.field.apply(&self.sigma, a)
    }
    fn delta(&self, a: &FieldElement) -> FieldElement {
        match &self.delta {
            Some(d) => self.field.apply_derivation(d, a),
            None => self.field.zero(),
        }
    }
    fn has_delta(&self) -> bool {
        self.delta.is_some()
    }
    fn sigma_pow(&self, a: &FieldElement, k: usize) -> FieldElement {
        self.field.apply_pow(&self.sigma, a, k)
    }
    fn additive_generators(&self) -> Option<Vec<FieldElement>> {
        Some((0..self.field.degree).map(|i| self.field.basis_elem(i)).collect())
    }
    fn enumerate(&self) -> Option<Vec<FieldElement>> {
        None
    }
    fn cardinality(&self) -> Option<u128> {
        None
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn is_finite_field(&self) -> bool {
        false
    }
    fn coord_orders(&self) -> Option<Vec<u64>> {
        None
    }
    fn flatten(&self, _a: &FieldElement) -> Option<Vec<u64>> {
        None
    }
    fn unflatten(&self, _coords: &[u64]) -> Option<FieldElement> {
        None
    }
    fn render_elem(&self, a: &FieldElement) -> String {
        self.field.render(a)
    }
}

/// A finite quotient ring O_K/I·O_K with induced sigma-bar / delta-bar.
#[derive(Clone)]
pub struct QuotientSkew {
    pub ring: Arc<FiniteQuotientRing>,
    pub sigma: InducedMap,
    pub delta: Option<InducedMap>,
}

impl QuotientSkew {
    pub fn new(ring: Arc<FiniteQuotientRing>, sigma: InducedMap, delta: Option<InducedMap>) -> Self {
        QuotientSkew { ring, sigma, delta }
    }
}

impl SkewRing for QuotientSkew {
    type Elem = CanonElem;

    fn zero(&self) -> CanonElem {
        self.ring.zero()
    }
    fn one(&self) -> CanonElem {
        self.ring.one.clone()
    }
    fn add(&self, a: &CanonElem, b: &CanonElem) -> CanonElem {
        self.ring.add(a, b)
    }
    fn neg(&self, a: &CanonElem) -> CanonElem {
        self.ring.neg(a)
    }
    fn mul(&self, a: &CanonElem, b: &CanonElem) -> CanonElem {
        self.ring.mul(a, b)
    }
    fn is_zero(&self, a: &CanonElem) -> bool {
        self.ring.is_zero(a)
    }
    fn invert(&self, a: &CanonElem) -> Option<CanonElem> {
        self.ring.invert(a)
    }
    fn sigma(&self, a: &CanonElem) -> CanonElem {
        self.sigma.apply(a)
    }
    fn delta(&self, a: &CanonElem) -> CanonElem {
        match &self.delta {
            Some(d) => d.apply(a),
            None => self.ring.zero(),
        }
    }
    fn has_delta(&self) -> bool {
        self.delta.is_some()
    }
    fn sigma_pow(&self, a: &CanonElem, k: usize) -> CanonElem {
        self.sigma.apply_pow(a, k)
    }
    fn additive_generators(&self) -> Option<Vec<CanonElem>> {
        let n = self.ring.degree();
        Some(
            (0..n)
                .filter(|&i| self.ring.divisors[i] > 1)
                .map(|i| {
                    let mut c = vec![0u64; n];
                    c[i] = 1;
                    c
                })
                .collect(),
        )
    }
    fn enumerate(&self) -> Option<Vec<CanonElem>> {
        if self.ring.cardinality > 1 << 22 {
            return None;
        }
        Some(self.ring.enumerate().collect())
    }
    fn cardinality(&self) -> Option<u128> {
        Some(self.ring.cardinality)
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn is_finite_field(&self) -> bool {
        self.ring.is_field()
    }
    fn coord_orders(&self) -> Option<Vec<u64>> {
        Some(self.ring.divisors.clone())
    }
    fn flatten(&self, a: &CanonElem) -> Option<Vec<u64>> {
        Some(a.clone())
    }
    fn unflatten(&self, coords: &[u64]) -> Option<CanonElem> {
        Some(coords.to_vec())
    }
    fn render_elem(&self, a: &CanonElem) -> String {
        self.ring.render(a)
    }
}
