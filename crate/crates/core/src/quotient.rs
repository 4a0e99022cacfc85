//! Finite quotient rings O_K / I·O_K in Smith-normal-form coordinates.
//!
//! The relation lattice of the ideal is the Z-span of g·b_i over the ideal
//! generators g and the integral basis b_i. Its Smith normal form gives
//! canonical coordinates: an element is a vector w with 0 <= w_i < d_i, and
//! the projection O_K -> quotient is x -> (x·V mod d). Quotients are kept
//! intrinsic — field structure, when present, is established by exhaustive
//! invertibility, never by forcing an isomorphism onto an abstract F_q.

use crate::exact::snf::smith_normal_form;
use crate::exact::{Int, IntMatrix, Rat};
use crate::field::{FieldAutomorphism, FieldDerivation, FieldElement, IntegralIdeal, NumberField};
use num_traits::{Signed, ToPrimitive, Zero};
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuotientError {
    #[error("ideal generates a zero or non-finite quotient")]
    ZeroIdeal,
    #[error("map does not stabilize the relation lattice; witness generator {witness}")]
    NotWellDefined { witness: String },
    #[error("enumeration budget exceeded: ring has {cardinality} elements, budget {budget}")]
    BudgetExceeded { cardinality: u128, budget: u128 },
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error("induced map property failed: {0}")]
    InducedMapBroken(String),
    #[error("{0} is not a prime ideal of the subring: {1}")]
    NotPrime(String, String),
}

pub type CanonElem = Vec<u64>;

/// O_K / I·O_K with canonical SNF coordinates.
pub struct FiniteQuotientRing {
    pub field: Arc<NumberField>,
    pub ideal_label: String,
    /// Elementary divisors d_1 | d_2 | ... | d_n, all positive.
    pub divisors: Vec<u64>,
    v: IntMatrix,
    v_inv: IntMatrix,
    /// Products of canonical unit vectors, reduced.
    unit_products: Vec<Vec<CanonElem>>,
    pub one: CanonElem,
    pub cardinality: u128,
    pub characteristic: u64,
    is_field_cache: OnceLock<bool>,
}

impl std::fmt::Debug for FiniteQuotientRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteQuotientRing")
            .field("field", &self.field.name)
            .field("ideal", &self.ideal_label)
            .field("divisors", &self.divisors)
            .field("cardinality", &self.cardinality)
            .finish()
    }
}

/// Z-lattice membership structure for I·O_K inside O_K coordinates.
pub struct RelationLattice {
    v: IntMatrix,
    divisors: Vec<Int>,
}

impl RelationLattice {
    pub fn contains(&self, coords: &[Int]) -> bool {
        let w = self.v.vec_mul(coords);
        w.iter()
            .zip(&self.divisors)
            .all(|(wi, di)| {
                if di.is_zero() {
                    wi.is_zero()
                } else {
                    (wi % di).is_zero()
                }
            })
    }
}

/// Build the quotient of the field's integer ring by I·O_K.
pub fn build_quotient(
    field: &Arc<NumberField>,
    ideal: &IntegralIdeal,
) -> Result<FiniteQuotientRing, QuotientError> {
    let n = field.degree;
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(ideal.generators.len() * n);
    for g in &ideal.generators {
        for i in 0..n {
            let prod = field.mul(g, &field.basis_elem(i));
            rows.push(prod.integer_coords()?);
        }
    }
    let m = IntMatrix::from_rows(rows);
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    if diag.len() < n || diag.iter().any(|d| d.is_zero()) {
        return Err(QuotientError::ZeroIdeal);
    }
    let divisors: Vec<u64> = diag
        .iter()
        .map(|d| d.to_u64().expect("elementary divisor fits in u64 at desk scale"))
        .collect();
    let cardinality: u128 = divisors.iter().map(|&d| d as u128).product();
    let v = snf.v;
    let v_inv = v.inverse_unimodular();

    let mut ring = FiniteQuotientRing {
        field: Arc::clone(field),
        ideal_label: ideal.label.clone(),
        divisors,
        v,
        v_inv,
        unit_products: vec![],
        one: vec![],
        cardinality,
        characteristic: 0,
        is_field_cache: OnceLock::new(),
    };
    ring.one = ring.project_int(&field.one().integer_coords()?);

    // multiplication table on canonical unit vectors
    let mut table = vec![vec![vec![]; n]; n];
    for i in 0..n {
        let bi = ring.lift_unit(i);
        for j in 0..n {
            let bj = ring.lift_unit(j);
            let prod = field.mul(&bi, &bj);
            table[i][j] = ring.project_int(&prod.integer_coords()?);
        }
    }
    ring.unit_products = table;

    // characteristic: additive order of 1
    let mut k = 1u64;
    loop {
        let mut acc = vec![0u64; n];
        for (idx, &c) in ring.one.iter().enumerate() {
            acc[idx] = (c as u128 * k as u128 % ring.divisors[idx] as u128) as u64;
        }
        if acc.iter().all(|&c| c == 0) {
            break;
        }
        k += 1;
    }
    ring.characteristic = k;
    Ok(ring)
}

impl FiniteQuotientRing {
    pub fn degree(&self) -> usize {
        self.divisors.len()
    }

    /// Lattice membership tester for ker(projection) = I·O_K.
    pub fn relation_lattice(&self) -> RelationLattice {
        RelationLattice {
            v: self.v.clone(),
            divisors: self.divisors.iter().map(|&d| Int::from(d)).collect(),
        }
    }

    fn reduce_w(&self, w: &[Int]) -> CanonElem {
        w.iter()
            .zip(&self.divisors)
            .map(|(wi, &di)| {
                let d = Int::from(di);
                let r = wi % &d;
                let r = if r.is_negative() { r + &d } else { r };
                r.to_u64().unwrap()
            })
            .collect()
    }

    pub fn project_int(&self, coords: &[Int]) -> CanonElem {
        let w = self.v.vec_mul(coords);
        self.reduce_w(&w)
    }

    pub fn project(&self, x: &FieldElement) -> Result<CanonElem, QuotientError> {
        Ok(self.project_int(&x.integer_coords()?))
    }

    /// Canonical representative in O_K (least nonnegative SNF residues).
    pub fn lift(&self, c: &CanonElem) -> FieldElement {
        let w: Vec<Int> = c.iter().map(|&x| Int::from(x)).collect();
        let coords = self.v_inv.vec_mul(&w);
        FieldElement::from_int(coords)
    }

    fn lift_unit(&self, i: usize) -> FieldElement {
        let mut c = vec![0u64; self.degree()];
        c[i] = 1;
        self.lift(&c)
    }

    pub fn zero(&self) -> CanonElem {
        vec![0; self.degree()]
    }

    pub fn is_zero(&self, a: &CanonElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &CanonElem, b: &CanonElem) -> CanonElem {
        a.iter()
            .zip(b)
            .zip(&self.divisors)
            .map(|((&x, &y), &d)| ((x as u128 + y as u128) % d as u128) as u64)
            .collect()
    }

    pub fn neg(&self, a: &CanonElem) -> CanonElem {
        a.iter()
            .zip(&self.divisors)
            .map(|(&x, &d)| if x == 0 { 0 } else { d - x })
            .collect()
    }

    pub fn sub(&self, a: &CanonElem, b: &CanonElem) -> CanonElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &CanonElem, b: &CanonElem) -> CanonElem {
        let n = self.degree();
        let mut acc = vec![0u128; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let f = a[i] as u128 * b[j] as u128;
                let prod = &self.unit_products[i][j];
                for k in 0..n {
                    if prod[k] != 0 {
                        let d = self.divisors[k] as u128;
                        acc[k] = (acc[k] + f % d * prod[k] as u128) % d;
                    }
                }
            }
        }
        acc.iter().map(|&x| x as u64).collect()
    }

    pub fn scalar_mul(&self, k: u64, a: &CanonElem) -> CanonElem {
        a.iter()
            .zip(&self.divisors)
            .map(|(&x, &d)| (x as u128 * k as u128 % d as u128) as u64)
            .collect()
    }

    pub fn invert(&self, a: &CanonElem) -> Option<CanonElem> {
        if self.is_zero(a) {
            return None;
        }
        self.enumerate()
            .find(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    /// All elements in deterministic mixed-radix order.
    pub fn enumerate(&self) -> impl Iterator<Item = CanonElem> + '_ {
        let divisors = self.divisors.clone();
        let total = self.cardinality;
        (0..total).map(move |idx| {
            let mut rest = idx;
            divisors
                .iter()
                .map(|&d| {
                    let c = (rest % d as u128) as u64;
                    rest /= d as u128;
                    c
                })
                .collect()
        })
    }

    /// Exhaustive invertibility test; cached.
    pub fn is_field(&self) -> bool {
        *self.is_field_cache.get_or_init(|| {
            if self.cardinality > 1_000_000 {
                return false; // out of enumeration range; callers guard this
            }
            if self.cardinality < 2 {
                return false;
            }
            self.enumerate()
                .filter(|a| !self.is_zero(a))
                .all(|a| self.invert(&a).is_some())
        })
    }

    /// Nonunits form an ideal iff the ring is local.
    pub fn is_local(&self) -> bool {
        let nonunits: Vec<CanonElem> = self
            .enumerate()
            .filter(|a| !self.is_zero(a) && self.invert(a).is_none())
            .collect();
        for a in &nonunits {
            for b in &nonunits {
                let s = self.add(a, b);
                if !self.is_zero(&s) && self.invert(&s).is_some() {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self, a: &CanonElem) -> String {
        self.field.render(&self.lift(a))
    }
}

/// An automorphism or sigma-derivation induced on the quotient.
#[derive(Clone)]
pub struct InducedMap {
    pub ring: Arc<FiniteQuotientRing>,
    pub kind: MapKind,
    pub name: String,
    /// Rational matrix on ambient field basis coordinates (row k = image of b_k).
    rows: Vec<Vec<Rat>>,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Automorphism,
    Derivation,
}

impl std::fmt::Debug for InducedMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "InducedMap({}, {:?})", self.name, self.kind)
    }
}

impl InducedMap {
    pub fn apply(&self, a: &CanonElem) -> CanonElem {
        let lifted = self.ring.lift(a);
        let n = self.ring.field.degree;
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in lifted.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for k in 0..n {
                if !self.rows[i][k].is_zero() {
                    out[k] += xi * &self.rows[i][k];
                }
            }
        }
        self.ring
            .project(&FieldElement(out))
            .expect("induced map images are integral")
    }

    pub fn apply_pow(&self, a: &CanonElem, k: usize) -> CanonElem {
        let mut out = a.clone();
        let reduced = match self.order {
            Some(ord) => k % ord,
            None => k,
        };
        for _ in 0..reduced {
            out = self.apply(&out);
        }
        out
    }

    /// Identity automorphism on the quotient.
    pub fn identity(ring: &Arc<FiniteQuotientRing>) -> InducedMap {
        let n = ring.field.degree;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() })
                    .collect()
            })
            .collect();
        InducedMap {
            ring: Arc::clone(ring),
            kind: MapKind::Automorphism,
            name: "id".into(),
            rows,
            order: Some(1),
        }
    }

    /// Zero derivation on the quotient.
    pub fn zero_derivation(ring: &Arc<FiniteQuotientRing>) -> InducedMap {
        let n = ring.field.degree;
        let rows = vec![vec![Rat::zero(); n]; n];
        InducedMap {
            ring: Arc::clone(ring),
            kind: MapKind::Derivation,
            name: "0".into(),
            rows,
            order: None,
        }
    }
}

fn check_stabilizes(
    ring: &FiniteQuotientRing,
    rows: &[Vec<Rat>],
    ideal_gens: &[FieldElement],
) -> Result<(), QuotientError> {
    // lattice generators are g * b_i; the map must send each into the lattice
    let lattice = ring.relation_lattice();
    let field = &ring.field;
    let n = field.degree;
    for g in ideal_gens {
        for i in 0..n {
            let v = field.mul(g, &field.basis_elem(i));
            let mut img = vec![Rat::zero(); n];
            for (a, xa) in v.0.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for k in 0..n {
                    img[k] += xa * &rows[a][k];
                }
            }
            let img = FieldElement(img);
            let coords = img
                .integer_coords()
                .map_err(|_| QuotientError::NotWellDefined {
                    witness: field.render(&v),
                })?;
            if !lattice.contains(&coords) {
                return Err(QuotientError::NotWellDefined {
                    witness: field.render(&v),
                });
            }
        }
    }
    Ok(())
}

/// Induce a field automorphism on the quotient, verifying well-definedness
/// and the ring-homomorphism law exhaustively on canonical units.
pub fn induce_automorphism(
    ring: &Arc<FiniteQuotientRing>,
    auto: &FieldAutomorphism,
    ideal: &IntegralIdeal,
) -> Result<InducedMap, QuotientError> {
    check_stabilizes(ring, &auto.rows, &ideal.generators)?;
    let map = InducedMap {
        ring: Arc::clone(ring),
        kind: MapKind::Automorphism,
        name: auto.name.clone(),
        rows: auto.rows.clone(),
        order: Some(auto.order),
    };
    let n = ring.degree();
    let unit = |i: usize| {
        let mut c = vec![0u64; n];
        c[i] = 1;
        c
    };
    if map.apply(&ring.one) != ring.one {
        return Err(QuotientError::InducedMapBroken("does not fix 1".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = map.apply(&ring.mul(&unit(i), &unit(j)));
            let rhs = ring.mul(&map.apply(&unit(i)), &map.apply(&unit(j)));
            if lhs != rhs {
                return Err(QuotientError::InducedMapBroken(format!(
                    "multiplicativity fails at canonical units ({i},{j})"
                )));
            }
        }
    }
    Ok(map)
}

/// Induce a sigma-derivation on the quotient; checks the twisted Leibniz law
/// against the induced sigma on canonical units.
pub fn induce_derivation(
    ring: &Arc<FiniteQuotientRing>,
    der: &FieldDerivation,
    sigma: &InducedMap,
    ideal: &IntegralIdeal,
) -> Result<InducedMap, QuotientError> {
    check_stabilizes(ring, &der.rows, &ideal.generators)?;
    let map = InducedMap {
        ring: Arc::clone(ring),
        kind: MapKind::Derivation,
        name: der.name.clone(),
        rows: der.rows.clone(),
        order: None,
    };
    let n = ring.degree();
    let unit = |i: usize| {
        let mut c = vec![0u64; n];
        c[i] = 1;
        c
    };
    if !ring.is_zero(&map.apply(&ring.one)) {
        return Err(QuotientError::InducedMapBroken("delta(1) != 0".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let a = unit(i);
            let b = unit(j);
            let lhs = map.apply(&ring.mul(&a, &b));
            let rhs = ring.add(
                &ring.mul(&sigma.apply(&a), &map.apply(&b)),
                &ring.mul(&map.apply(&a), &b),
            );
            if lhs != rhs {
                return Err(QuotientError::InducedMapBroken(format!(
                    "Leibniz law fails at canonical units ({i},{j})"
                )));
            }
        }
    }
    Ok(map)
}

/// One factor of the CRT decomposition.
#[derive(Debug, Clone)]
pub struct CrtComponent {
    pub idempotent: CanonElem,
    pub elements: Vec<CanonElem>,
    pub cardinality: u128,
    pub is_field: bool,
}

/// Decompose into components along the complete system of primitive
/// idempotents, found by exhaustive search for solutions of x^2 = x.
pub fn crt_decompose(
    ring: &FiniteQuotientRing,
    budget: u128,
) -> Result<Vec<CrtComponent>, QuotientError> {
    if ring.cardinality > budget {
        return Err(QuotientError::BudgetExceeded {
            cardinality: ring.cardinality,
            budget,
        });
    }
    let idempotents: Vec<CanonElem> = ring
        .enumerate()
        .filter(|x| !ring.is_zero(x) && ring.mul(x, x) == *x)
        .collect();
    // primitive = minimal nonzero under e <= f iff e*f = e
    let primitive: Vec<&CanonElem> = idempotents
        .iter()
        .filter(|e| {
            !idempotents
                .iter()
                .any(|g| g != **e && ring.mul(g, e) == *g)
        })
        .collect();

    // primitive idempotents must sum to 1 and be pairwise orthogonal
    let mut sum = ring.zero();
    for e in &primitive {
        sum = ring.add(&sum, e);
    }
    if sum != ring.one {
        return Err(QuotientError::InducedMapBroken(
            "primitive idempotents do not sum to 1".into(),
        ));
    }
    for (a, e) in primitive.iter().enumerate() {
        for f in primitive.iter().skip(a + 1) {
            if !ring.is_zero(&ring.mul(e, f)) {
                return Err(QuotientError::InducedMapBroken(
                    "primitive idempotents are not orthogonal".into(),
                ));
            }
        }
    }

    let mut comps: Vec<CrtComponent> = primitive
        .into_iter()
        .map(|e| {
            let mut elems: Vec<CanonElem> =
                ring.enumerate().map(|x| ring.mul(e, &x)).collect();
            elems.sort();
            elems.dedup();
            let card = elems.len() as u128;
            // field test inside the component, identity = e
            let is_field = elems
                .iter()
                .filter(|x| !ring.is_zero(x))
                .all(|x| elems.iter().any(|y| ring.mul(x, y) == *e));
            CrtComponent {
                idempotent: e.clone(),
                elements: elems,
                cardinality: card,
                is_field,
            }
        })
        .collect();
    comps.sort_by(|a, b| a.idempotent.cmp(&b.idempotent));
    let product: u128 = comps.iter().map(|c| c.cardinality).product();
    if product != ring.cardinality {
        return Err(QuotientError::InducedMapBroken(
            "component cardinalities do not multiply to |Q|".into(),
        ));
    }
    Ok(comps)
}

/// Splitting data (e, f, g) of a prime ideal of the designated subring in
/// the extension described by the quotient.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SplittingReport {
    pub e: usize,
    pub f: usize,
    pub g: usize,
    pub extension_degree: usize,
    pub residue_cardinality: u128,
    pub component_cardinalities: Vec<u128>,
    pub ramified: bool,
}

/// Compute the splitting report for a prime ideal q of the subring. The
/// quotient `ring` must be O_K / q·O_K for the same q.
pub fn splitting_report(
    field: &Arc<NumberField>,
    ring: &FiniteQuotientRing,
    q: &IntegralIdeal,
    budget: u128,
) -> Result<SplittingReport, QuotientError> {
    // residue ring of the subring: must be a field for q to be prime
    let residue = subring_residue(field, q)?;
    if !residue.is_field() {
        return Err(QuotientError::NotPrime(
            q.label.clone(),
            format!("residue ring has {} elements and is not a field", residue.cardinality),
        ));
    }
    let residue_cardinality = residue.cardinality;

    let comps = crt_decompose(ring, budget)?;
    let g = comps.len();
    // nilpotents signal ramification
    let mut ramified = false;
    let mut nil_sizes = vec![];
    for c in &comps {
        let nil = c
            .elements
            .iter()
            .filter(|x| {
                if ring.is_zero(x) {
                    return false;
                }
                let mut p = (*x).clone();
                for _ in 0..64 {
                    p = ring.mul(&p, x);
                    if ring.is_zero(&p) {
                        return true;
                    }
                }
                false
            })
            .count() as u128;
        if nil > 0 {
            ramified = true;
        }
        nil_sizes.push(nil + 1); // nilradical size including 0
    }
    let extension_degree = field.degree / sf.basis_indices.len();
    let f = {
        let c0 = &comps[0];
        let residue_size = c0.cardinality / nil_sizes[0];
        log_base(residue_size, residue_cardinality).ok_or_else(|| {
            QuotientError::InducedMapBroken(
                "component residue size is not a power of the base residue field".into(),
            )
        })?
    };
    let e = if ramified {
        extension_degree / (f * g)
    } else {
        1
    };
    Ok(SplittingReport {
        e,
        f,
        g,
        extension_degree,
        residue_cardinality,
        component_cardinalities: comps.iter().map(|c| c.cardinality).collect(),
        ramified,
    })
}

/// The quotient of the subring that owns `q` by q itself (O_F / q).
pub fn subring_residue(
    field: &Arc<NumberField>,
    q: &IntegralIdeal,
) -> Result<FiniteQuotientRing, QuotientError> {
    let sf = field.subfield(&q.subring)?;
    let mut sub = field.subfield_as_field(&q.subring)?;
    sub.subfields.insert(
        "all".into(),
        crate::field::Subfield {
            name: "all".into(),
            basis_indices: (0..sub.degree).collect(),
        },
    );
    let sub_arc = Arc::new(sub);
    let mut generators = vec![];
    for g in &q.generators {
        generators.push(field.restrict_to_subfield(g, sf)?);
    }
    let sub_ideal = IntegralIdeal {
        subring: "all".into(),
        generators,
        factorization: None,
        label: q.label.clone(),
    };
    build_quotient(&sub_arc, &sub_ideal)
}

fn log_base(value: u128, base: u128) -> Option<usize> {
    if base < 2 {
        return None;
    }
    let mut acc = 1u128;
    let mut k = 0;
    while acc < value {
        acc = acc.checked_mul(base)?;
        k += 1;
    }
    if acc == value {
        Some(k)
    } else {
        None
    }
}

/// The subring fixed pointwise by an induced map.
#[derive(Debug, Clone)]
pub struct FixedSubring {
    pub elements: Vec<CanonElem>,
    pub cardinality: u128,
    pub is_field: bool,
}

pub fn fixed_subring(ring: &FiniteQuotientRing, map: &InducedMap) -> FixedSubring {
    let elements: Vec<CanonElem> = ring
        .enumerate()
        .filter(|x| map.apply(x) == *x)
        .collect();
    let one = &ring.one;
    let is_field = elements
        .iter()
        .filter(|x| !ring.is_zero(x))
        .all(|x| elements.iter().any(|y| ring.mul(x, y) == *one));
    FixedSubring {
        cardinality: elements.len() as u128,
        elements,
        is_field,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn gaussian() -> Arc<NumberField> {
        Arc::new(presets::field("gaussian").unwrap())
    }

    fn ideal_zi(field: &Arc<NumberField>, coords: &[i64]) -> IntegralIdeal {
        IntegralIdeal::principal(field, "rational", field.from_i64(coords)).unwrap()
    }

    #[test]
    fn gaussian_mod_one_plus_i() {
        let k = gaussian();
        let g = k.from_i64(&[1, 1]);
        // (1+i) is not in the rational subring; use the full-ring ideal helper
        let ideal = IntegralIdeal {
            subring: "rational".into(),
            generators: vec![g],
            factorization: None,
            label: "(1+i)".into(),
        };
        let q = build_quotient(&k, &ideal).unwrap();
        assert_eq!(q.cardinality, 2);
        assert_eq!(q.characteristic, 2);
        assert!(q.is_field());
    }

    #[test]
    fn gaussian_sqrt5_mod_one_plus_i_is_f4() {
        let k = Arc::new(presets::field("gaussian_sqrt5").unwrap());
        let ideal =
            IntegralIdeal::principal(&k, "gaussian", k.from_i64(&[1, 1, 0, 0])).unwrap();
        let q = Arc::new(build_quotient(&k, &ideal).unwrap());
        assert_eq!(q.cardinality, 4);
        assert!(q.is_field());
        assert_eq!(q.characteristic, 2);

        // sigma induces the Frobenius x -> x^2 on the 4 elements
        let sigma = k.automorphism("sigma").unwrap();
        let sbar = induce_automorphism(&q, sigma, &ideal).unwrap();
        for x in q.enumerate() {
            assert_eq!(sbar.apply(&x), q.mul(&x, &x));
        }
        // Fix(sigma-bar) = F_2
        let fix = fixed_subring(&q, &sbar);
        assert_eq!(fix.cardinality, 2);
        assert!(fix.is_field);
    }

    #[test]
    fn omega7_field_mod_2_is_f64() {
        let k = Arc::new(presets::field("eisenstein_omega7").unwrap());
        let two = k.integer_scalar(2);
        let ideal = IntegralIdeal::principal(&k, "eisenstein", two).unwrap();
        let q = build_quotient(&k, &ideal).unwrap();
        assert_eq!(q.cardinality, 64);
        assert!(q.is_field());
    }

    #[test]
    fn identity_and_zero_maps() {
        let k = gaussian();
        let ideal = ideal_zi(&k, &[3, 0]);
        let q = Arc::new(build_quotient(&k, &ideal).unwrap());
        let id = InducedMap::identity(&q);
        let zero = InducedMap::zero_derivation(&q);
        for x in q.enumerate() {
            assert_eq!(id.apply(&x), x);
            assert!(q.is_zero(&zero.apply(&x)));
        }
    }

    #[test]
    fn crt_split_and_inert() {
        let k = gaussian();
        let q5 = build_quotient(&k, &ideal_zi(&k, &[5, 0])).unwrap();
        let comps = crt_decompose(&q5, 1_000_000).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.cardinality == 5 && c.is_field));

        let q3 = build_quotient(&k, &ideal_zi(&k, &[3, 0])).unwrap();
        let comps = crt_decompose(&q3, 1_000_000).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].cardinality, 9);
        assert!(comps[0].is_field);
        assert!(q3.is_field());
    }

    #[test]
    fn crt_on_z_mod_6() {
        let k = Arc::new(presets::field("rationals").unwrap());
        let ideal = IntegralIdeal::principal(&k, "rational", k.from_i64(&[6])).unwrap();
        let q = build_quotient(&k, &ideal).unwrap();
        assert_eq!(q.cardinality, 6);
        let comps = crt_decompose(&q, 100).unwrap();
        let mut sizes: Vec<u128> = comps.iter().map(|c| c.cardinality).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
        // embeddings compose with projections to the identity on each component
        for c in &comps {
            for x in &c.elements {
                assert_eq!(q.mul(&c.idempotent, x), *x);
            }
        }
    }

    #[test]
    fn splitting_reports() {
        let k5 = Arc::new(presets::field("gaussian_sqrt5").unwrap());
        let ideal =
            IntegralIdeal::principal(&k5, "gaussian", k5.from_i64(&[1, 1, 0, 0])).unwrap();
        let q = build_quotient(&k5, &ideal).unwrap();
        let rep = splitting_report(&k5, &q, &ideal, 1_000_000).unwrap();
        assert_eq!((rep.e, rep.f, rep.g), (1, 2, 1));
        assert!(!rep.ramified);

        let k7 = Arc::new(presets::field("eisenstein_omega7").unwrap());
        let ideal2 = IntegralIdeal::principal(&k7, "eisenstein", k7.integer_scalar(2)).unwrap();
        let q2 = build_quotient(&k7, &ideal2).unwrap();
        let rep2 = splitting_report(&k7, &q2, &ideal2, 1_000_000).unwrap();
        assert_eq!((rep2.e, rep2.f, rep2.g), (1, 3, 1));

        // ramified case is detected and reported: (1+i)^2 = 2i generates 2Z[i]
        let k = gaussian();
        let ideal_two = ideal_zi(&k, &[2, 0]);
        let q3 = build_quotient(&k, &ideal_two).unwrap();
        let rep3 = splitting_report(&k, &q3, &ideal_two, 1_000_000).unwrap();
        assert!(rep3.ramified);
        assert_eq!((rep3.e, rep3.f, rep3.g), (2, 1, 1));
    }

    #[test]
    fn projection_is_ring_hom_on_random_pairs() {
        let k = Arc::new(presets::field("gaussian_sqrt5").unwrap());
        let ideal =
            IntegralIdeal::principal(&k, "gaussian", k.from_i64(&[1, 1, 0, 0])).unwrap();
        let q = build_quotient(&k, &ideal).unwrap();
        let mut state = 1u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 35) as i64 % 19) - 9
        };
        for _ in 0..200 {
            let x = k.from_i64(&(0..4).map(|_| next()).collect::<Vec<_>>());
            let y = k.from_i64(&(0..4).map(|_| next()).collect::<Vec<_>>());
            let px = q.project(&x).unwrap();
            let py = q.project(&y).unwrap();
            assert_eq!(q.project(&k.add(&x, &y)).unwrap(), q.add(&px, &py));
            assert_eq!(q.project(&k.mul(&x, &y)).unwrap(), q.mul(&px, &py));
        }
    }

    #[test]
    fn sigma_bar_commutes_with_projection() {
        let k = Arc::new(presets::field("gaussian_sqrt5").unwrap());
        let ideal =
            IntegralIdeal::principal(&k, "gaussian", k.from_i64(&[1, 1, 0, 0])).unwrap();
        let q = Arc::new(build_quotient(&k, &ideal).unwrap());
        let sigma = k.automorphism("sigma").unwrap();
        let sbar = induce_automorphism(&q, sigma, &ideal).unwrap();
        for i in 0..4 {
            let b = k.basis_elem(i);
            assert_eq!(
                q.project(&k.apply(sigma, &b)).unwrap(),
                sbar.apply(&q.project(&b).unwrap())
            );
        }
    }

    #[test]
    fn prime_power_quotient_is_local() {
        let k = gaussian();
        let q9 = build_quotient(&k, &ideal_zi(&k, &[9, 0])).unwrap();
        assert_eq!(q9.cardinality, 81);
        assert!(q9.is_local());
        assert!(!q9.is_field());
        // |O_K/q^s| = |O_K/q|^s
        let q3 = build_quotient(&k, &ideal_zi(&k, &[3, 0])).unwrap();
        assert_eq!(q9.cardinality, q3.cardinality.pow(2));
        // split quotient is not local
        let q5 = build_quotient(&k, &ideal_zi(&k, &[5, 0])).unwrap();
        assert!(!q5.is_local());
    }

    #[test]
    fn cardinality_equals_lattice_determinant() {
        let k = gaussian();
        let g = k.from_i64(&[1, 1]);
        let ideal = IntegralIdeal {
            subring: "rational".into(),
            generators: vec![g.clone()],
            factorization: None,
            label: "(1+i)".into(),
        };
        let q = build_quotient(&k, &ideal).unwrap();
        // basis of the lattice: rows (1+i), (1+i)*i
        let m = IntMatrix::from_rows(vec![
            k.mul(&g, &k.basis_elem(0)).integer_coords().unwrap(),
            k.mul(&g, &k.basis_elem(1)).integer_coords().unwrap(),
        ]);
        let det = m.det().unwrap();
        assert_eq!(Int::from(q.cardinality), det.abs());
    }

    #[test]
    fn non_stabilizing_map_is_rejected() {
        // conj does not stabilize (2+i)Z[i] (a split prime), so inducing must fail
        let k = gaussian();
        let ideal = IntegralIdeal {
            subring: "rational".into(),
            generators: vec![k.from_i64(&[2, 1])],
            factorization: None,
            label: "(2+i)".into(),
        };
        let q = Arc::new(build_quotient(&k, &ideal).unwrap());
        let conj = k.automorphism("conj").unwrap();
        assert!(matches!(
            induce_automorphism(&q, conj, &ideal),
            Err(QuotientError::NotWellDefined { .. })
        ));
    }

    #[test]
    fn zero_ideal_rejected() {
        let k = gaussian();
        let ideal = IntegralIdeal {
            subring: "rational".into(),
            generators: vec![k.zero()],
            factorization: None,
            label: "(0)".into(),
        };
        assert!(matches!(
            build_quotient(&k, &ideal),
            Err(QuotientError::ZeroIdeal)
        ));
    }
}
