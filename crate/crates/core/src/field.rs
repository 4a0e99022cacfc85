//! Number fields presented by an integral basis with integer structure
//! constants. Everything the rest of the library knows about a field — its
//! multiplication, automorphisms, subfields, complex embedding — comes from
//! a declarative spec that is verified exhaustively at load time, so a field
//! object that exists is a field object whose axioms have been checked.
//!
//! The spec format (TOML):
//!
//! ```toml
//! name = "gaussian"
//! degree = 2
//! basis = ["1", "i"]
//! # entries [i, j, c_0, ..., c_{n-1}] meaning b_i * b_j = sum_k c_k b_k,
//! # with 0-based indices; pairs may be given for i <= j only.
//! mul_table = [[0, 0, 1, 0], [0, 1, 0, 1], [1, 1, -1, 0]]
//!
//! [subfields]
//! rational = [0]
//!
//! [automorphisms.conj]
//! order = 2
//! fixed_subfield = "rational"
//! images = [[1, 0], [0, -1]]   # rows are basis images
//!
//! [embedding]
//! images = [[1.0, 0.0], [0.0, 1.0]]  # complex (re, im) per basis element
//! ```

use crate::exact::{linalg, Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("field spec parse error: {0}")]
    Parse(String),
    #[error("ring axiom violated at basis triple ({i},{j},{k}): {detail}")]
    AxiomViolation {
        i: usize,
        j: usize,
        k: usize,
        detail: String,
    },
    #[error("automorphism '{name}' invalid: {detail}")]
    BadAutomorphism { name: String, detail: String },
    #[error("derivation '{name}' invalid: {detail}")]
    BadDerivation { name: String, detail: String },
    #[error("subfield '{name}' invalid: {detail}")]
    BadSubfield { name: String, detail: String },
    #[error("embedding inconsistent at basis pair ({i},{j}): residual {residual}")]
    BadEmbedding { i: usize, j: usize, residual: f64 },
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },
    #[error("ideal invalid: {0}")]
    BadIdeal(String),
    #[error("element has non-integral coordinates")]
    NotIntegral,
}

/// Element of a number field: exact coordinates over the integral basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(pub Vec<Rat>);

impl FieldElement {
    pub fn from_i64(coords: &[i64]) -> Self {
        FieldElement(coords.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn from_int(coords: Vec<Int>) -> Self {
        FieldElement(coords.into_iter().map(Rat::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn integer_coords(&self) -> Result<Vec<Int>, FieldError> {
        if !self.is_integral() {
            return Err(FieldError::NotIntegral);
        }
        Ok(self.0.iter().map(|c| c.to_integer()).collect())
    }
}

/// Q-linear field automorphism given by its matrix of basis images.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldAutomorphism {
    pub name: String,
    /// Row k is the coordinate vector of the image of basis element k.
    pub rows: Vec<Vec<Rat>>,
    pub order: usize,
    pub fixed_subfield: String,
}

/// Sigma-twisted derivation given by its matrix of basis images.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldDerivation {
    pub name: String,
    pub rows: Vec<Vec<Rat>>,
    /// Name of the automorphism it twists against.
    pub sigma: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subfield {
    pub name: String,
    /// Indices of the basis elements spanning the subfield (a coordinate subspace).
    pub basis_indices: Vec<usize>,
}

/// A number field with verified structure data.
#[derive(Debug, Clone)]
pub struct NumberField {
    pub name: String,
    pub degree: usize,
    pub basis_labels: Vec<String>,
    /// mul_table[i][j] = integer coordinates of b_i * b_j.
    mul_table: Vec<Vec<Vec<Int>>>,
    pub automorphisms: BTreeMap<String, FieldAutomorphism>,
    pub derivations: BTreeMap<String, FieldDerivation>,
    pub subfields: BTreeMap<String, Subfield>,
    /// Complex images of the basis elements, if configured.
    pub embedding: Option<Vec<(f64, f64)>>,
}

// ---------------------------------------------------------------------------
// config structs

#[derive(Deserialize)]
struct FieldSpecToml {
    name: String,
    degree: usize,
    basis: Vec<String>,
    mul_table: Vec<Vec<i64>>,
    #[serde(default)]
    subfields: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    automorphisms: BTreeMap<String, AutomorphismToml>,
    #[serde(default)]
    derivations: BTreeMap<String, DerivationToml>,
    embedding: Option<EmbeddingToml>,
}

#[derive(Deserialize)]
struct AutomorphismToml {
    order: usize,
    fixed_subfield: String,
    images: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct DerivationToml {
    sigma: String,
    images: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct EmbeddingToml {
    images: Vec<Vec<f64>>,
}

/// Parse and fully validate a field spec.
pub fn load_field(toml_text: &str) -> Result<NumberField, FieldError> {
    let spec: FieldSpecToml =
        toml::from_str(toml_text).map_err(|e| FieldError::Parse(e.to_string()))?;
    let n = spec.degree;
    if n == 0 || spec.basis.len() != n {
        return Err(FieldError::Parse(format!(
            "degree {} does not match basis of length {}",
            n,
            spec.basis.len()
        )));
    }

    // assemble the (symmetric) multiplication table
    let mut table: Vec<Vec<Option<Vec<Int>>>> = vec![vec![None; n]; n];
    for row in &spec.mul_table {
        if row.len() != n + 2 {
            return Err(FieldError::Parse(format!(
                "mul_table rows must have {} entries, got {}",
                n + 2,
                row.len()
            )));
        }
        let (i, j) = (row[0] as usize, row[1] as usize);
        if i >= n || j >= n {
            return Err(FieldError::Parse(format!("mul_table index ({i},{j}) out of range")));
        }
        let coords: Vec<Int> = row[2..].iter().map(|&c| Int::from(c)).collect();
        table[i][j] = Some(coords.clone());
        table[j][i] = Some(coords);
    }
    let mul_table: Vec<Vec<Vec<Int>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    table[i][j].clone().ok_or(FieldError::Parse(format!(
                        "mul_table is missing the pair ({i},{j})"
                    )))
                })
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;

    let subfields: BTreeMap<String, Subfield> = spec
        .subfields
        .into_iter()
        .map(|(name, idxs)| {
            let sf = Subfield {
                name: name.clone(),
                basis_indices: idxs,
            };
            (name, sf)
        })
        .collect();

    let automorphisms: BTreeMap<String, FieldAutomorphism> = spec
        .automorphisms
        .into_iter()
        .map(|(name, a)| {
            let rows = a
                .images
                .iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect();
            (
                name.clone(),
                FieldAutomorphism {
                    name,
                    rows,
                    order: a.order,
                    fixed_subfield: a.fixed_subfield,
                },
            )
        })
        .collect();

    let derivations: BTreeMap<String, FieldDerivation> = spec
        .derivations
        .into_iter()
        .map(|(name, d)| {
            let rows = d
                .images
                .iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
                .collect();
            (
                name.clone(),
                FieldDerivation {
                    name,
                    rows,
                    sigma: d.sigma,
                },
            )
        })
        .collect();

    let embedding = match spec.embedding {
        None => None,
        Some(e) => {
            if e.images.len() != n || e.images.iter().any(|v| v.len() != 2) {
                return Err(FieldError::Parse(
                    "embedding must list one (re, im) pair per basis element".into(),
                ));
            }
            Some(e.images.iter().map(|v| (v[0], v[1])).collect())
        }
    };

    let field = NumberField {
        name: spec.name,
        degree: n,
        basis_labels: spec.basis,
        mul_table,
        automorphisms,
        derivations,
        subfields,
        embedding,
    };
    field.validate()?;
    Ok(field)
}

impl NumberField {
    // -- construction checks ------------------------------------------------

    fn validate(&self) -> Result<(), FieldError> {
        let n = self.degree;

        // b_0 must be the unit: b_0 * b_j = b_j
        for j in 0..n {
            if self.mul_table[0][j] != self.unit_coords(j) {
                return Err(FieldError::AxiomViolation {
                    i: 0,
                    j,
                    k: 0,
                    detail: "basis element 0 must be the multiplicative unit".into(),
                });
            }
        }

        // associativity on all basis triples
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.basis_elem(i), &self.basis_elem(j));
                    let left = self.mul(&left, &self.basis_elem(k));
                    let right = self.mul(&self.basis_elem(j), &self.basis_elem(k));
                    let right = self.mul(&self.basis_elem(i), &right);
                    if left != right {
                        return Err(FieldError::AxiomViolation {
                            i,
                            j,
                            k,
                            detail: "associativity fails".into(),
                        });
                    }
                }
            }
        }

        for sf in self.subfields.values() {
            self.validate_subfield(sf)?;
        }
        for auto in self.automorphisms.values() {
            self.validate_automorphism(auto)?;
        }
        for der in self.derivations.values() {
            self.validate_derivation(der)?;
        }
        if let Some(embed) = &self.embedding {
            for i in 0..n {
                for j in 0..n {
                    let prod = cmul(embed[i], embed[j]);
                    let mut expect = (0.0, 0.0);
                    for (k, c) in self.mul_table[i][j].iter().enumerate() {
                        let cf = c.to_f64().unwrap();
                        expect.0 += cf * embed[k].0;
                        expect.1 += cf * embed[k].1;
                    }
                    let residual =
                        ((prod.0 - expect.0).powi(2) + (prod.1 - expect.1).powi(2)).sqrt();
                    if residual > 1e-9 {
                        return Err(FieldError::BadEmbedding { i, j, residual });
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_subfield(&self, sf: &Subfield) -> Result<(), FieldError> {
        let bad = |detail: String| FieldError::BadSubfield {
            name: sf.name.clone(),
            detail,
        };
        if sf.basis_indices.is_empty() || sf.basis_indices[0] != 0 {
            return Err(bad("subfield must contain basis index 0 first".into()));
        }
        if sf.basis_indices.iter().any(|&i| i >= self.degree) {
            return Err(bad("basis index out of range".into()));
        }
        for &i in &sf.basis_indices {
            for &j in &sf.basis_indices {
                let prod = self.mul(&self.basis_elem(i), &self.basis_elem(j));
                if !self.in_subfield(&prod, sf) {
                    return Err(bad(format!("not closed under b_{i} * b_{j}")));
                }
            }
        }
        Ok(())
    }

    fn validate_automorphism(&self, auto: &FieldAutomorphism) -> Result<(), FieldError> {
        let bad = |detail: String| FieldError::BadAutomorphism {
            name: auto.name.clone(),
            detail,
        };
        let n = self.degree;
        if auto.rows.len() != n || auto.rows.iter().any(|r| r.len() != n) {
            return Err(bad("image matrix has wrong shape".into()));
        }
        if auto.order == 0 {
            return Err(bad("order must be positive".into()));
        }
        if self.apply(auto, &self.one()) != self.one() {
            return Err(bad("does not fix 1".into()));
        }
        // multiplicative on basis pairs
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(auto, &self.mul(&self.basis_elem(i), &self.basis_elem(j)));
                let rhs = self.mul(
                    &self.apply(auto, &self.basis_elem(i)),
                    &self.apply(auto, &self.basis_elem(j)),
                );
                if lhs != rhs {
                    return Err(bad(format!("not multiplicative at basis pair ({i},{j})")));
                }
            }
        }
        // declared order is exact
        for k in 1..=auto.order {
            let mut img: Vec<FieldElement> =
                (0..n).map(|i| self.basis_elem(i)).collect();
            for _ in 0..k {
                img = img.iter().map(|x| self.apply(auto, x)).collect();
            }
            let is_identity = (0..n).all(|i| img[i] == self.basis_elem(i));
            if k < auto.order && is_identity {
                return Err(bad(format!("order is {k}, declared {}", auto.order)));
            }
            if k == auto.order && !is_identity {
                return Err(bad(format!("power {k} is not the identity")));
            }
        }
        // fixes the declared subfield pointwise
        let sf = self
            .subfields
            .get(&auto.fixed_subfield)
            .ok_or_else(|| bad(format!("unknown fixed subfield '{}'", auto.fixed_subfield)))?;
        for &i in &sf.basis_indices {
            if self.apply(auto, &self.basis_elem(i)) != self.basis_elem(i) {
                return Err(bad(format!("does not fix subfield basis element {i}")));
            }
        }
        Ok(())
    }

    fn validate_derivation(&self, der: &FieldDerivation) -> Result<(), FieldError> {
        let bad = |detail: String| FieldError::BadDerivation {
            name: der.name.clone(),
            detail,
        };
        let n = self.degree;
        if der.rows.len() != n || der.rows.iter().any(|r| r.len() != n) {
            return Err(bad("image matrix has wrong shape".into()));
        }
        let sigma = self
            .automorphisms
            .get(&der.sigma)
            .ok_or_else(|| bad(format!("unknown automorphism '{}'", der.sigma)))?;
        if !self.apply_derivation(der, &self.one()).is_zero() {
            return Err(bad("delta(1) != 0".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let a = self.basis_elem(i);
                let b = self.basis_elem(j);
                let lhs = self.apply_derivation(der, &self.mul(&a, &b));
                let rhs = self.add(
                    &self.mul(&self.apply(sigma, &a), &self.apply_derivation(der, &b)),
                    &self.mul(&self.apply_derivation(der, &a), &b),
                );
                if lhs != rhs {
                    return Err(bad(format!("Leibniz rule fails at basis pair ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    // -- element helpers ----------------------------------------------------

    fn unit_coords(&self, j: usize) -> Vec<Int> {
        (0..self.degree)
            .map(|k| if k == j { Int::one() } else { Int::zero() })
            .collect()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![Rat::zero(); self.degree])
    }

    pub fn one(&self) -> FieldElement {
        self.basis_elem(0)
    }

    pub fn basis_elem(&self, i: usize) -> FieldElement {
        FieldElement(
            (0..self.degree)
                .map(|k| {
                    if k == i {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn from_i64(&self, coords: &[i64]) -> FieldElement {
        assert_eq!(coords.len(), self.degree);
        FieldElement::from_i64(coords)
    }

    pub fn integer_scalar(&self, k: i64) -> FieldElement {
        let mut e = self.zero();
        e.0[0] = Rat::from_integer(k.into());
        e
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement(x.0.iter().zip(&y.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        FieldElement(x.0.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in self.mul_table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * Rat::from_integer(c.clone());
                    }
                }
            }
        }
        FieldElement(out)
    }

    pub fn scale(&self, x: &FieldElement, c: &Rat) -> FieldElement {
        FieldElement(x.0.iter().map(|a| a * c).collect())
    }

    /// Matrix of y -> x*y in basis coordinates (columns are coords(x * b_j)).
    pub fn mult_matrix(&self, x: &FieldElement) -> Vec<Vec<Rat>> {
        let n = self.degree;
        let cols: Vec<FieldElement> = (0..n).map(|j| self.mul(x, &self.basis_elem(j))).collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j].0[i].clone()).collect())
            .collect()
    }

    pub fn inverse(&self, x: &FieldElement) -> Result<FieldElement, FieldError> {
        if x.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let m = self.mult_matrix(x);
        let mut rhs = vec![Rat::zero(); self.degree];
        rhs[0] = Rat::one();
        let sol = linalg::solve_rat(&m, &rhs).ok_or(FieldError::ZeroInverse)?;
        let candidate = FieldElement(sol);
        debug_assert_eq!(self.mul(x, &candidate), self.one());
        Ok(candidate)
    }

    pub fn pow(&self, x: &FieldElement, k: usize) -> FieldElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Field norm N_{K/Q}(x): determinant of the multiplication-by-x map.
    pub fn norm(&self, x: &FieldElement) -> Rat {
        use crate::exact::det::{det_exact, RMatrix, RatRing};
        let m = self.mult_matrix(x);
        let mat = RMatrix::from_rows(m);
        det_exact(&RatRing, &mat).expect("square by construction")
    }

    pub fn apply(&self, auto: &FieldAutomorphism, x: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for k in 0..n {
                if !auto.rows[i][k].is_zero() {
                    out[k] += xi * &auto.rows[i][k];
                }
            }
        }
        FieldElement(out)
    }

    pub fn apply_derivation(&self, der: &FieldDerivation, x: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for k in 0..n {
                if !der.rows[i][k].is_zero() {
                    out[k] += xi * &der.rows[i][k];
                }
            }
        }
        FieldElement(out)
    }

    pub fn apply_pow(&self, auto: &FieldAutomorphism, x: &FieldElement, k: usize) -> FieldElement {
        let mut out = x.clone();
        for _ in 0..(k % auto.order) {
            out = self.apply(auto, &out);
        }
        out
    }

    pub fn is_fixed_by(&self, x: &FieldElement, auto: &FieldAutomorphism) -> bool {
        self.apply(auto, x) == *x
    }

    pub fn automorphism(&self, name: &str) -> Result<&FieldAutomorphism, FieldError> {
        self.automorphisms.get(name).ok_or(FieldError::UnknownName {
            kind: "automorphism",
            name: name.to_string(),
        })
    }

    pub fn derivation(&self, name: &str) -> Result<&FieldDerivation, FieldError> {
        self.derivations.get(name).ok_or(FieldError::UnknownName {
            kind: "derivation",
            name: name.to_string(),
        })
    }

    pub fn subfield(&self, name: &str) -> Result<&Subfield, FieldError> {
        self.subfields.get(name).ok_or(FieldError::UnknownName {
            kind: "subfield",
            name: name.to_string(),
        })
    }

    pub fn in_subfield(&self, x: &FieldElement, sf: &Subfield) -> bool {
        (0..self.degree).all(|i| sf.basis_indices.contains(&i) || x.0[i].is_zero())
    }

    /// Integral element lying in the given subfield's coordinate subspace.
    pub fn in_subring(&self, x: &FieldElement, sf: &Subfield) -> bool {
        x.is_integral() && self.in_subfield(x, sf)
    }

    /// True iff 1, d, ..., d^{m-1} are linearly independent over the
    /// subfield, decided by exact rank over Q of the coordinate expansion.
    pub fn power_independence(&self, d: &FieldElement, m: usize, sf: &Subfield) -> bool {
        let n = self.degree;
        let powers: Vec<FieldElement> = (0..m).map(|j| self.pow(d, j)).collect();
        // columns indexed by (power j, subfield basis s): coords(b_s * d^j)
        let mut cols: Vec<Vec<Rat>> = vec![];
        for p in &powers {
            for &s in &sf.basis_indices {
                cols.push(self.mul(&self.basis_elem(s), p).0.clone());
            }
        }
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        linalg::rank_rat(&rows) == m * sf.basis_indices.len()
    }

    pub fn embed(&self, x: &FieldElement) -> Result<(f64, f64), FieldError> {
        let embed = self.embedding.as_ref().ok_or(FieldError::UnknownName {
            kind: "embedding",
            name: self.name.clone(),
        })?;
        let mut out = (0.0, 0.0);
        for (i, c) in x.0.iter().enumerate() {
            let cf = rat_to_f64(c);
            out.0 += cf * embed[i].0;
            out.1 += cf * embed[i].1;
        }
        Ok(out)
    }

    /// A view of a subfield as a standalone field (basis and structure
    /// constants restricted to the subfield's coordinate subspace).
    pub fn subfield_as_field(&self, name: &str) -> Result<NumberField, FieldError> {
        let sf = self.subfield(name)?;
        let idx = &sf.basis_indices;
        let r = idx.len();
        let mut mul_table = vec![vec![vec![]; r]; r];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                let full = &self.mul_table[i][j];
                mul_table[a][b] = idx.iter().map(|&k| full[k].clone()).collect();
            }
        }
        let embedding = self
            .embedding
            .as_ref()
            .map(|e| idx.iter().map(|&i| e[i]).collect());
        let field = NumberField {
            name: format!("{}::{}", self.name, name),
            degree: r,
            basis_labels: idx.iter().map(|&i| self.basis_labels[i].clone()).collect(),
            mul_table,
            automorphisms: BTreeMap::new(),
            derivations: BTreeMap::new(),
            subfields: BTreeMap::new(),
            embedding,
        };
        field.validate().map_err(|e| FieldError::BadSubfield {
            name: name.to_string(),
            detail: e.to_string(),
        })?;
        Ok(field)
    }

    /// Express a subfield element in subfield coordinates.
    pub fn restrict_to_subfield(
        &self,
        x: &FieldElement,
        sf: &Subfield,
    ) -> Result<FieldElement, FieldError> {
        if !self.in_subfield(x, sf) {
            return Err(FieldError::BadIdeal(format!(
                "element is not in subfield '{}'",
                sf.name
            )));
        }
        Ok(FieldElement(
            sf.basis_indices.iter().map(|&i| x.0[i].clone()).collect(),
        ))
    }

    pub fn render(&self, x: &FieldElement) -> String {
        let mut parts = vec![];
        for (i, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.basis_labels[i];
            let part = if i == 0 {
                format!("{c}")
            } else if c.is_one() {
                label.clone()
            } else if (-c).is_one() {
                format!("-{label}")
            } else {
                format!("{c}*{label}")
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

fn rat_to_f64(c: &Rat) -> f64 {
    c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN)
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Nonzero ideal of the ring of integers of a designated subfield.
#[derive(Debug, Clone)]
pub struct IntegralIdeal {
    /// Subfield whose integer ring owns the ideal.
    pub subring: String,
    /// Generators, as elements of the ambient field.
    pub generators: Vec<FieldElement>,
    /// Optional factorization into (prime-power ideal, exponent) pieces.
    pub factorization: Option<Vec<(IntegralIdeal, u32)>>,
    pub label: String,
}

impl IntegralIdeal {
    pub fn new(
        field: &NumberField,
        subring: &str,
        generators: Vec<FieldElement>,
        label: String,
    ) -> Result<Self, FieldError> {
        let sf = field.subfield(subring)?;
        if generators.is_empty() || generators.iter().all(|g| g.is_zero()) {
            return Err(FieldError::BadIdeal("ideal must be nonzero".into()));
        }
        for g in &generators {
            if !field.in_subring(g, sf) {
                return Err(FieldError::BadIdeal(format!(
                    "generator {} is not an integral element of subring '{}'",
                    field.render(g),
                    subring
                )));
            }
        }
        Ok(IntegralIdeal {
            subring: subring.to_string(),
            generators,
            factorization: None,
            label,
        })
    }

    pub fn principal(
        field: &NumberField,
        subring: &str,
        generator: FieldElement,
    ) -> Result<Self, FieldError> {
        let label = format!("({})", field.render(&generator));
        Self::new(field, subring, vec![generator], label)
    }

    /// The single generator when the ideal is principal.
    pub fn principal_generator(&self) -> Option<&FieldElement> {
        if self.generators.len() == 1 {
            Some(&self.generators[0])
        } else {
            None
        }
    }
}

impl fmt::Display for IntegralIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn gaussian_sqrt5_preset_loads() {
        let k = presets::field("gaussian_sqrt5").unwrap();
        assert_eq!(k.degree, 4);
        let sigma = k.automorphism("sigma").unwrap();
        // sigma(phi) = 1 - phi, i.e. sigma(sqrt5) = -sqrt5
        let phi = k.basis_elem(2);
        let img = k.apply(sigma, &phi);
        assert_eq!(img, k.sub(&k.one(), &phi));
        // fixes Q(i) pointwise
        assert!(k.is_fixed_by(&k.basis_elem(1), sigma));
    }

    #[test]
    fn eisenstein_omega7_preset_loads() {
        let k = presets::field("eisenstein_omega7").unwrap();
        assert_eq!(k.degree, 6);
        assert_eq!(k.automorphism("sigma").unwrap().order, 3);
        assert_eq!(k.automorphism("rho").unwrap().order, 2);
    }

    #[test]
    fn rejects_basis_without_unit() {
        // b_0 * b_0 = b_1 cannot be a unit
        let bad = r#"
            name = "bad"
            degree = 2
            basis = ["a", "b"]
            mul_table = [[0, 0, 0, 1], [0, 1, 1, 0], [1, 1, 0, 1]]
        "#;
        match load_field(bad) {
            Err(FieldError::AxiomViolation { .. }) => {}
            other => panic!("expected AxiomViolation, got {other:?}"),
        }
    }

    #[test]
    fn defining_relations() {
        let k = presets::field("gaussian_sqrt5").unwrap();
        let i = k.basis_elem(1);
        let phi = k.basis_elem(2);
        // i * i = -1
        assert_eq!(k.mul(&i, &i), k.neg(&k.one()));
        // phi * phi = phi + 1
        assert_eq!(k.mul(&phi, &phi), k.add(&phi, &k.one()));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let k = presets::field("gaussian").unwrap();
        let x = k.from_i64(&[1, 1]);
        let inv = k.inverse(&x).unwrap();
        let expect = FieldElement(vec![
            Rat::new(1.into(), 2.into()),
            Rat::new((-1).into(), 2.into()),
        ]);
        assert_eq!(inv, expect);
        assert_eq!(k.mul(&x, &inv), k.one());
        assert!(matches!(k.inverse(&k.zero()), Err(FieldError::ZeroInverse)));
    }

    #[test]
    fn power_independence_cases() {
        let k = presets::field("gaussian_sqrt5").unwrap();
        let qi = k.subfield("gaussian").unwrap();
        let phi = k.basis_elem(2);
        assert!(k.power_independence(&phi, 2, qi));
        assert!(!k.power_independence(&k.one(), 2, qi));
        assert!(!k.power_independence(&k.basis_elem(1), 2, qi));
    }

    #[test]
    fn automorphism_properties_on_random_elements() {
        let k = presets::field("eisenstein_omega7").unwrap();
        let sigma = k.automorphism("sigma").unwrap();
        let mut state = 7u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(11);
            ((state >> 40) as i64 % 9) - 4
        };
        for _ in 0..50 {
            let x = k.from_i64(&(0..6).map(|_| next()).collect::<Vec<_>>());
            let y = k.from_i64(&(0..6).map(|_| next()).collect::<Vec<_>>());
            assert_eq!(
                k.apply(sigma, &k.mul(&x, &y)),
                k.mul(&k.apply(sigma, &x), &k.apply(sigma, &y))
            );
            assert_eq!(
                k.apply(sigma, &k.add(&x, &y)),
                k.add(&k.apply(sigma, &x), &k.apply(sigma, &y))
            );
            assert_eq!(k.apply_pow(sigma, &x, sigma.order), x);
            // integrality is preserved by ring operations
            assert!(k.mul(&x, &y).is_integral());
            assert!(k.add(&x, &y).is_integral());
        }
    }

    #[test]
    fn inverse_roundtrip_on_random_nonzero() {
        let k = presets::field("gaussian_omega15").unwrap();
        let mut state = 99u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
            ((state >> 40) as i64 % 5) - 2
        };
        let mut checked = 0;
        while checked < 100 {
            let x = k.from_i64(&(0..8).map(|_| next()).collect::<Vec<_>>());
            if x.is_zero() {
                continue;
            }
            let inv = k.inverse(&x).unwrap();
            assert_eq!(k.mul(&x, &inv), k.one());
            checked += 1;
        }
    }

    #[test]
    fn ideal_validation() {
        let k = presets::field("gaussian_sqrt5").unwrap();
        // 1+i lies in the gaussian subring
        let g = k.from_i64(&[1, 1, 0, 0]);
        assert!(IntegralIdeal::principal(&k, "gaussian", g).is_ok());
        // phi does not
        let phi = k.basis_elem(2);
        assert!(IntegralIdeal::principal(&k, "gaussian", phi).is_err());
        // zero ideal rejected
        assert!(IntegralIdeal::principal(&k, "gaussian", k.zero()).is_err());
    }
}
