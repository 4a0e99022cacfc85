//! Declarative job configuration: one structured-text format describes the
//! field, the algebra, the ideal to reduce by, and the code parameters.
//! Command-line flags only choose the command and override budgets/seed.

use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_budget")]
    pub budget: u128,
    pub field: FieldRef,
    pub algebra: AlgebraConfig,
    #[serde(default)]
    pub ideal: Option<IdealConfig>,
    #[serde(default)]
    pub code: Option<CodeConfig>,
}

fn default_seed() -> u64 {
    0
}

fn default_budget() -> u128 {
    1_000_000
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRef {
    #[serde(default)]
    pub preset: Option<String>,
    /// Inline field spec (the full field TOML as a string).
    #[serde(default)]
    pub inline: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    #[serde(default = "default_kind")]
    pub kind: AlgebraKind,
    /// Automorphism driving the skew polynomial ring (the outer one for
    /// iterated algebras).
    pub sigma: String,
    /// Optional derivation name; empty means delta = 0.
    #[serde(default)]
    pub delta: Option<String>,
    /// Degree of the modulus t^m - d (cyclic) or the outer degree (iterated).
    pub degree: usize,
    /// Constant d as a coordinate vector over the field basis.
    #[serde(default)]
    pub d: Option<Vec<i64>>,
    /// General monic modulus: coefficients c_0..c_{m-1}, each a coordinate
    /// vector. Overrides `d` when present (cyclic algebras only).
    #[serde(default)]
    pub f: Option<Vec<Vec<i64>>>,
    /// Center subring (subfield name) that owns reduction ideals.
    pub center: String,
    /// For iterated algebras: lets reports know where d lives (subfield name).
    #[serde(default)]
    pub d_in: Option<String>,
    /// Division status asserted by configuration (with provenance note).
    #[serde(default)]
    pub division_assumed: Option<String>,
    /// Inner cyclic algebra data (iterated algebras only).
    #[serde(default)]
    pub inner: Option<InnerConfig>,
}

fn default_kind() -> AlgebraKind {
    AlgebraKind::Cyclic
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    Cyclic,
    Iterated,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InnerConfig {
    pub rho: String,
    pub c: Vec<i64>,
    pub degree: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealConfig {
    pub subring: String,
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub label: Option<String>,
    /// Known factorization into prime powers, when the caller has it.
    #[serde(default)]
    pub factors: Vec<IdealFactorConfig>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFactorConfig {
    pub generators: Vec<Vec<i64>>,
    #[serde(default = "default_exponent")]
    pub exponent: u32,
    #[serde(default)]
    pub label: Option<String>,
}

fn default_exponent() -> u32 {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub length: usize,
    #[serde(default = "default_outer")]
    pub outer: OuterKind,
    #[serde(default = "default_box_lo")]
    pub box_lo: i64,
    #[serde(default = "default_box_hi")]
    pub box_hi: i64,
    /// Principal generator of the ideal, for the determinant bound.
    #[serde(default)]
    pub alpha: Option<Vec<i64>>,
    /// Per-residue representative cap for the desk-scale coset enumeration.
    #[serde(default = "default_reps")]
    pub reps_per_residue: usize,
}

fn default_outer() -> OuterKind {
    OuterKind::Parity
}
fn default_box_lo() -> i64 {
    -2
}
fn default_box_hi() -> i64 {
    2
}
fn default_reps() -> usize {
    4
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterKind {
    /// L-tuples whose last entry is the sum of the others (free otherwise).
    Parity,
    /// Constant L-tuples.
    Repetition,
    /// First coordinates run over a repetition code over the coefficient
    /// quotient; remaining coordinates free.
    BaseRepetition,
    /// First coordinates run over a single-parity-check code.
    BaseSpc,
    /// First coordinates pinned to zero.
    BaseZero,
}

pub fn parse_job(toml_text: &str) -> Result<JobConfig, crate::Error> {
    let cfg: JobConfig =
        toml::from_str(toml_text).map_err(|e| crate::Error::Config(e.to_string()))?;
    validate_job(&cfg)?;
    Ok(cfg)
}

fn validate_job(cfg: &JobConfig) -> Result<(), crate::Error> {
    if cfg.field.preset.is_none() && cfg.field.inline.is_none() {
        return Err(crate::Error::Config(
            "field must name a preset or give an inline spec".into(),
        ));
    }
    if cfg.algebra.degree < 2 {
        return Err(crate::Error::Config(
            "algebra degree must be at least 2".into(),
        ));
    }
    if cfg.algebra.d.is_none() && cfg.algebra.f.is_none() {
        return Err(crate::Error::Config(
            "algebra needs either d (cyclic form) or f (general modulus)".into(),
        ));
    }
    if cfg.algebra.kind == AlgebraKind::Iterated {
        if cfg.algebra.inner.is_none() {
            return Err(crate::Error::Config(
                "iterated algebras need an [algebra.inner] block".into(),
            ));
        }
        if cfg.algebra.f.is_some() {
            return Err(crate::Error::Config(
                "iterated algebras use d, not a general modulus".into(),
            ));
        }
    }
    if cfg.budget == 0 {
        return Err(crate::Error::Config("budget must be positive".into()));
    }
    if let Some(code) = &cfg.code {
        if code.length == 0 {
            return Err(crate::Error::Config("code length must be positive".into()));
        }
        if code.box_lo > code.box_hi {
            return Err(crate::Error::Config("empty coefficient box".into()));
        }
    }
    Ok(())
}
