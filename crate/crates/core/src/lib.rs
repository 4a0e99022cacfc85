//! Exact-arithmetic library for nonassociative algebras built from skew
//! polynomial rings over rings of integers of number fields: their natural
//! orders, finite quotient rings, structure analysis, and the inner / outer /
//! coset pipeline for space-time block codes.
//!
//! The layers, bottom up:
//!
//! * [`exact`] — big-integer matrices, Smith normal form, determinants over
//!   commutative rings, polynomials over prime fields.
//! * [`field`] — number fields given by an integral basis with structure
//!   constants, their automorphisms, subfields and ideals.
//! * [`quotient`] — finite rings O_K/I·O_K in Smith-normal-form coordinates
//!   with induced automorphisms and derivations, CRT decomposition, and
//!   splitting reports.
//! * [`skew`] — skew polynomial arithmetic over any coefficient ring that
//!   exposes ring operations together with sigma and delta.
//! * [`petit`] — the algebras S_f = R/Rf with multiplication g∘h = gh mod_r f,
//!   their nuclei, ideals, division status, and right-multiplication matrices.
//! * [`order`] — natural orders in S_f over number fields, reduction modulo
//!   an ideal of the center subring, and decomposition of the quotients.
//! * [`coding`] — codebooks of right-multiplication matrices, outer codes
//!   over the quotient, coset lifting, Hamming distance, minimum determinant,
//!   and the determinant lower bound.
//! * [`config`] / [`presets`] — declarative job configuration and the named
//!   instances shipped with the crate.

pub mod coding;
pub mod config;
pub mod exact;
pub mod field;
pub mod order;
pub mod petit;
pub mod presets;
pub mod quotient;
pub mod report;
pub mod skew;

pub use exact::{ExactError, Int, Rat};
pub use field::FieldError;
pub use quotient::QuotientError;
pub use skew::SkewError;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Quotient(#[from] quotient::QuotientError),
    #[error(transparent)]
    Skew(#[from] skew::SkewError),
    #[error(transparent)]
    Petit(#[from] petit::PetitError),
    #[error(transparent)]
    Order(#[from] order::OrderError),
    #[error(transparent)]
    Coding(#[from] coding::CodingError),
    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Field(FieldError::Parse(_)) => 2,
            Error::Exact(ExactError::EnumerationBudget { .. }) => 3,
            Error::Quotient(QuotientError::BudgetExceeded { .. }) => 3,
            Error::Petit(petit::PetitError::BudgetExceeded { .. }) => 3,
            _ => 4,
        }
    }
}
