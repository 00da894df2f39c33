//! Exact arithmetic substrate: arbitrary-precision rationals, dense matrices
//! over the rationals and over cyclotomic fields, characteristic polynomials,
//! and integer/rational root extraction.
//!
//! Everything here is exact; there is no floating point anywhere in this
//! crate. Integrality questions (does a matrix have an integer eigenvalue?)
//! are decided through characteristic polynomials and divisor tests, never
//! through numerical eigenvalue extraction.

pub mod cyclo;
pub mod matrix;
pub mod poly;
mod rational;

pub use cyclo::{CycloElem, CycloField, CycloMatrix};
pub use matrix::QMatrix;
pub use poly::{cyclotomic_polynomial, QPolynomial, RootMode};
pub use rational::{format_rational, parse_rational, rat, Rat};

use thiserror::Error;

/// Errors produced by the exact arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("malformed rational '{0}'")]
    BadRational(String),
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;
