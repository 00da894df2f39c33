//! Exact tools for arrangements of hyperplanes with rational coefficients:
//! intersection lattices and dense edges, Orlik-Solomon / Brieskorn algebras
//! with twisted (Aomoto) cohomology, nonresonance tests for weight and
//! endomorphism systems, eigenspace bounds for Milnor fibers of line
//! arrangements, and an independent Fox-calculus oracle for twisted first
//! Betti numbers.
//!
//! All computations are exact; scalars are arbitrary-precision rationals and
//! roots of unity live in cyclotomic quotient fields.

pub mod arrangement;
pub mod lattice;
pub mod milnor;
pub mod nonres;
pub mod oscomplex;
pub mod pi1;

pub use arrangement::{builtin_arrangement, Arrangement, Kind, LinearForm};
pub use lattice::{
    betti_numbers, dense_edges, is_irreducible, localize, Flat, Guards, IntersectionLattice,
};

use thiserror::Error;

/// Errors raised by arrangement computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Validation(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    #[error("genericity failure after {attempts} attempts (seed {seed})")]
    Genericity { seed: u64, attempts: usize },
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
