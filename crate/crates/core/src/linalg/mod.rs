//! Arithmetic in `GF(2^e)` and black-box linear algebra over it.
//!
//! Matrices are only touched through matrix-vector products, so every
//! algorithm here is stated against the [`BlackBox`] trait and its call
//! counter. The top-level entry point is [`sparse_linear_system_solver`],
//! which returns a verified solution or a verified certificate that no
//! solution exists.

mod berlekamp_massey;
mod gf2e;
mod poly;
mod random_sol;
mod solver;
mod sparse;
mod toeplitz;
mod wiedemann;

pub use berlekamp_massey::berlekamp_massey;
pub use gf2e::{clmul, clmul_portable, Gf2e, Gf2eField, SUPPORTED_DEGREES};
pub use poly::PolyOverGf2e;
pub use random_sol::random_sol;
pub use solver::{minimal_polynomial, sparse_linear_system_solver, SolverOptions, SolverVerdict};
pub use sparse::{BlackBox, SparseMatrix, Transposed};
pub use toeplitz::Preconditioned;
pub use wiedemann::{wiedemann, Probes, WiedemannOutcome};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("no built-in modulus for GF(2^{0})")]
    UnsupportedDegree(u32),
    #[error("GF(2^{degree}) is too small for dimension {dim}")]
    FieldTooSmall { degree: u32, dim: usize },
    #[error("{bits:#x} is not an element of GF(2^{degree})")]
    NotAnElement { bits: u64, degree: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} is malformed (unsorted, duplicate, zero or out-of-range entries)")]
    MalformedRow { row: usize },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("no verified verdict after {attempts} attempts")]
    RetryBudgetExhausted { attempts: usize },
}
