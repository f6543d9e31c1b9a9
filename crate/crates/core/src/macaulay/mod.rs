//! Boolean Macaulay matrices and the consistency certificate.
//!
//! A vector `u` with `u M = (0, ..., 0, 1)` for the degree-`d` Macaulay
//! matrix `M` of a system shows that `1` lies in the ideal, so the system
//! has no Boolean root. The degree at which to look is the witness degree,
//! read off the Hilbert series of a semi-regular system.

mod certificate;
mod hilbert;
mod matrix;
mod order;

pub use certificate::{consistency_certificate, sparse_verdict, Certificate, CertificateBackend};
pub use hilbert::{hilbert_prefix, witness_degree};
pub use matrix::{build_macaulay, read_triplets, shape_bounds, MacaulayMatrix, ShapeBounds};
pub use order::DrlOrder;

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacaulayError {
    #[error("degree {d} is below 2 but the system has quadratic equations")]
    DegreeTooLow { d: usize },
    #[error(
        "Hilbert series of HS({m}, {n}, {k}) has no non-positive coefficient up to index {cap}: series never truncates"
    )]
    SeriesNeverTruncates { m: usize, n: usize, k: usize, cap: usize },
    #[error("dense and sparse backends disagree (dense certificate: {dense}, sparse certificate: {sparse})")]
    BackendDisagreement { dense: bool, sparse: bool },
    #[error("triplet input line {line}: {message}")]
    Triplet { line: usize, message: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
