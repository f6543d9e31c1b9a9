//! Boolean quadratic systems in algebraic normal form.

mod monomial;
mod parse;
mod polynomial;
mod random;
mod search;
mod system;

pub use monomial::{Monomial, MAX_VARS};
pub use parse::parse_system;
pub use polynomial::{square_free_reduce, Assignment, BooleanPolynomial, ExponentMonomial};
pub use random::random_system;
pub use search::{brute_force_solve, BRUTE_FORCE_MAX_VARS};
pub use system::PolynomialSystem;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MqError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: variable x{index} is outside x1..x{n}")]
    VariableOutOfRange { line: usize, column: usize, index: usize, n: usize },
    #[error("line {line}, column {column}: term has degree greater than 2")]
    DegreeTooHigh { line: usize, column: usize },
    #[error("expected {expected} equations, found {found} (line {line})")]
    EquationCount { expected: usize, found: usize, line: usize },
    #[error("polynomial {index} has degree greater than 2")]
    NotQuadratic { index: usize },
    #[error("length mismatch: expected {expected} variables, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{0} variables exceed the supported maximum of {max}", max = MAX_VARS)]
    TooManyVariables(usize),
    #[error("exhaustive search over {n} variables exceeds the cap of {cap}")]
    SearchCapExceeded { n: usize, cap: usize },
}
