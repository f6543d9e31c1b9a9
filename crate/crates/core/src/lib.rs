//! Solving systems of Boolean quadratic equations.
//!
//! The crate is organised around the hybrid approach: fix `k` of the `n`
//! variables, refute most specializations with a linear-algebra test on a
//! Boolean Macaulay matrix, and search exhaustively only the branches that
//! survive. Alongside the classical solver it ships
//!
//! - [`mq`]: algebraic normal form polynomials, parsing, evaluation and
//!   brute-force enumeration,
//! - [`macaulay`]: Macaulay matrices, Hilbert series and witness degrees,
//!   and the consistency certificate,
//! - [`linalg`]: `GF(2^e)` arithmetic and black-box sparse linear algebra
//!   (Berlekamp-Massey, Wiedemann, the certifying sparse solver),
//! - [`solver`]: the classical solver and a statevector simulation of its
//!   Grover-accelerated counterpart,
//! - [`quantum`]: reversible circuits, a small statevector simulator and
//!   gate-cost accounting,
//! - [`estimator`]: asymptotic exponents and security parameters.

pub mod estimator;
pub mod linalg;
pub mod macaulay;
pub mod mq;
pub mod quantum;
pub mod rng;
pub mod solver;
