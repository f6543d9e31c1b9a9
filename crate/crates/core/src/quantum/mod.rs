//! Reversible circuits, statevector simulation and gate-cost accounting.
//!
//! The gate set is the classical reversible one (`X`, `CNOT`, Toffoli and
//! its `n`-wire generalization, `Swap`); the simulator adds a Hadamard
//! layer for state preparation and a tabulated phase oracle for Grover
//! search.

mod builders;
mod circuit;
mod cost;
mod grover;
mod state;

pub use builders::{build_equality_circuit, build_inner_product_circuit, build_matmul_circuit, build_matvec_circuit};
pub use circuit::{Circuit, Gate};
pub use cost::{gate_cost, qrs_gate_count, GateCost, QrsGateCount};
pub use grover::{
    grover_iterations, grover_search_sim, grover_success_probability, sample_shots, GroverOutcome, IterationRule,
};
pub use state::{StateVector, MAX_QUBITS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantumError {
    #[error("{qubits} qubits exceed the simulator cap of {max}")]
    TooManyQubits { qubits: usize, max: usize },
    #[error("gate wires {wires:?} are invalid for a {wire_count}-wire circuit")]
    InvalidGate { wires: Vec<usize>, wire_count: usize },
    #[error("circuit has {circuit} wires but the state has {state} qubits")]
    WireCountMismatch { circuit: usize, state: usize },
    #[error("norm drifted to {norm} after a gate")]
    NormDrift { norm: f64 },
    #[error("oracle table has {found} entries, expected 2^{k}")]
    OracleSize { k: usize, found: usize },
    #[error("r = {r} must satisfy 1 <= r <= n = {n}")]
    InvalidRank { n: usize, r: usize },
}
