//! The hybrid solvers.
//!
//! Both fix the last `k` variables to every `a_2` in `F_2^k` and ask the
//! Macaulay consistency test, [`f_cons`], whether the specialized system can
//! be refuted. The classical solver searches every unrefuted branch
//! exhaustively; the simulated quantum solver runs Grover search over the
//! tabulated test and then over the surviving branch.

mod classical;
mod quantum_sim;

pub use crate::estimator::Variant;
pub use classical::{classical_boolean_solve, f_cons, SolveReport};
pub use quantum_sim::{
    consistency_table, quantum_boolean_solve_sim, quantum_parameters, solve_with_table, QuantumSolveReport,
    QUANTUM_RETRY_BUDGET, STAGE_QUBIT_CAP,
};

use serde::Serialize;
use thiserror::Error;

use crate::estimator::{minimize_exponent, ComplexityProfile, EstimatorError, Setting};
use crate::linalg::SolverOptions;
use crate::macaulay::{CertificateBackend, MacaulayError};
use crate::mq::MqError;
use crate::quantum::{IterationRule, QuantumError};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Mq(#[from] MqError),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error(transparent)]
    Estimator(#[from] EstimatorError),
    #[error("k = {k} exceeds the number of variables n = {n}")]
    InvalidK { k: usize, n: usize },
    #[error("{what} needs {qubits} qubits, above the cap of {cap}")]
    CapExceeded { what: &'static str, qubits: usize, cap: usize },
    #[error("no verified root after {attempts} measurement attempts")]
    RetryBudgetExhausted { attempts: usize },
}

/// How many variables to fix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KPolicy {
    Explicit(usize),
    /// `k = round((1 - γ*) n)` with `γ*` minimizing the cost exponent at
    /// `α = m/n` and `θ = 2.376`.
    GammaOptimal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub k_policy: KPolicy,
    pub variant: Variant,
    pub backend: CertificateBackend,
    pub seed: u64,
    /// Grover iteration rule for the simulated quantum solver.
    pub iteration_rule: IterationRule,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            k_policy: KPolicy::GammaOptimal,
            variant: Variant::Deterministic,
            backend: CertificateBackend::Dense,
            seed: 0,
            iteration_rule: IterationRule::Floor,
        }
    }
}

impl SolveConfig {
    pub fn with_k(k: usize) -> Self {
        SolveConfig { k_policy: KPolicy::Explicit(k), ..SolveConfig::default() }
    }

    pub(crate) fn solver_options(&self) -> SolverOptions {
        SolverOptions { deterministic: self.variant == Variant::Deterministic, ..SolverOptions::default() }
    }
}

/// Matrix-multiplication exponent used by the gamma-optimal policy.
pub const DEFAULT_THETA: f64 = 2.376;

/// Resolves the policy to a concrete `k` for `m` equations in `n` variables.
pub fn resolve_k(
    policy: KPolicy,
    n: usize,
    m: usize,
    variant: Variant,
    setting: Setting,
) -> Result<usize, SolverError> {
    match policy {
        KPolicy::Explicit(k) if k > n => Err(SolverError::InvalidK { k, n }),
        KPolicy::Explicit(k) => Ok(k),
        KPolicy::GammaOptimal => {
            if n == 0 {
                return Ok(0);
            }
            let alpha = (m as f64 / n as f64).max(1.0);
            let profile = ComplexityProfile::new(alpha, DEFAULT_THETA, variant, setting)?;
            let gamma = minimize_exponent(&profile).gamma_star;
            Ok((((1.0 - gamma) * n as f64).round() as usize).min(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_optimal_k() {
        // γ* ≈ 0.404 classically, 0.139 with Grover.
        assert_eq!(resolve_k(KPolicy::GammaOptimal, 12, 12, Variant::Deterministic, Setting::Classical).unwrap(), 7);
        assert_eq!(resolve_k(KPolicy::GammaOptimal, 12, 12, Variant::Deterministic, Setting::Quantum).unwrap(), 10);
        assert!(resolve_k(KPolicy::Explicit(13), 12, 12, Variant::Deterministic, Setting::Classical).is_err());
    }
}
