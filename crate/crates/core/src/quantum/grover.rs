use std::f64::consts::FRAC_PI_4;

use rand::Rng;
use serde::Serialize;

use super::{QuantumError, StateVector};

/// How the number of Grover iterations is chosen from `k` and the marked
/// count `M`, with `θ = arcsin(sqrt(M / 2^k))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum IterationRule {
    /// `max(1, floor(π / (4θ)))`, the count maximizing success probability.
    #[default]
    Floor,
    /// `ceil(π/4 · sqrt(2^k / M))`.
    Ceiling,
}

/// Iterations for `M` marked items out of `2^k`; zero when nothing or
/// everything is marked.
pub fn grover_iterations(k: usize, marked: u64, rule: IterationRule) -> u64 {
    let n = (1u64 << k) as f64;
    if marked == 0 || marked as f64 >= n {
        return 0;
    }
    match rule {
        IterationRule::Floor => {
            let theta = (marked as f64 / n).sqrt().asin();
            ((FRAC_PI_4 / theta).floor() as u64).max(1)
        }
        IterationRule::Ceiling => (FRAC_PI_4 * (n / marked as f64).sqrt()).ceil() as u64,
    }
}

/// `sin^2((2t + 1) θ)` with `θ = arcsin(sqrt(M / 2^k))`.
pub fn grover_success_probability(k: usize, marked: u64, iterations: u64) -> f64 {
    let theta = (marked as f64 / (1u64 << k) as f64).sqrt().asin();
    ((2 * iterations + 1) as f64 * theta).sin().powi(2)
}

/// Result of one simulated Grover search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroverOutcome {
    pub measured: u64,
    /// Exact probability mass on marked states before measurement.
    pub success_probability: f64,
    pub iterations: u64,
    pub marked_count: u64,
    /// The final state, for repeated sampling.
    #[serde(skip)]
    pub state: StateVector,
}

impl GroverOutcome {
    pub fn no_marked_items(&self) -> bool {
        self.marked_count == 0
    }
}

/// Simulates Grover search over `k` qubits with the phase oracle given by
/// the truth table `marked` (index = basis state).
///
/// `iterations` overrides the count from `rule`. With nothing marked the
/// state stays uniform and the success probability is 0.
pub fn grover_search_sim<R: Rng + ?Sized>(
    marked: &[bool],
    k: usize,
    iterations: Option<u64>,
    rule: IterationRule,
    rng: &mut R,
) -> Result<GroverOutcome, QuantumError> {
    if k >= 64 || marked.len() != 1usize << k {
        return Err(QuantumError::OracleSize { k, found: marked.len() });
    }
    let mut state = StateVector::basis(k, 0)?;
    state.hadamard_all();
    let marked_count = marked.iter().filter(|&&m| m).count() as u64;
    let t = iterations.unwrap_or_else(|| grover_iterations(k, marked_count, rule));
    if marked_count > 0 {
        for _ in 0..t {
            state.phase_flip(marked);
            state.diffuse();
        }
    }
    Ok(GroverOutcome {
        measured: state.sample(rng),
        success_probability: state.marked_mass(marked),
        iterations: if marked_count > 0 { t } else { 0 },
        marked_count,
        state,
    })
}

/// Draws `shots` independent measurements of the final Grover state.
pub fn sample_shots<R: Rng + ?Sized>(outcome: &GroverOutcome, shots: usize, rng: &mut R) -> Vec<u64> {
    (0..shots).map(|_| outcome.state.sample(rng)).collect()
}
