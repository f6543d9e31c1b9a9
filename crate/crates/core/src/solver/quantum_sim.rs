use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{f_cons, resolve_k, SolveConfig, SolverError};
use crate::estimator::Setting;
use crate::macaulay::witness_degree;
use crate::mq::{brute_force_solve, Assignment, PolynomialSystem};
use crate::quantum::grover_search_sim;
use crate::rng;

/// Measurement attempts before the simulated solver gives up.
pub const QUANTUM_RETRY_BUDGET: usize = 8;
/// Largest register simulated in either Grover stage.
pub const STAGE_QUBIT_CAP: usize = 20;

/// Outcome of [`quantum_boolean_solve_sim`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantumSolveReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub witness_degree: usize,
    pub seed: u64,
    /// Verified root, or `None` when every specialization was refuted.
    pub root: Option<Assignment>,
    /// Specializations the consistency test does not refute.
    pub stage1_marked: u64,
    pub stage1_iterations: u64,
    pub stage1_success_probability: f64,
    /// Roots of the last specialization searched in stage 2.
    pub stage2_marked: u64,
    pub stage2_iterations: u64,
    pub stage2_success_probability: f64,
    pub attempts: usize,
}

/// The stage-1 phase oracle: `f_cons` tabulated over `F_2^k`, with branch
/// `a_2` using ChaCha stream `a_2 + 1` of `cfg.seed`.
pub fn consistency_table(
    system: &PolynomialSystem,
    k: usize,
    d0: usize,
    cfg: &SolveConfig,
) -> Result<Vec<bool>, SolverError> {
    let options = cfg.solver_options();
    (0..1u64 << k)
        .into_par_iter()
        .map(|bits| {
            let mut branch_rng = rng::substream(cfg.seed, bits + 1);
            f_cons(system, &Assignment::new(bits, k), d0, cfg.backend, options, &mut branch_rng)
        })
        .collect()
}

/// The resolved `k` and witness degree for the simulated solver, after
/// checking the register caps.
pub fn quantum_parameters(system: &PolynomialSystem, cfg: &SolveConfig) -> Result<(usize, usize), SolverError> {
    let n = system.num_vars();
    let m = system.num_equations();
    let k = resolve_k(cfg.k_policy, n, m, cfg.variant, Setting::Quantum)?;
    for (what, qubits) in [("stage 1", k), ("stage 2", n - k)] {
        if qubits > STAGE_QUBIT_CAP {
            return Err(SolverError::CapExceeded { what, qubits, cap: STAGE_QUBIT_CAP });
        }
    }
    Ok((k, witness_degree(m, n, k)?))
}

/// Simulates the two-stage Grover solver.
///
/// Stage 1 searches `a_2` in `F_2^k` with the phase oracle
/// [`consistency_table`]. Stage 2 searches `a_1` in `F_2^{n-k}` for a root
/// of the specialized system. The candidate `(a_1, a_2)` is checked on the
/// original system and the whole measurement is repeated up to
/// [`QUANTUM_RETRY_BUDGET`] times. Measurements draw from `rng`.
pub fn quantum_boolean_solve_sim<R: Rng>(
    system: &PolynomialSystem,
    cfg: &SolveConfig,
    rng: &mut R,
) -> Result<QuantumSolveReport, SolverError> {
    let (k, d0) = quantum_parameters(system, cfg)?;
    let oracle = consistency_table(system, k, d0, cfg)?;
    solve_with_table(system, cfg, k, d0, &oracle, rng)
}

/// The measurement loop of [`quantum_boolean_solve_sim`] on a precomputed
/// stage-1 oracle.
pub fn solve_with_table<R: Rng>(
    system: &PolynomialSystem,
    cfg: &SolveConfig,
    k: usize,
    d0: usize,
    oracle: &[bool],
    rng: &mut R,
) -> Result<QuantumSolveReport, SolverError> {
    let n = system.num_vars();
    let mut report = QuantumSolveReport {
        n,
        m: system.num_equations(),
        k,
        witness_degree: d0,
        seed: cfg.seed,
        root: None,
        stage1_marked: oracle.iter().filter(|&&b| b).count() as u64,
        stage1_iterations: 0,
        stage1_success_probability: 0.0,
        stage2_marked: 0,
        stage2_iterations: 0,
        stage2_success_probability: 0.0,
        attempts: 0,
    };
    if report.stage1_marked == 0 {
        return Ok(report);
    }

    for attempt in 1..=QUANTUM_RETRY_BUDGET {
        report.attempts = attempt;
        let stage1 = grover_search_sim(oracle, k, None, cfg.iteration_rule, rng)?;
        report.stage1_iterations = stage1.iterations;
        report.stage1_success_probability = stage1.success_probability;
        let a2 = Assignment::new(stage1.measured, k);
        if !oracle[stage1.measured as usize] {
            log::debug!("attempt {attempt}: stage 1 measured an unmarked branch");
            continue;
        }

        let specialized = system.specialize(&a2)?;
        let mut marked = vec![false; 1 << (n - k)];
        for root in brute_force_solve(&specialized)? {
            marked[root.bits() as usize] = true;
        }
        let stage2 = grover_search_sim(&marked, n - k, None, cfg.iteration_rule, rng)?;
        report.stage2_marked = stage2.marked_count;
        report.stage2_iterations = stage2.iterations;
        report.stage2_success_probability = stage2.success_probability;
        let candidate = Assignment::new(stage2.measured, n - k).concat(a2);
        if system.is_root(&candidate)? {
            report.root = Some(candidate);
            return Ok(report);
        }
        log::debug!("attempt {attempt}: candidate {candidate} is not a root");
    }
    Err(SolverError::RetryBudgetExhausted { attempts: QUANTUM_RETRY_BUDGET })
}
