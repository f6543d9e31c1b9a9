use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{resolve_k, SolveConfig, SolverError, Variant};
use crate::estimator::Setting;
use crate::linalg::SolverOptions;
use crate::macaulay::{build_macaulay, consistency_certificate, witness_degree, CertificateBackend};
use crate::mq::{brute_force_solve, Assignment, PolynomialSystem};
use crate::rng;

/// `F^cons_{F,k}(a_2)`: `true` unless the degree-`d0` Macaulay matrix of the
/// specialization at `a_2` has a consistency certificate.
///
/// `false` proves the specialization has no Boolean root; `true` proves
/// nothing.
pub fn f_cons<R: Rng>(
    system: &PolynomialSystem,
    a2: &Assignment,
    d0: usize,
    backend: CertificateBackend,
    options: SolverOptions,
    rng: &mut R,
) -> Result<bool, SolverError> {
    let specialized = system.specialize(a2)?;
    let mac = build_macaulay(&specialized, d0)?;
    Ok(consistency_certificate(&mac, backend, options, rng)?.is_none())
}

/// Outcome of [`classical_boolean_solve`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub witness_degree: usize,
    pub variant: Variant,
    pub backend: CertificateBackend,
    pub seed: u64,
    /// All roots, in increasing order of the integer whose bit `i` is
    /// `x_{i+1}`.
    pub solutions: Vec<Assignment>,
    pub macaulay_tests: u64,
    pub certificates_found: u64,
    pub searches_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// All Boolean roots of `system` by the hybrid method.
///
/// Each branch `a_2` draws its randomness from ChaCha stream `a_2 + 1` of
/// `cfg.seed`, and branches run in parallel with an ordered reduction, so
/// the report does not depend on scheduling. `wall_time_ms` is filled in but
/// may be cleared by callers that need byte-stable output.
pub fn classical_boolean_solve(system: &PolynomialSystem, cfg: &SolveConfig) -> Result<SolveReport, SolverError> {
    let start = Instant::now();
    let n = system.num_vars();
    let m = system.num_equations();
    let k = resolve_k(cfg.k_policy, n, m, cfg.variant, Setting::Classical)?;
    let d0 = witness_degree(m, n, k)?;
    let options = cfg.solver_options();

    let branches: Vec<(bool, Vec<Assignment>)> = (0..1u64 << k)
        .into_par_iter()
        .map(|bits| -> Result<(bool, Vec<Assignment>), SolverError> {
            let a2 = Assignment::new(bits, k);
            let mut rng = rng::substream(cfg.seed, bits + 1);
            if !f_cons(system, &a2, d0, cfg.backend, options, &mut rng)? {
                return Ok((true, Vec::new()));
            }
            let specialized = system.specialize(&a2)?;
            let roots = brute_force_solve(&specialized)?.into_iter().map(|a1| a1.concat(a2)).collect();
            Ok((false, roots))
        })
        .collect::<Result<_, _>>()?;

    let tests = branches.len() as u64;
    let certificates = branches.iter().filter(|(refuted, _)| *refuted).count() as u64;
    let solutions = branches.into_iter().flat_map(|(_, roots)| roots).collect();
    Ok(SolveReport {
        n,
        m,
        k,
        witness_degree: d0,
        variant: cfg.variant,
        backend: cfg.backend,
        seed: cfg.seed,
        solutions,
        macaulay_tests: tests,
        certificates_found: certificates,
        searches_run: tests - certificates,
        wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}
