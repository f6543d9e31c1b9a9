mod common;

use common::naive_roots;
use mqsolve_core::macaulay::{witness_degree, CertificateBackend};
use mqsolve_core::mq::{brute_force_solve, random_system, Assignment};
use mqsolve_core::rng;
use mqsolve_core::solver::{
    classical_boolean_solve, f_cons, quantum_boolean_solve_sim, KPolicy, SolveConfig, SolverError, Variant,
};
use proptest::prelude::*;

#[test]
fn solutions_match_exhaustive_evaluation() {
    let backends = [CertificateBackend::Dense, CertificateBackend::Sparse, CertificateBackend::CrossCheck];
    for seed in 0..36u64 {
        let n = 4 + seed as usize % 6;
        let m = n + seed as usize % 3;
        let (system, _) = random_system(n, m, seed, seed % 2 == 0);
        let expected = naive_roots(&system);
        assert_eq!(brute_force_solve(&system).unwrap().iter().map(|a| a.bits()).collect::<Vec<_>>(), expected);
        let cfg = SolveConfig {
            k_policy: KPolicy::Explicit(seed as usize % (n + 1)),
            variant: if seed % 3 == 0 { Variant::LasVegas } else { Variant::Deterministic },
            backend: backends[seed as usize % 3],
            seed,
            ..SolveConfig::default()
        };
        let report = classical_boolean_solve(&system, &cfg).unwrap();
        let found: Vec<u64> = report.solutions.iter().map(|a| a.bits()).collect();
        assert_eq!(found, expected, "seed {seed}");
        assert_eq!(report.macaulay_tests, 1 << report.k);
        assert_eq!(report.searches_run + report.certificates_found, report.macaulay_tests);
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let (system, _) = random_system(10, 10, 77, true);
    let cfg = SolveConfig { backend: CertificateBackend::Sparse, seed: 5, ..SolveConfig::with_k(4) };
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let mut report = pool.install(|| classical_boolean_solve(&system, &cfg).unwrap());
        report.wall_time_ms = None;
        serde_json::to_string(&report).unwrap()
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn simulated_quantum_solver_returns_verified_roots() {
    let mut found = 0;
    for seed in 0..12u64 {
        let (system, _) = random_system(9, 9, 1000 + seed, true);
        let cfg = SolveConfig { seed, ..SolveConfig::with_k(4) };
        let mut r = rng::seeded(seed);
        match quantum_boolean_solve_sim(&system, &cfg, &mut r) {
            Ok(report) => {
                let root = report.root.expect("planted systems are consistent");
                assert!(system.is_root(&root).unwrap());
                found += 1;
            }
            Err(SolverError::RetryBudgetExhausted { .. }) => {}
            Err(e) => panic!("seed {seed}: {e}"),
        }
        let mut again = rng::seeded(seed);
        let first = quantum_boolean_solve_sim(&system, &cfg, &mut rng::seeded(seed)).ok();
        assert_eq!(first, quantum_boolean_solve_sim(&system, &cfg, &mut again).ok());
    }
    assert!(found >= 10, "{found} of 12");
}

#[test]
fn unsatisfiable_systems_have_no_quantum_root() {
    let system = mqsolve_core::mq::parse_system("3 2\nx1 + x2\nx1 + x2 + 1\n").unwrap();
    let report = quantum_boolean_solve_sim(&system, &SolveConfig::with_k(1), &mut rng::seeded(0)).unwrap();
    assert_eq!(report.root, None);
    assert_eq!(report.stage1_marked, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_cons_never_refutes_the_planted_branch(n in 5usize..11, k in 1usize..5, seed in any::<u64>()) {
        let k = k.min(n - 1);
        let (system, root) = random_system(n, n, seed, true);
        let (_, tail) = root.unwrap().split(n - k);
        let d0 = witness_degree(n, n, k).unwrap();
        let mut r = rng::seeded(seed);
        for backend in [CertificateBackend::Dense, CertificateBackend::Sparse] {
            prop_assert!(f_cons(&system, &tail, d0, backend, Default::default(), &mut r).unwrap());
        }
        let other = Assignment::new(tail.bits() ^ 1, k);
        let refuted = !f_cons(&system, &other, d0, CertificateBackend::Dense, Default::default(), &mut r).unwrap();
        if refuted {
            prop_assert!(naive_roots(&system.specialize(&other).unwrap()).is_empty());
        }
    }
}
