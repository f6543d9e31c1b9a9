use mqsolve_core::estimator::{
    baseline_costs, exponent, m_func, minimize_exponent, quantum_security_bits, security_parameters, ComplexityProfile,
    Setting, Variant, REFERENCE_TABLE,
};
use mqsolve_core::macaulay::witness_degree;

fn profile(theta: f64, setting: Setting) -> ComplexityProfile {
    ComplexityProfile::new(1.0, theta, Variant::Deterministic, setting).unwrap()
}

#[test]
fn published_endpoints() {
    let cases = [
        (3.0, Setting::Classical, 0.27, 0.888),
        (2.376, Setting::Classical, 0.40, 0.841),
        (2.0, Setting::Classical, 0.55, 0.792),
        (3.0, Setting::Quantum, 0.10, 0.477),
        (2.376, Setting::Quantum, 0.13, 0.470),
        (2.0, Setting::Quantum, 0.17, 0.462),
    ];
    for (theta, setting, gamma, value) in cases {
        let best = minimize_exponent(&profile(theta, setting));
        assert!((best.exponent - value).abs() <= 0.002, "{setting:?} θ={theta}: {}", best.exponent);
        assert!((best.gamma_star - gamma).abs() <= 0.02, "{setting:?} θ={theta}: γ* = {}", best.gamma_star);
    }
}

#[test]
fn minimizer_beats_a_fine_grid() {
    for setting in [Setting::Classical, Setting::Quantum] {
        for theta in [2.0, 2.376, 2.8, 3.0] {
            let p = profile(theta, setting);
            let best = minimize_exponent(&p);
            let grid_min =
                (1..100_000).filter_map(|i| exponent(&p, i as f64 * 1e-5).ok()).fold(f64::INFINITY, f64::min);
            assert!(best.exponent <= grid_min + 1e-9, "{setting:?} θ={theta}: {} vs {grid_min}", best.exponent);
            assert!((exponent(&p, best.gamma_star).unwrap() - best.exponent).abs() < 1e-12);
        }
    }
}

/// `M(x)` is the limit of `d_wit(xN, N, 0) / N`; the series gives the
/// finite-`N` value exactly and the gap shrinks like `N^{-1/2}`.
#[test]
fn m_function_is_the_witness_degree_limit() {
    for x in [1.0, 1.5, 2.0, 3.0] {
        let limit = m_func(x).unwrap();
        let gap = |n: usize| witness_degree((x * n as f64).round() as usize, n, 0).unwrap() as f64 / n as f64 - limit;
        let (coarse, fine) = (gap(250), gap(1000));
        assert!(fine > 0.0 && fine < coarse, "x = {x}: gaps {coarse} then {fine}");
        assert!(fine < 0.015, "x = {x}: gap {fine}");
    }
}

#[test]
fn security_table_and_re_evaluation() {
    for row in REFERENCE_TABLE {
        let ours = security_parameters(row.security_bits);
        assert!(ours.n.abs_diff(row.n) <= 1, "{} bits: n = {}", row.security_bits, ours.n);
        let rel = (ours.key_bytes - row.key_bytes).abs() / row.key_bytes;
        assert!(rel <= 0.02, "{} bits: {} bytes", row.security_bits, ours.key_bytes);
    }
    assert_eq!(quantum_security_bits(256), 118);
    let b = baseline_costs(80, 80);
    assert!(b.quantum_boolean_solve < b.quantum_exhaustive && b.classical_boolean_solve < b.classical_exhaustive);
}
