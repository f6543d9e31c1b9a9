//! Asymptotic cost exponents of the hybrid solvers and the security
//! parameters derived from them.
//!
//! With `γ = 1 - k/n` and `α = m/n`, checking the `2^k` specializations
//! costs `2^{(1 - γ + c F_α(γ)) n}` classically and
//! `2^{((1 - γ)/2 + c F_α(γ)) n}` with Grover search, where `c = θ` for the
//! deterministic variant and `c = 2` for the Las-Vegas one. The `ε` of the
//! asymptotic statements is taken as 0.

mod security;

pub use security::{
    baseline_costs, format_bytes, quantum_security_bits, security_parameters, Baselines, ReferenceRow, SecurityRow,
    CLASSICAL_EXPONENT, QUANTUM_EXPONENT, REFERENCE_TABLE,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EstimatorError {
    #[error("M(x) is undefined at x = {0}")]
    Domain(f64),
    #[error("gamma = {0} must lie strictly between 0 and 1")]
    GammaOutOfRange(f64),
    #[error("theta = {0} must lie in [2, 3]")]
    ThetaOutOfRange(f64),
    #[error("alpha = {0} must be at least 1")]
    AlphaOutOfRange(f64),
}

/// Deterministic or Las-Vegas linear algebra in the consistency checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Variant {
    #[default]
    #[serde(rename = "det")]
    Deterministic,
    #[serde(rename = "lv")]
    LasVegas,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "det" | "deterministic" => Ok(Variant::Deterministic),
            "lv" | "las-vegas" => Ok(Variant::LasVegas),
            other => Err(format!("unknown variant {other:?} (expected det or lv)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Setting {
    #[default]
    Classical,
    Quantum,
}

impl std::str::FromStr for Setting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "classical" => Ok(Setting::Classical),
            "quantum" => Ok(Setting::Quantum),
            other => Err(format!("unknown setting {other:?} (expected classical or quantum)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexityProfile {
    pub alpha: f64,
    pub theta: f64,
    pub variant: Variant,
    pub setting: Setting,
}

impl ComplexityProfile {
    pub fn new(alpha: f64, theta: f64, variant: Variant, setting: Setting) -> Result<Self, EstimatorError> {
        if !(2.0..=3.0).contains(&theta) {
            return Err(EstimatorError::ThetaOutOfRange(theta));
        }
        if !(alpha >= 1.0) {
            return Err(EstimatorError::AlphaOutOfRange(alpha));
        }
        Ok(ComplexityProfile { alpha, theta, variant, setting })
    }

    /// The weight `c` of `F_α` in the exponent.
    pub fn linear_algebra_weight(&self) -> f64 {
        match self.variant {
            Variant::Deterministic => self.theta,
            Variant::LasVegas => 2.0,
        }
    }
}

/// `M(x) = -x + 1/2 + 1/2 sqrt(2x^2 - 10x - 1 + 2(x + 2) sqrt(x (x + 2)))`.
pub fn m_func(x: f64) -> Result<f64, EstimatorError> {
    if !(x > 0.0) {
        return Err(EstimatorError::Domain(x));
    }
    let radicand = 2.0 * x * x - 10.0 * x - 1.0 + 2.0 * (x + 2.0) * (x * (x + 2.0)).sqrt();
    if radicand < 0.0 {
        return Err(EstimatorError::Domain(x));
    }
    Ok(-x + 0.5 + 0.5 * radicand.sqrt())
}

/// Binary entropy `H_2(p)` in bits, with `H_2(0) = H_2(1) = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -(p * p.log2() + (1.0 - p) * (1.0 - p).log2())
}

/// `F_α(γ) = -γ log_2(D^D (1 - D)^(1 - D))` with `D = M(α / γ)`.
pub fn f_alpha(gamma: f64, alpha: f64) -> Result<f64, EstimatorError> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(EstimatorError::GammaOutOfRange(gamma));
    }
    let d = m_func(alpha / gamma)?;
    Ok(gamma * binary_entropy(d))
}

/// The cost exponent (per variable, base 2) at `γ`.
pub fn exponent(profile: &ComplexityProfile, gamma: f64) -> Result<f64, EstimatorError> {
    let f = f_alpha(gamma, profile.alpha)?;
    let search = match profile.setting {
        Setting::Classical => 1.0 - gamma,
        Setting::Quantum => (1.0 - gamma) / 2.0,
    };
    Ok(search + profile.linear_algebra_weight() * f)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentResult {
    pub gamma_star: f64,
    pub exponent: f64,
    /// `(γ, exponent)` on the scan grid.
    #[serde(skip)]
    pub curve: Vec<(f64, f64)>,
}

const GRID_STEP: f64 = 1e-3;
const REFINE_TOLERANCE: f64 = 1e-5;

/// Minimizes [`exponent`] over `γ` in `(0, 1)`: a grid scan with step
/// `10^-3`, then golden-section search to `10^-5` around the best point.
pub fn minimize_exponent(profile: &ComplexityProfile) -> ExponentResult {
    let steps = (1.0 / GRID_STEP).round() as usize;
    let curve: Vec<(f64, f64)> = (1..steps)
        .filter_map(|i| {
            let g = i as f64 * GRID_STEP;
            exponent(profile, g).ok().map(|e| (g, e))
        })
        .collect();
    let best =
        curve.iter().enumerate().min_by(|a, b| a.1 .1.total_cmp(&b.1 .1)).map(|(i, _)| i).expect("grid is non-empty");

    let f = |g: f64| exponent(profile, g).unwrap_or(f64::INFINITY);
    let mut lo = curve[best.saturating_sub(1)].0;
    let mut hi = curve[(best + 1).min(curve.len() - 1)].0;
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > REFINE_TOLERANCE {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    let refined = (lo + hi) / 2.0;
    let (gamma_star, value) = if f(refined) <= curve[best].1 { (refined, f(refined)) } else { curve[best] };
    ExponentResult { gamma_star, exponent: value, curve }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(theta: f64, setting: Setting) -> ComplexityProfile {
        ComplexityProfile::new(1.0, theta, Variant::Deterministic, setting).unwrap()
    }

    #[test]
    fn m_func_values() {
        assert!((m_func(1.0 / 0.55).unwrap() - 0.05568).abs() < 1e-4);
        assert!(m_func(1e6).unwrap() < 1e-5);
        assert!(m_func(0.0).is_err());
        assert!(m_func(0.1).is_err());
    }

    #[test]
    fn f_alpha_values() {
        assert!((f_alpha(0.55, 1.0).unwrap() - 0.17053).abs() < 1e-4);
        assert!((f_alpha(0.17, 1.0).unwrap() - 0.02373).abs() < 1e-4);
        assert!(f_alpha(1e-6, 1.0).unwrap() < 1e-6);
        assert!(f_alpha(1.0, 1.0).is_err());
    }

    #[test]
    fn exponent_endpoints() {
        let c = exponent(&profile(2.0, Setting::Classical), 0.55).unwrap();
        assert!((c - 0.792).abs() < 1e-3, "{c}");
        let q = exponent(&profile(2.0, Setting::Quantum), 0.17).unwrap();
        assert!((q - 0.462).abs() < 1e-3, "{q}");
    }

    #[test]
    fn quantum_halves_search_term() {
        for g in [0.1, 0.3, 0.5, 0.9] {
            let c = exponent(&profile(2.376, Setting::Classical), g).unwrap();
            let q = exponent(&profile(2.376, Setting::Quantum), g).unwrap();
            assert!((c - q - (1.0 - g) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn minimization_matches_grid() {
        let r = minimize_exponent(&profile(2.376, Setting::Classical));
        assert!((r.exponent - 0.841).abs() < 2e-3);
        assert!((r.gamma_star - 0.40).abs() < 2e-2);
        assert!(r.curve.iter().all(|&(_, e)| e >= r.exponent - 1e-12));
    }

    #[test]
    fn profile_validation() {
        assert!(ComplexityProfile::new(1.0, 1.5, Variant::Deterministic, Setting::Classical).is_err());
        assert!(ComplexityProfile::new(0.5, 2.0, Variant::Deterministic, Setting::Classical).is_err());
    }
}
