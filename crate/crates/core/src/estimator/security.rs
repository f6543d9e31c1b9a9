use serde::Serialize;

/// Exponent of the Las-Vegas classical solver at `α = 1`, `θ = 2`.
pub const CLASSICAL_EXPONENT: f64 = 0.792;
/// Exponent of the quantum solver at `α = 1`, `θ = 2`.
pub const QUANTUM_EXPONENT: f64 = 0.462;

/// A published parameter row: security level, variables and key size in
/// bytes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub security_bits: u32,
    pub n: u64,
    pub key_bytes: f64,
}

/// The reference parameter table the estimator is checked against.
pub const REFERENCE_TABLE: [ReferenceRow; 4] = [
    ReferenceRow { security_bits: 64, n: 139, key_bytes: 167.36e3 },
    ReferenceRow { security_bits: 80, n: 173, key_bytes: 326.4e3 },
    ReferenceRow { security_bits: 128, n: 277, key_bytes: 1.33e6 },
    ReferenceRow { security_bits: 256, n: 555, key_bytes: 10.65e6 },
];

/// Parameters for a target security level against the quantum solver.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecurityRow {
    pub security_bits: u32,
    /// `ceil(s / 0.462)`.
    pub n: u64,
    /// `n (C(n,2) + n + 1)` coefficient bits for `m = n` equations.
    pub key_bits: u64,
    pub key_bytes: f64,
    pub key_size: String,
}

pub fn security_parameters(security_bits: u32) -> SecurityRow {
    let n = (security_bits as f64 / QUANTUM_EXPONENT).ceil() as u64;
    let key_bits = n * (n * (n - 1) / 2 + n + 1);
    let key_bytes = key_bits as f64 / 8.0;
    SecurityRow { security_bits, n, key_bits, key_bytes, key_size: format_bytes(key_bytes) }
}

/// Security in bits of `n` variables against the quantum solver,
/// `floor(0.462 n)`.
pub fn quantum_security_bits(n: u64) -> u64 {
    (QUANTUM_EXPONENT * n as f64).floor() as u64
}

/// Decimal units: `1 KB = 1000 bytes`.
pub fn format_bytes(bytes: f64) -> String {
    if bytes >= 1e6 {
        format!("{:.2} MB", bytes / 1e6)
    } else if bytes >= 1e3 {
        format!("{:.2} KB", bytes / 1e3)
    } else {
        format!("{bytes:.0} B")
    }
}

/// Base-2 logarithms of the costs of competing attacks on `m` equations in
/// `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Baselines {
    pub n: u64,
    pub m: u64,
    /// `4 log_2(n) 2^n` bit operations.
    pub classical_exhaustive: f64,
    /// `2^{0.8765 n}`.
    pub approximation: f64,
    /// `m n^2 2^{n/2}` quantum gates.
    pub quantum_exhaustive: f64,
    pub classical_boolean_solve: f64,
    pub quantum_boolean_solve: f64,
}

pub fn baseline_costs(n: u64, m: u64) -> Baselines {
    let nf = n as f64;
    Baselines {
        n,
        m,
        classical_exhaustive: nf + (4.0 * nf.log2()).log2(),
        approximation: 0.8765 * nf,
        quantum_exhaustive: nf / 2.0 + (m as f64).log2() + 2.0 * nf.log2(),
        classical_boolean_solve: CLASSICAL_EXPONENT * nf,
        quantum_boolean_solve: QUANTUM_EXPONENT * nf,
    }
}
