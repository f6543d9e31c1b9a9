use serde::Serialize;

use super::{Circuit, Gate, QuantumError};

/// Gate tallies and the CNOT-equivalent total, with `X = 1`, `CNOT = 1`,
/// `Swap = 3` and `T_n = 2n` for `n >= 3` (so a Toffoli costs 6).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateCost {
    pub x: u64,
    pub cnot: u64,
    pub toffoli: u64,
    /// `T_n` gates with `n >= 4`.
    pub n_toffoli: u64,
    pub swap: u64,
    pub total_gates: u64,
    pub cnot_equivalent: u64,
}

impl GateCost {
    pub fn add_gate(&mut self, gate: &Gate) {
        self.add_many(gate, 1);
    }

    fn add_many(&mut self, gate: &Gate, count: u64) {
        match gate {
            Gate::X { .. } => {
                self.x += count;
                self.cnot_equivalent += count;
            }
            Gate::Cnot { .. } => {
                self.cnot += count;
                self.cnot_equivalent += count;
            }
            Gate::Toffoli { .. } => {
                self.toffoli += count;
                self.cnot_equivalent += 6 * count;
            }
            Gate::NToffoli { controls, .. } => {
                self.n_toffoli += count;
                self.cnot_equivalent += 2 * (controls.len() as u64 + 1) * count;
            }
            Gate::Swap { .. } => {
                self.swap += count;
                self.cnot_equivalent += 3 * count;
            }
        }
        self.total_gates += count;
    }

    fn toffolis(count: u64) -> GateCost {
        let mut c = GateCost::default();
        c.add_many(&Gate::Toffoli { controls: [0, 1], target: 2 }, count);
        c
    }

    fn cnots(count: u64) -> GateCost {
        let mut c = GateCost::default();
        c.add_many(&Gate::Cnot { control: 0, target: 1 }, count);
        c
    }
}

impl std::ops::Add for GateCost {
    type Output = GateCost;

    fn add(self, o: GateCost) -> GateCost {
        GateCost {
            x: self.x + o.x,
            cnot: self.cnot + o.cnot,
            toffoli: self.toffoli + o.toffoli,
            n_toffoli: self.n_toffoli + o.n_toffoli,
            swap: self.swap + o.swap,
            total_gates: self.total_gates + o.total_gates,
            cnot_equivalent: self.cnot_equivalent + o.cnot_equivalent,
        }
    }
}

pub fn gate_cost(circuit: &Circuit) -> GateCost {
    let mut cost = GateCost::default();
    for g in circuit.gates() {
        cost.add_gate(g);
    }
    cost
}

/// Gate counts of the three steps of the quantum RandomSol circuit on an
/// `n x n` system whose annihilating polynomial has degree `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QrsGateCount {
    pub n: u64,
    pub r: u64,
    /// `b' = b + A w` on the first `r` coordinates: `rn` Toffoli, `r` CNOT.
    pub step4: GateCost,
    /// The Krylov sum: `n (n^2 + 2)` Toffoli and a final X.
    pub step6: GateCost,
    /// The check `Ax = b`: `n^2` Toffoli, `n` CNOT and one `T_{n+1}`.
    pub step7: GateCost,
    pub total: GateCost,
    /// `n^3 + 2n^2 + 3n + 1`.
    pub closed_form: u64,
    /// `total.total_gates - closed_form`.
    pub residual: i64,
}

pub fn qrs_gate_count(n: u64, r: u64) -> Result<QrsGateCount, QuantumError> {
    if r < 1 || r > n {
        return Err(QuantumError::InvalidRank { n: n as usize, r: r as usize });
    }
    let step4 = GateCost::toffolis(r * n) + GateCost::cnots(r);
    let mut step6 = GateCost::toffolis(n * (n * n + 2));
    step6.add_gate(&Gate::X { target: 0 });
    let mut step7 = GateCost::toffolis(n * n) + GateCost::cnots(n);
    step7.add_gate(&Gate::n_toffoli((1..=n as usize).collect(), 0));
    let total = step4 + step6 + step7;
    let closed_form = n * n * n + 2 * n * n + 3 * n + 1;
    Ok(QrsGateCount {
        n,
        r,
        step4,
        step6,
        step7,
        total,
        closed_form,
        residual: total.total_gates as i64 - closed_form as i64,
    })
}
