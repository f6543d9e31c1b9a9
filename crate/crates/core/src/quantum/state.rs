use num_complex::Complex64;
use rand::Rng;

use super::{Circuit, QuantumError};

/// Largest qubit count the simulator accepts.
pub const MAX_QUBITS: usize = 24;

const NORM_TOLERANCE: f64 = 1e-12;

/// A pure state of `k` qubits; amplitude `i` belongs to the basis state
/// whose bit `w` is qubit `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    k: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The basis state `|index>`.
    pub fn basis(k: usize, index: u64) -> Result<Self, QuantumError> {
        check_qubits(k)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << k];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { k, amps })
    }

    /// `H^{⊗k} |0>`.
    pub fn uniform(k: usize) -> Result<Self, QuantumError> {
        check_qubits(k)?;
        let a = Complex64::new((1u64 << k) as f64, 0.0).sqrt().inv();
        Ok(StateVector { k, amps: vec![a; 1 << k] })
    }

    pub fn num_qubits(&self) -> usize {
        self.k
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Hadamard on one qubit.
    pub fn hadamard(&mut self, qubit: usize) {
        assert!(qubit < self.k);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bit = 1usize << qubit;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a, b) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = (a + b) * s;
                self.amps[i | bit] = (a - b) * s;
            }
        }
    }

    /// Hadamard on every qubit.
    pub fn hadamard_all(&mut self) {
        for q in 0..self.k {
            self.hadamard(q);
        }
    }

    /// Applies the circuit gate by gate, checking the norm after each one.
    pub fn apply(&mut self, circuit: &Circuit) -> Result<(), QuantumError> {
        if circuit.wire_count() != self.k {
            return Err(QuantumError::WireCountMismatch { circuit: circuit.wire_count(), state: self.k });
        }
        for gate in circuit.gates() {
            for i in 0..self.amps.len() {
                let j = gate.apply_basis(i as u64) as usize;
                if j > i {
                    self.amps.swap(i, j);
                }
            }
            let norm = self.norm_sqr();
            if (norm - 1.0).abs() > NORM_TOLERANCE {
                return Err(QuantumError::NormDrift { norm });
            }
        }
        Ok(())
    }

    /// Phase oracle: negates the amplitude of every marked basis state.
    pub fn phase_flip(&mut self, marked: &[bool]) {
        assert_eq!(marked.len(), self.amps.len());
        for (a, &m) in self.amps.iter_mut().zip(marked) {
            if m {
                *a = -*a;
            }
        }
    }

    /// Inversion about the mean, `2|s><s| - I` for the uniform state `|s>`.
    pub fn diffuse(&mut self) {
        let mean = self.amps.iter().sum::<Complex64>() / self.amps.len() as f64;
        for a in &mut self.amps {
            *a = mean * 2.0 - *a;
        }
    }

    /// Total probability of the marked basis states.
    pub fn marked_mass(&self, marked: &[bool]) -> f64 {
        self.amps.iter().zip(marked).filter(|(_, &m)| m).map(|(a, _)| a.norm_sqr()).sum()
    }

    /// Draws a basis state from the measurement distribution.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let mut u: f64 = rng.gen::<f64>() * self.norm_sqr();
        for (i, a) in self.amps.iter().enumerate() {
            u -= a.norm_sqr();
            if u < 0.0 {
                return i as u64;
            }
        }
        self.amps.iter().rposition(|a| a.norm_sqr() > 0.0).unwrap_or(0) as u64
    }
}

fn check_qubits(k: usize) -> Result<(), QuantumError> {
    if k > MAX_QUBITS {
        Err(QuantumError::TooManyQubits { qubits: k, max: MAX_QUBITS })
    } else {
        Ok(())
    }
}
