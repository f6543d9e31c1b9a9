use super::QuantumError;

/// A classical reversible gate acting on wire indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    X {
        target: usize,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Toffoli {
        controls: [usize; 2],
        target: usize,
    },
    /// `T_n` with `n - 1 >= 3` controls; smaller arities are normalized to
    /// `X`, `CNOT` and Toffoli by [`Gate::n_toffoli`].
    NToffoli {
        controls: Vec<usize>,
        target: usize,
    },
    Swap {
        a: usize,
        b: usize,
    },
}

impl Gate {
    /// `T_n` on `controls.len() + 1` wires: `T_1 = X`, `T_2 = CNOT`,
    /// `T_3 = Toffoli`.
    pub fn n_toffoli(controls: Vec<usize>, target: usize) -> Gate {
        match controls.as_slice() {
            [] => Gate::X { target },
            &[control] => Gate::Cnot { control, target },
            &[c1, c2] => Gate::Toffoli { controls: [c1, c2], target },
            _ => Gate::NToffoli { controls, target },
        }
    }

    /// Wires touched, target last (both wires for `Swap`).
    pub fn wires(&self) -> Vec<usize> {
        match self {
            Gate::X { target } => vec![*target],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Toffoli { controls, target } => vec![controls[0], controls[1], *target],
            Gate::NToffoli { controls, target } => controls.iter().copied().chain([*target]).collect(),
            Gate::Swap { a, b } => vec![*a, *b],
        }
    }

    /// Number of wires, i.e. `n` for `T_n`.
    pub fn arity(&self) -> usize {
        self.wires().len()
    }

    /// The permutation of computational basis states, on a bitmask with bit
    /// `w` holding wire `w`.
    #[inline]
    pub fn apply_basis(&self, state: u64) -> u64 {
        match self {
            Gate::X { target } => state ^ (1 << target),
            Gate::Cnot { control, target } => state ^ ((state >> control & 1) << target),
            Gate::Toffoli { controls, target } => state ^ ((state >> controls[0] & state >> controls[1] & 1) << target),
            Gate::NToffoli { controls, target } => {
                let all = controls.iter().all(|&c| state >> c & 1 == 1);
                state ^ ((all as u64) << target)
            }
            Gate::Swap { a, b } => {
                let differ = (state >> a ^ state >> b) & 1;
                state ^ (differ << a) ^ (differ << b)
            }
        }
    }
}

/// An ordered gate list on a fixed number of wires.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    wire_count: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(wire_count: usize) -> Self {
        Circuit { wire_count, gates: Vec::new() }
    }

    pub fn wire_count(&self) -> usize {
        self.wire_count
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends a gate after checking that its wires are distinct and in range.
    pub fn push(&mut self, gate: Gate) -> Result<&mut Self, QuantumError> {
        let wires = gate.wires();
        let distinct = wires.iter().enumerate().all(|(i, w)| !wires[..i].contains(w));
        if !distinct || wires.iter().any(|&w| w >= self.wire_count) {
            return Err(QuantumError::InvalidGate { wires, wire_count: self.wire_count });
        }
        self.gates.push(gate);
        Ok(self)
    }

    /// The circuit followed by `other` on the same wires.
    pub fn then(mut self, other: &Circuit) -> Circuit {
        assert_eq!(self.wire_count, other.wire_count);
        self.gates.extend(other.gates.iter().cloned());
        self
    }

    /// Gates in reverse order; the inverse, since every gate is an involution.
    pub fn reversed(&self) -> Circuit {
        Circuit { wire_count: self.wire_count, gates: self.gates.iter().rev().cloned().collect() }
    }

    /// Image of a basis state; needs at most 64 wires.
    pub fn apply_basis(&self, state: u64) -> u64 {
        assert!(self.wire_count <= 64, "basis simulation is limited to 64 wires");
        self.gates.iter().fold(state, |s, g| g.apply_basis(s))
    }
}
