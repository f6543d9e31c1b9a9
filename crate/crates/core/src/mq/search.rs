//! Exhaustive search, 64 points per machine word.
//!
//! The low six variables are laid out across the 64 bit-lanes of a word;
//! the remaining variables are constant within a block of 64 points. Each
//! polynomial is then evaluated on a whole block with a handful of word
//! operations per term.

use super::{Assignment, MqError, PolynomialSystem};

/// Largest variable count accepted by [`brute_force_solve`].
pub const BRUTE_FORCE_MAX_VARS: usize = 32;

const LANE_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// A quadratic polynomial flattened for word-parallel evaluation.
struct Compiled {
    constant: bool,
    linear: Vec<u8>,
    quadratic: Vec<(u8, u8)>,
}

impl Compiled {
    fn new(p: &super::BooleanPolynomial) -> Self {
        let mut c = Compiled { constant: false, linear: Vec::new(), quadratic: Vec::new() };
        for t in p.terms() {
            let vars: Vec<u8> = t.vars().map(|v| v as u8).collect();
            match vars.as_slice() {
                [] => c.constant = true,
                [i] => c.linear.push(*i),
                [i, j] => c.quadratic.push((*i, *j)),
                _ => unreachable!("systems hold quadratic polynomials only"),
            }
        }
        c
    }

    #[inline]
    fn eval_block(&self, words: &[u64]) -> u64 {
        let mut acc = if self.constant { u64::MAX } else { 0 };
        for &i in &self.linear {
            acc ^= words[i as usize];
        }
        for &(i, j) in &self.quadratic {
            acc ^= words[i as usize] & words[j as usize];
        }
        acc
    }
}

/// Every common root of the system, in increasing order of the integer
/// whose bit `i` is `x_{i+1}`.
pub fn brute_force_solve(system: &PolynomialSystem) -> Result<Vec<Assignment>, MqError> {
    let n = system.num_vars();
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(MqError::SearchCapExceeded { n, cap: BRUTE_FORCE_MAX_VARS });
    }
    let compiled: Vec<Compiled> = system.polys().iter().map(Compiled::new).collect();
    let lane_vars = n.min(6);
    let lanes_used = 1u64 << lane_vars;
    let valid = if lanes_used == 64 { u64::MAX } else { (1u64 << lanes_used) - 1 };
    let blocks = 1u64 << (n - lane_vars);

    let mut words = vec![0u64; n];
    words[..lane_vars].copy_from_slice(&LANE_PATTERNS[..lane_vars]);
    let mut roots = Vec::new();
    for block in 0..blocks {
        for (v, w) in words.iter_mut().enumerate().skip(lane_vars) {
            *w = if block >> (v - lane_vars) & 1 == 1 { u64::MAX } else { 0 };
        }
        let mut nonzero = 0u64;
        for p in &compiled {
            nonzero |= p.eval_block(&words);
            if nonzero & valid == valid {
                break;
            }
        }
        let mut hits = !nonzero & valid;
        while hits != 0 {
            let lane = hits.trailing_zeros() as u64;
            hits &= hits - 1;
            roots.push(Assignment::new(block << lane_vars | lane, n));
        }
    }
    Ok(roots)
}
