use std::fmt;

use super::{Gf2e, Gf2eField};

/// A univariate polynomial over `GF(2^e)`, lowest degree first.
///
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero (no coefficients at all).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyOverGf2e {
    coeffs: Vec<Gf2e>,
}

impl PolyOverGf2e {
    pub fn new(mut coeffs: Vec<Gf2e>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyOverGf2e { coeffs }
    }

    pub fn zero() -> Self {
        PolyOverGf2e { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyOverGf2e { coeffs: vec![Gf2e::ONE] }
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        PolyOverGf2e { coeffs: vec![Gf2e::ZERO, Gf2e::ONE] }
    }

    pub fn coeffs(&self) -> &[Gf2e] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Gf2e {
        self.coeffs.get(i).copied().unwrap_or(Gf2e::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Gf2e::ONE)
    }

    pub fn constant_term(&self) -> Gf2e {
        self.coeff(0)
    }

    /// `self / z` when `z` divides `self`.
    pub fn div_by_z(&self) -> Option<PolyOverGf2e> {
        (!self.is_zero() && self.constant_term().is_zero()).then(|| PolyOverGf2e { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn mul(&self, other: &PolyOverGf2e, field: &Gf2eField) -> PolyOverGf2e {
        if self.is_zero() || other.is_zero() {
            return PolyOverGf2e::zero();
        }
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            Gf2eField::axpy_lazy(&mut acc[i..], a, &other.coeffs);
        }
        PolyOverGf2e::new(acc.into_iter().map(|x| field.reduce(x)).collect())
    }

    pub fn eval(&self, field: &Gf2eField, point: Gf2e) -> Gf2e {
        self.coeffs.iter().rev().fold(Gf2e::ZERO, |acc, &c| field.mul(acc, point) + c)
    }
}

impl fmt::Debug for PolyOverGf2e {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.0) {
                (0, _) => write!(f, "{c:?}")?,
                (_, 1) => write!(f, "z^{i}")?,
                _ => write!(f, "{c:?}*z^{i}")?,
            }
        }
        Ok(())
    }
}
