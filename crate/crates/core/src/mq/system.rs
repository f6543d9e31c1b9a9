use std::fmt;

use super::{Assignment, BooleanPolynomial, Monomial, MqError, MAX_VARS};

/// `m` quadratic Boolean polynomials over a common set of `n` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialSystem {
    n: usize,
    polys: Vec<BooleanPolynomial>,
}

impl PolynomialSystem {
    /// Errors if a polynomial has degree above two or a different variable
    /// count than `n`.
    pub fn new(n: usize, polys: Vec<BooleanPolynomial>) -> Result<Self, MqError> {
        if n > MAX_VARS {
            return Err(MqError::TooManyVariables(n));
        }
        for (i, p) in polys.iter().enumerate() {
            if p.num_vars() != n {
                return Err(MqError::LengthMismatch { expected: n, found: p.num_vars() });
            }
            if p.degree().unwrap_or(0) > 2 {
                return Err(MqError::NotQuadratic { index: i });
            }
        }
        Ok(PolynomialSystem { n, polys })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_equations(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[BooleanPolynomial] {
        &self.polys
    }

    /// True when every polynomial vanishes at `a`.
    pub fn is_root(&self, a: &Assignment) -> Result<bool, MqError> {
        if a.len() != self.n {
            return Err(MqError::LengthMismatch { expected: self.n, found: a.len() });
        }
        Ok(self.is_root_bits(a.bits()))
    }

    #[inline]
    pub fn is_root_bits(&self, point: u64) -> bool {
        self.polys.iter().all(|p| !p.eval_bits(point))
    }

    /// Values `(f_1(a), ..., f_m(a))`.
    pub fn evaluate(&self, a: &Assignment) -> Result<Vec<bool>, MqError> {
        self.polys.iter().map(|p| p.evaluate(a)).collect()
    }

    /// Fixes the last `k = tail.len()` variables to `tail`, returning a
    /// system in the first `n - k` variables.
    ///
    /// For every `x` in `F_2^{n-k}`, the result evaluated at `x` equals
    /// this system evaluated at `x ‖ tail`.
    pub fn specialize(&self, tail: &Assignment) -> Result<PolynomialSystem, MqError> {
        let k = tail.len();
        if k > self.n {
            return Err(MqError::LengthMismatch { expected: self.n, found: k });
        }
        let keep = self.n - k;
        let keep_mask = super::polynomial::low_mask(keep);
        let fixed_values = if k == 0 { 0 } else { tail.bits() << keep };
        let polys = self
            .polys
            .iter()
            .map(|p| {
                let terms = p.terms().iter().filter_map(|t| {
                    let fixed = t.mask() & !keep_mask;
                    // a fixed variable set to 0 kills the term
                    (fixed & fixed_values == fixed).then(|| Monomial::from_mask(t.mask() & keep_mask))
                });
                BooleanPolynomial::from_terms(keep, terms)
            })
            .collect();
        Ok(PolynomialSystem { n: keep, polys })
    }
}

impl fmt::Display for PolynomialSystem {
    /// The line-oriented text format; see [`super::parse_system`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.polys.len())?;
        for p in &self.polys {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolynomialSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolynomialSystem[n={}, m={}]", self.n, self.polys.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mq::{parse_system, random_system};

    #[test]
    fn specialize_examples() {
        let f = parse_system("3 1\nx1*x2 + x2 + x3\n").unwrap();
        let same = f.specialize(&Assignment::new(0, 0)).unwrap();
        assert_eq!(same, f);
        let g = f.specialize(&Assignment::from_bitstring("1").unwrap()).unwrap();
        assert_eq!(g.num_vars(), 2);
        assert_eq!(g.polys()[0].to_string(), "x1*x2 + x2 + 1");
    }

    #[test]
    fn specialize_agrees_with_evaluation_exhaustively() {
        for seed in 0..20 {
            let (f, _) = random_system(8, 6, seed, false);
            for tail_bits in 0..8 {
                let tail = Assignment::new(tail_bits, 3);
                let g = f.specialize(&tail).unwrap();
                for x in 0..32 {
                    let x = Assignment::new(x, 5);
                    assert_eq!(g.evaluate(&x).unwrap(), f.evaluate(&x.concat(tail)).unwrap());
                }
            }
        }
    }

    #[test]
    fn specialize_everything() {
        let (f, _) = random_system(5, 5, 3, false);
        let tail = Assignment::new(0b10110, 5);
        let g = f.specialize(&tail).unwrap();
        assert_eq!(g.num_vars(), 0);
        let empty = Assignment::new(0, 0);
        assert_eq!(g.evaluate(&empty).unwrap(), f.evaluate(&tail).unwrap());
    }

    #[test]
    fn rejects_cubic() {
        let p = BooleanPolynomial::from_terms(3, [Monomial::from_vars([0, 1, 2])]);
        assert!(matches!(PolynomialSystem::new(3, vec![p]), Err(MqError::NotQuadratic { index: 0 })));
    }
}
