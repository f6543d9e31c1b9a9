use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, MqError, MAX_VARS};

/// A point of `F_2^len`: bit `i` holds the value of `x_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    bits: u64,
    len: usize,
}

impl Assignment {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_VARS, "assignment length {len} exceeds {MAX_VARS}");
        let mask = low_mask(len);
        Assignment { bits: bits & mask, len }
    }

    pub fn from_bools(values: &[bool]) -> Self {
        let bits = values.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
        Assignment::new(bits, values.len())
    }

    /// Parses a bitstring written `x_1` first, e.g. `"0110"`.
    pub fn from_bitstring(s: &str) -> Result<Self, MqError> {
        let values = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => {
                    Err(MqError::Syntax { line: 1, column: 1, message: format!("invalid bit '{other}' in assignment") })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() > MAX_VARS {
            return Err(MqError::TooManyVariables(values.len()));
        }
        Ok(Assignment::from_bools(&values))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.len
    }

    pub const fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, index: usize) -> bool {
        assert!(index < self.len);
        self.bits >> index & 1 == 1
    }

    /// `self ‖ tail`: the first `self.len()` coordinates come from `self`.
    pub fn concat(self, tail: Assignment) -> Assignment {
        let len = self.len + tail.len;
        assert!(len <= MAX_VARS);
        let shifted = if tail.len == 0 { 0 } else { tail.bits << self.len };
        Assignment::new(self.bits | shifted, len)
    }

    /// Splits into the first `head` coordinates and the rest.
    pub fn split(self, head: usize) -> (Assignment, Assignment) {
        assert!(head <= self.len);
        let rest = if head == 64 { 0 } else { self.bits >> head };
        (Assignment::new(self.bits, head), Assignment::new(rest, self.len - head))
    }

    pub fn to_bitstring(self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assignment({})", self.to_bitstring())
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_bitstring())
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Assignment::from_bitstring(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) const fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A Boolean polynomial in algebraic normal form over `n` variables.
///
/// Terms are kept sorted in descending DRL order without duplicates; the
/// zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanPolynomial {
    n: usize,
    terms: Vec<Monomial>,
}

impl BooleanPolynomial {
    pub fn zero(n: usize) -> Self {
        BooleanPolynomial { n, terms: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        BooleanPolynomial { n, terms: vec![Monomial::ONE] }
    }

    /// Builds a polynomial from a list of terms, cancelling repeated
    /// monomials in pairs.
    ///
    /// Panics if a term mentions a variable outside `0..n`.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(n: usize, terms: I) -> Self {
        assert!(n <= MAX_VARS, "{n} variables exceed the {MAX_VARS}-variable limit");
        let mut terms: Vec<Monomial> = terms.into_iter().collect();
        if let Some(bad) = terms.iter().find(|t| t.max_var().is_some_and(|v| v >= n)) {
            panic!("term {bad} uses a variable beyond x{n}");
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        BooleanPolynomial { n, terms: cancel_sorted_pairs(terms) }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Terms in descending DRL order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.degree())
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.last() == Some(&Monomial::ONE)
    }

    /// Value at `a`; errors when `a` does not have exactly `n` coordinates.
    pub fn evaluate(&self, a: &Assignment) -> Result<bool, MqError> {
        if a.len() != self.n {
            return Err(MqError::LengthMismatch { expected: self.n, found: a.len() });
        }
        Ok(self.eval_bits(a.bits()))
    }

    /// Value at the point encoded by the low `n` bits of `point`.
    #[inline]
    pub fn eval_bits(&self, point: u64) -> bool {
        self.terms.iter().fold(false, |acc, t| acc ^ t.eval(point))
    }

    /// `φ(t · self)`: the product reduced modulo the field relations.
    pub fn mul_monomial(&self, t: Monomial) -> BooleanPolynomial {
        BooleanPolynomial::from_terms(self.n, self.terms.iter().map(|&s| s * t))
    }

    /// Reinterprets the polynomial over `n >= num_vars()` variables.
    pub fn with_num_vars(&self, n: usize) -> BooleanPolynomial {
        assert!(n >= self.terms.iter().filter_map(|t| t.max_var()).max().map_or(0, |v| v + 1));
        BooleanPolynomial { n, terms: self.terms.clone() }
    }
}

impl std::ops::Add for &BooleanPolynomial {
    type Output = BooleanPolynomial;

    fn add(self, rhs: &BooleanPolynomial) -> BooleanPolynomial {
        assert_eq!(self.n, rhs.n, "adding polynomials over different variable counts");
        BooleanPolynomial::from_terms(self.n, self.terms.iter().chain(&rhs.terms).copied())
    }
}

impl fmt::Display for BooleanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanPolynomial[n={}]({})", self.n, self)
    }
}

/// Removes equal neighbours in pairs (F_2 cancellation) from a sorted list.
fn cancel_sorted_pairs(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for t in sorted {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// A monomial with explicit exponents, `[(variable, exponent)]`, variables
/// 0-based. Exponent 0 entries are ignored.
pub type ExponentMonomial = Vec<(usize, u32)>;

/// Reduces a polynomial given with exponents modulo `x_i^2 - x_i`.
///
/// Each positive exponent collapses to 1, then equal monomials cancel.
pub fn square_free_reduce(n: usize, terms: &[ExponentMonomial]) -> BooleanPolynomial {
    BooleanPolynomial::from_terms(
        n,
        terms.iter().map(|t| Monomial::from_vars(t.iter().filter(|&&(_, e)| e > 0).map(|&(v, _)| v))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Monomial {
        Monomial::var(i - 1)
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(square_free_reduce(2, &[vec![(0, 2)]]), BooleanPolynomial::from_terms(2, [x(1)]));
        let p = square_free_reduce(2, &[vec![(0, 2), (1, 1)], vec![(0, 1), (1, 1)]]);
        assert!(p.is_zero());
        assert_eq!(square_free_reduce(2, &[vec![]]), BooleanPolynomial::one(2));
    }

    #[test]
    fn square_free_is_idempotent() {
        let terms = vec![vec![(0, 3), (2, 1)], vec![(1, 2)], vec![(1, 1)], vec![]];
        let once = square_free_reduce(3, &terms);
        let as_exponents: Vec<ExponentMonomial> =
            once.terms().iter().map(|t| t.vars().map(|v| (v, 1)).collect()).collect();
        assert_eq!(square_free_reduce(3, &as_exponents), once);
    }

    #[test]
    fn evaluate_examples() {
        let p = BooleanPolynomial::from_terms(3, [x(1) * x(2), x(3)]);
        assert!(p.evaluate(&Assignment::from_bools(&[true, true, false])).unwrap());
        let zero = BooleanPolynomial::zero(3);
        for bits in 0..8 {
            assert!(!zero.evaluate(&Assignment::new(bits, 3)).unwrap());
        }
        assert!(matches!(p.evaluate(&Assignment::new(0, 2)), Err(MqError::LengthMismatch { expected: 3, found: 2 })));
    }

    #[test]
    fn terms_are_drl_descending() {
        let p = BooleanPolynomial::from_terms(3, [Monomial::ONE, x(2), x(1) * x(3), x(1), x(1) * x(2)]);
        assert_eq!(p.to_string(), "x1*x2 + x1*x3 + x1 + x2 + 1");
    }

    #[test]
    fn assignment_concat_and_split() {
        let a1 = Assignment::from_bitstring("101").unwrap();
        let a2 = Assignment::from_bitstring("01").unwrap();
        let full = a1.concat(a2);
        assert_eq!(full.to_bitstring(), "10101");
        assert_eq!(full.split(3), (a1, a2));
        let empty = Assignment::new(0, 0);
        assert_eq!(a1.concat(empty), a1);
        assert_eq!(empty.concat(a2), a2);
    }
}
