use std::cmp::Ordering;
use std::fmt;

/// Largest variable count representable by a single-word [`Monomial`].
pub const MAX_VARS: usize = 64;

/// A square-free monomial over `x_1..x_n`, stored as a bitmask.
///
/// Bit `i` is set when `x_{i+1}` divides the monomial, so squares cannot be
/// represented and multiplication is a bitwise OR (the field relation
/// `x^2 = x` is applied for free).
///
/// `Ord` is the degree reverse lexicographic order: higher total degree is
/// larger, and among monomials of equal degree the one *not* containing the
/// highest-index differing variable is larger. Hence `x_1 > x_2 > ... > x_n`
/// and `1` is the minimum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(index: usize) -> Self {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        Monomial(1 << index)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        vars.into_iter().fold(Monomial::ONE, |acc, v| acc * Monomial::var(v))
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn degree(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub const fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    /// Highest variable index present, if any.
    pub fn max_var(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// 0-based indices of the variables present, ascending.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                i
            })
        })
    }

    /// Value at the point whose coordinates are the bits of `point`.
    #[inline]
    pub const fn eval(self, point: u64) -> bool {
        self.0 & point == self.0
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    #[inline]
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial(self.0 | rhs.0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Same degree: the larger monomial lacks the highest differing
        // variable, i.e. it is the smaller integer.
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (pos, v) in self.vars().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
