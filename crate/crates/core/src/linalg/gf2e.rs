//! Binary extension fields `GF(2^e)` in polynomial basis.
//!
//! Elements are bit-packed into a `u64` (bit `i` is the coefficient of
//! `y^i`). Multiplication is a carry-less product followed by reduction
//! modulo a fixed low-weight irreducible polynomial. Dot products defer the
//! reduction to the end: unreduced products of elements have degree at most
//! `2e - 2` and therefore fit a `u128` accumulator.
//!
//! Fixed moduli (bit-exact, `y^e` plus the listed low part):
//!
//! | e  | modulus                         | low part |
//! |----|---------------------------------|----------|
//! | 8  | y^8 + y^4 + y^3 + y + 1         | `0x1B`   |
//! | 16 | y^16 + y^5 + y^3 + y + 1        | `0x2B`   |
//! | 24 | y^24 + y^4 + y^3 + y + 1        | `0x1B`   |
//! | 32 | y^32 + y^7 + y^3 + y^2 + 1      | `0x8D`   |
//! | 48 | y^48 + y^5 + y^3 + y^2 + 1      | `0x2D`   |
//! | 64 | y^64 + y^4 + y^3 + y + 1        | `0x1B`   |

use std::fmt;
use std::ops::{Add, AddAssign};

use rand::Rng;

use super::LinalgError;

/// Extension degrees with a built-in modulus.
pub const SUPPORTED_DEGREES: [u32; 6] = [8, 16, 24, 32, 48, 64];

const MODULI: [(u32, u64); 6] = [(8, 0x1B), (16, 0x2B), (24, 0x1B), (32, 0x8D), (48, 0x2D), (64, 0x1B)];

/// An element of `GF(2^e)`; which field is implied by the context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2e(pub u64);

impl Gf2e {
    pub const ZERO: Gf2e = Gf2e(0);
    pub const ONE: Gf2e = Gf2e(1);

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Gf2e {
    type Output = Gf2e;

    #[inline]
    fn add(self, rhs: Gf2e) -> Gf2e {
        Gf2e(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf2e {
    #[inline]
    fn add_assign(&mut self, rhs: Gf2e) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Gf2e {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// `GF(2^e)` for one of the [`SUPPORTED_DEGREES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2eField {
    degree: u32,
    low: u64,
}

impl fmt::Debug for Gf2eField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.degree)
    }
}

impl Gf2eField {
    pub fn new(degree: u32) -> Result<Self, LinalgError> {
        MODULI
            .iter()
            .find(|(e, _)| *e == degree)
            .map(|&(degree, low)| Gf2eField { degree, low })
            .ok_or(LinalgError::UnsupportedDegree(degree))
    }

    /// The smallest supported field with `2^e - 1 > 2N(N-1)`, the size
    /// needed by the randomized preconditioning of an `N x N` system.
    pub fn for_dimension(n: usize) -> Result<Self, LinalgError> {
        let needed = 2 * (n as u128) * (n as u128).saturating_sub(1);
        SUPPORTED_DEGREES
            .iter()
            .find(|&&e| (1u128 << e) - 1 > needed)
            .map(|&e| Gf2eField::new(e).expect("supported degree"))
            .ok_or(LinalgError::FieldTooSmall { degree: 64, dim: n })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The modulus without its leading `y^e` term.
    pub fn modulus_low(&self) -> u64 {
        self.low
    }

    /// Number of field elements, `2^e`.
    pub fn order(&self) -> u128 {
        1u128 << self.degree
    }

    /// True when the field is large enough for an `n x n` system.
    pub fn supports_dimension(&self, n: usize) -> bool {
        let needed = 2 * (n as u128) * (n as u128).saturating_sub(1);
        self.order() - 1 > needed
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.degree == 64 {
            u64::MAX
        } else {
            (1u64 << self.degree) - 1
        }
    }

    /// Interprets `bits` as an element; errors if it has degree `>= e`.
    pub fn element(&self, bits: u64) -> Result<Gf2e, LinalgError> {
        if bits & !self.mask() != 0 {
            return Err(LinalgError::NotAnElement { bits, degree: self.degree });
        }
        Ok(Gf2e(bits))
    }

    pub fn contains(&self, a: Gf2e) -> bool {
        a.0 & !self.mask() == 0
    }

    /// Uniform random element.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf2e {
        Gf2e(rng.gen::<u64>() & self.mask())
    }

    /// Uniform random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf2e {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// Reduces a carry-less product (or a sum of them) modulo the field
    /// polynomial.
    #[inline]
    pub fn reduce(&self, mut x: u128) -> Gf2e {
        let e = self.degree;
        let mask = self.mask() as u128;
        loop {
            let hi = x >> e;
            if hi == 0 {
                return Gf2e(x as u64);
            }
            // y^e = low, and low has at most five terms.
            let mut folded = 0u128;
            let mut low = self.low;
            while low != 0 {
                folded ^= hi << low.trailing_zeros();
                low &= low - 1;
            }
            x = (x & mask) ^ folded;
        }
    }

    #[inline]
    pub fn mul(&self, a: Gf2e, b: Gf2e) -> Gf2e {
        if a.0 == 1 {
            return b;
        }
        if b.0 == 1 {
            return a;
        }
        self.reduce(clmul(a.0, b.0))
    }

    #[inline]
    pub fn square(&self, a: Gf2e) -> Gf2e {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Gf2e, mut exp: u128) -> Gf2e {
        let mut base = a;
        let mut acc = Gf2e::ONE;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `a^(2^e - 2)`.
    pub fn inv(&self, a: Gf2e) -> Result<Gf2e, LinalgError> {
        if a.is_zero() {
            return Err(LinalgError::ZeroInverse);
        }
        // 2^e - 2 = sum_{i=1}^{e-1} 2^i
        let mut t = a;
        let mut acc = Gf2e::ONE;
        for _ in 1..self.degree {
            t = self.square(t);
            acc = self.mul(acc, t);
        }
        Ok(acc)
    }

    pub fn div(&self, a: Gf2e, b: Gf2e) -> Result<Gf2e, LinalgError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `sum_i a[i] * b[i]` over the shorter of the two slices.
    #[inline]
    pub fn dot(&self, a: &[Gf2e], b: &[Gf2e]) -> Gf2e {
        self.reduce(clmul_dot(a, b))
    }

    /// `acc[i] += c * v[i]`, unreduced.
    #[inline]
    pub(crate) fn axpy_lazy(acc: &mut [u128], c: Gf2e, v: &[Gf2e]) {
        match c.0 {
            0 => {}
            1 => {
                for (slot, x) in acc.iter_mut().zip(v) {
                    *slot ^= x.0 as u128;
                }
            }
            _ => clmul_axpy(acc, c.0, v),
        }
    }
}

/// Carry-less product of two 64-bit words.
#[inline]
pub fn clmul(a: u64, b: u64) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if std::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the required CPU feature was detected at runtime.
            return unsafe { x86::clmul(a, b) };
        }
    }
    clmul_portable(a, b)
}

/// Unreduced `sum_i a[i] * b[i]`.
#[inline]
pub fn clmul_dot(a: &[Gf2e], b: &[Gf2e]) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if std::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the required CPU feature was detected at runtime.
            return unsafe { x86::clmul_dot(a, b) };
        }
    }
    a.iter().zip(b).fold(0u128, |acc, (x, y)| acc ^ clmul_portable(x.0, y.0))
}

/// `acc[i] ^= c * v[i]` (carry-less, unreduced) over the shorter length.
#[inline]
pub(crate) fn clmul_axpy(acc: &mut [u128], c: u64, v: &[Gf2e]) {
    #[cfg(target_arch = "x86_64")]
    {
        if std::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the required CPU feature was detected at runtime.
            return unsafe { x86::clmul_axpy(acc, c, v) };
        }
    }
    for (slot, x) in acc.iter_mut().zip(v) {
        *slot ^= clmul_portable(c, x.0);
    }
}

/// Shift-and-add carry-less multiplication, four bits of `b` at a time.
pub fn clmul_portable(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut table = [0u128; 16];
    for i in 1..16usize {
        table[i] = if i & 1 == 1 { table[i - 1] ^ a } else { table[i >> 1] << 1 };
    }
    let mut acc = 0u128;
    for nibble in (0..16).rev() {
        acc = (acc << 4) ^ table[(b >> (4 * nibble) & 0xF) as usize];
    }
    acc
}

#[cfg(target_arch = "x86_64")]
mod x86 {
    use super::Gf2e;
    use std::arch::x86_64::{__m128i, _mm_clmulepi64_si128, _mm_cvtsi64_si128, _mm_setzero_si128, _mm_xor_si128};

    #[inline]
    #[target_feature(enable = "pclmulqdq")]
    pub(super) unsafe fn clmul(a: u64, b: u64) -> u128 {
        let r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(a as i64), _mm_cvtsi64_si128(b as i64), 0x00);
        std::mem::transmute::<__m128i, u128>(r)
    }

    #[target_feature(enable = "pclmulqdq")]
    pub(super) unsafe fn clmul_dot(a: &[Gf2e], b: &[Gf2e]) -> u128 {
        let mut acc = _mm_setzero_si128();
        for (x, y) in a.iter().zip(b) {
            let p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(x.0 as i64), _mm_cvtsi64_si128(y.0 as i64), 0x00);
            acc = _mm_xor_si128(acc, p);
        }
        std::mem::transmute::<__m128i, u128>(acc)
    }

    #[target_feature(enable = "pclmulqdq")]
    pub(super) unsafe fn clmul_axpy(acc: &mut [u128], c: u64, v: &[Gf2e]) {
        let c = _mm_cvtsi64_si128(c as i64);
        for (slot, x) in acc.iter_mut().zip(v) {
            let p = _mm_clmulepi64_si128(c, _mm_cvtsi64_si128(x.0 as i64), 0x00);
            *slot ^= std::mem::transmute::<__m128i, u128>(p);
        }
    }
}
