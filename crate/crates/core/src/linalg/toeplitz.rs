use std::sync::atomic::{AtomicU64, Ordering};

use rand::Rng;

use super::{BlackBox, Gf2e, Gf2eField, SparseMatrix};

/// The preconditioned operator `B = U A L`.
///
/// `U` is unit upper-triangular Toeplitz with `U[i][j] = alpha[j - i]` for
/// `j > i`, and `L` is unit lower-triangular Toeplitz with
/// `L[i][j] = beta[i - j]` for `i > j`. Both are kept implicit. Products
/// only compute the coordinates that can reach the nonzero rows and columns
/// of `A`, so a zero-padded rectangular matrix costs no more than its
/// unpadded core.
pub struct Preconditioned<'a> {
    a: &'a SparseMatrix,
    /// `alpha[d]` for `d = 1..N`; `alpha[0]` is unused.
    alpha: Vec<Gf2e>,
    beta: Vec<Gf2e>,
    rows: usize,
    cols: usize,
    calls: AtomicU64,
}

impl<'a> Preconditioned<'a> {
    /// Draws fresh Toeplitz preconditioners with uniform entries.
    pub fn random<R: Rng + ?Sized>(a: &'a SparseMatrix, rng: &mut R) -> Self {
        let n = a.n_rows();
        let field = *a.field();
        let draw = |rng: &mut R| -> Vec<Gf2e> {
            let mut v: Vec<Gf2e> = (0..n).map(|_| field.random(rng)).collect();
            if let Some(first) = v.first_mut() {
                *first = Gf2e::ONE;
            }
            v
        };
        let alpha = draw(rng);
        let beta = draw(rng);
        Self::with_entries(a, alpha, beta)
    }

    /// Uses the given diagonals; index `d` holds the entry on the `d`-th
    /// off-diagonal and index 0 is ignored (the diagonal is 1).
    pub fn with_entries(a: &'a SparseMatrix, mut alpha: Vec<Gf2e>, mut beta: Vec<Gf2e>) -> Self {
        let n = a.n_rows();
        assert_eq!(n, a.n_cols(), "preconditioning needs a square matrix");
        assert_eq!(alpha.len(), n);
        assert_eq!(beta.len(), n);
        if n > 0 {
            alpha[0] = Gf2e::ONE;
            beta[0] = Gf2e::ONE;
        }
        Preconditioned {
            a,
            alpha,
            beta,
            rows: a.row_support_len(),
            cols: a.col_support_len(),
            calls: AtomicU64::new(0),
        }
    }

    fn field_ref(&self) -> &Gf2eField {
        self.a.field()
    }

    /// First `len` entries of `T v` for lower-triangular Toeplitz `T` with
    /// diagonals `t`: `(T v)_i = sum_{j <= i} t[i - j] v_j`, the low part of
    /// the polynomial product `t(z) v(z)`.
    fn lower_prefix(&self, t: &[Gf2e], v: &[Gf2e], len: usize) -> Vec<Gf2e> {
        let field = self.field_ref();
        let prod = poly_mul_lazy(&t[..len], &v[..len]);
        prod.into_iter().take(len).map(|x| field.reduce(x)).collect()
    }

    /// `T v` for upper-triangular Toeplitz `T` when `v` is supported on the
    /// first `len` coordinates: `(T v)_i = sum_{i <= j < len} t[j - i] v_j`,
    /// read off the product of `t(z)` with the reversal of `v`.
    fn upper_of_prefix(&self, t: &[Gf2e], v: &[Gf2e], len: usize) -> Vec<Gf2e> {
        let field = self.field_ref();
        let reversed: Vec<Gf2e> = v[..len].iter().rev().copied().collect();
        let prod = poly_mul_lazy(&t[..len], &reversed);
        let mut out = vec![Gf2e::ZERO; t.len()];
        for (i, slot) in out.iter_mut().enumerate().take(len) {
            *slot = field.reduce(prod[len - 1 - i]);
        }
        out
    }

    /// `U v`.
    pub fn apply_u(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.upper_of_prefix(&self.alpha, v, v.len())
    }

    /// `U^T v`.
    pub fn apply_u_transpose(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.lower_prefix(&self.alpha, v, v.len())
    }

    /// `L v`.
    pub fn apply_l(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.lower_prefix(&self.beta, v, v.len())
    }

    /// `A` itself.
    pub fn inner(&self) -> &SparseMatrix {
        self.a
    }
}

impl BlackBox for Preconditioned<'_> {
    fn field(&self) -> &Gf2eField {
        self.field_ref()
    }

    fn dim(&self) -> usize {
        self.alpha.len()
    }

    fn apply(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        assert_eq!(v.len(), self.dim());
        self.calls.fetch_add(1, Ordering::Relaxed);
        let mut lv = self.lower_prefix(&self.beta, v, self.cols);
        lv.resize(self.dim(), Gf2e::ZERO);
        let alv = self.a.mul_vec_uncounted(&lv);
        self.upper_of_prefix(&self.alpha, &alv, self.rows)
    }

    fn apply_transpose(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        assert_eq!(v.len(), self.dim());
        self.calls.fetch_add(1, Ordering::Relaxed);
        let mut utv = self.lower_prefix(&self.alpha, v, self.rows);
        utv.resize(self.dim(), Gf2e::ZERO);
        let atutv = self.a.mul_transpose_uncounted(&utv);
        self.upper_of_prefix(&self.beta, &atutv, self.cols)
    }

    fn rank_bound(&self) -> usize {
        self.a.rank_bound()
    }

    fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

const KARATSUBA_CUTOFF: usize = 32;

/// Unreduced product of two polynomials of equal length over `GF(2^e)`.
fn poly_mul_lazy(a: &[Gf2e], b: &[Gf2e]) -> Vec<u128> {
    debug_assert_eq!(a.len(), b.len());
    let mut out = vec![0u128; (2 * a.len()).saturating_sub(1)];
    karatsuba(a, b, &mut out);
    out
}

/// `out ^= a * b` for equal-length `a`, `b`; `out` has `2 len - 1` slots.
fn karatsuba(a: &[Gf2e], b: &[Gf2e], out: &mut [u128]) {
    let n = a.len();
    if n <= KARATSUBA_CUTOFF {
        for (i, &x) in a.iter().enumerate() {
            Gf2eField::axpy_lazy(&mut out[i..], x, b);
        }
        return;
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let hi = n - h;

    let mut low = vec![0u128; 2 * h - 1];
    karatsuba(a0, b0, &mut low);
    let mut high = vec![0u128; 2 * hi - 1];
    karatsuba(a1, b1, &mut high);

    // (a0 + a1)(b0 + b1) with the shorter halves zero-extended.
    let sa: Vec<Gf2e> = (0..hi).map(|i| a1[i] + a0.get(i).copied().unwrap_or_default()).collect();
    let sb: Vec<Gf2e> = (0..hi).map(|i| b1[i] + b0.get(i).copied().unwrap_or_default()).collect();
    let mut mid = vec![0u128; 2 * hi - 1];
    karatsuba(&sa, &sb, &mut mid);
    for (m, &l) in mid.iter_mut().zip(&low) {
        *m ^= l;
    }
    for (m, &u) in mid.iter_mut().zip(&high) {
        *m ^= u;
    }

    for (slot, &l) in out.iter_mut().zip(&low) {
        *slot ^= l;
    }
    for (slot, &m) in out[h..].iter_mut().zip(&mid) {
        *slot ^= m;
    }
    for (slot, &u) in out[2 * h..].iter_mut().zip(&high) {
        *slot ^= u;
    }
}
