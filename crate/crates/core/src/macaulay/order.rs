use std::cmp::Ordering;

use crate::mq::Monomial;

/// Degree reverse lexicographic order on square-free monomials in `n`
/// variables, together with the column layout of a Macaulay matrix.
///
/// Columns of degree `d` list every monomial of degree at most `d` from
/// largest to smallest: degree `d` first and the constant `1` last. Within
/// one degree, DRL-descending is ascending order of the bitmask, which is
/// the colexicographic order of the variable sets, so a column index is a
/// degree offset plus a colex rank.
#[derive(Debug, Clone)]
pub struct DrlOrder {
    n: usize,
    /// `binom[a][b] = C(a, b)` for `a <= n`, `b <= n`.
    binom: Vec<Vec<u64>>,
}

impl DrlOrder {
    pub fn new(n: usize) -> Self {
        assert!(n <= crate::mq::MAX_VARS);
        let mut binom = vec![vec![0u64; n + 2]; n + 1];
        for a in 0..=n {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = binom[a - 1][b - 1] + if b <= a - 1 { binom[a - 1][b] } else { 0 };
            }
        }
        DrlOrder { n, binom }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn compare(&self, a: Monomial, b: Monomial) -> Ordering {
        a.cmp(&b)
    }

    /// `C(n, j)`, zero when `j > n`.
    pub fn binomial(&self, j: usize) -> u64 {
        if j > self.n {
            0
        } else {
            self.binom[self.n][j]
        }
    }

    /// Number of monomials of degree at most `d`.
    pub fn count_up_to(&self, d: usize) -> usize {
        (0..=d).map(|j| self.binomial(j) as usize).sum()
    }

    /// All monomials of degree exactly `j`, in descending DRL order.
    pub fn monomials_of_degree(&self, j: usize) -> Vec<Monomial> {
        if j > self.n {
            return Vec::new();
        }
        if j == 0 {
            return vec![Monomial::ONE];
        }
        let mut out = Vec::with_capacity(self.binomial(j) as usize);
        let limit: u128 = 1u128 << self.n;
        let mut mask: u64 = if j == 64 { u64::MAX } else { (1u64 << j) - 1 };
        loop {
            out.push(Monomial::from_mask(mask));
            // Gosper's hack: next integer with the same popcount.
            let c = mask & mask.wrapping_neg();
            let (r, overflow) = mask.overflowing_add(c);
            if overflow || r == 0 {
                break;
            }
            let next = (((r ^ mask) >> 2) / c) | r;
            if (next as u128) >= limit {
                break;
            }
            mask = next;
        }
        out
    }

    /// All monomials of degree at most `d`, in descending DRL order (the
    /// column order of a degree-`d` Macaulay matrix).
    pub fn monomials_desc(&self, d: usize) -> Vec<Monomial> {
        (0..=d.min(self.n)).rev().flat_map(|j| self.monomials_of_degree(j)).collect()
    }

    /// Column of `m` in the degree-`d` layout; `None` if `deg(m) > d` or `m`
    /// uses a variable beyond `x_n`.
    pub fn column_index(&self, m: Monomial, d: usize) -> Option<usize> {
        let deg = m.degree() as usize;
        if deg > d || m.max_var().is_some_and(|v| v >= self.n) {
            return None;
        }
        let offset: usize = (deg + 1..=d).map(|j| self.binomial(j) as usize).sum();
        let rank: u64 = m.vars().enumerate().map(|(i, p)| self.binom[p][i + 1]).sum();
        Some(offset + rank as usize)
    }
}
