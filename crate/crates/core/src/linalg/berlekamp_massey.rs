use super::{Gf2e, Gf2eField, PolyOverGf2e};

/// The monic annihilator of minimal degree for the prefix `s`.
///
/// Returns `f` of degree `L` with `sum_j f_j s_{i+j} = 0` for every
/// `0 <= i < |s| - L`. The recurrence is unique once `|s| >= 2L`. An all-zero
/// prefix yields the constant polynomial `1`.
pub fn berlekamp_massey(field: &Gf2eField, s: &[Gf2e]) -> PolyOverGf2e {
    // Connection polynomial C with s_n + sum_{i=1}^{L} C_i s_{n-i} = 0.
    let mut c = vec![Gf2e::ONE];
    let mut b = vec![Gf2e::ONE];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = Gf2e::ONE;

    for n in 0..s.len() {
        let mut disc = s[n];
        for i in 1..=len.min(c.len() - 1) {
            disc += field.mul(c[i], s[n - i]);
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let coef = field.div(disc, last_disc).expect("previous discrepancy is nonzero");
        let previous = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, Gf2e::ZERO);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + shift] += field.mul(coef, bi);
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = previous;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }

    c.resize(len + 1, Gf2e::ZERO);
    c.reverse();
    PolyOverGf2e::new(c)
}
