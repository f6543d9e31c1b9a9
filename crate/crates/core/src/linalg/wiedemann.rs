use rand::RngCore;

use super::{berlekamp_massey, BlackBox, Gf2e, PolyOverGf2e};

/// How projection vectors are chosen.
pub enum Probes<'r> {
    /// Unit vectors, deterministic. Each probe is a coordinate where the
    /// current residual `g(A) b` is nonzero, lowest index first.
    Unit,
    /// Uniformly random vectors.
    Random(&'r mut dyn RngCore),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WiedemannOutcome {
    /// A verified solution of `A x = b`.
    Solution(Vec<Gf2e>),
    /// `g` with `g(A) b = 0` but `g(0) = 0`; a factor of the minimal
    /// polynomial of `A`.
    Factor(PolyOverGf2e),
}

/// Wiedemann's algorithm for a square black box.
///
/// The Krylov vectors `A^i b` are computed once for `i < 2D`, where
/// `D = min(N, rank_bound + 1)` bounds the degree of the minimal polynomial;
/// every probe reads its projections from them. The product `g` of the
/// recovered factors is extended until `g(A) b = 0`. Uses at most `2D`
/// matrix-vector products including the final verification.
pub fn wiedemann<B: BlackBox + ?Sized>(a: &B, b: &[Gf2e], mut probes: Probes<'_>) -> WiedemannOutcome {
    let field = *a.field();
    let n = a.dim();
    assert_eq!(b.len(), n, "right-hand side has wrong length");
    if b.iter().all(|x| x.is_zero()) {
        return WiedemannOutcome::Solution(vec![Gf2e::ZERO; n]);
    }
    let d = n.min(a.rank_bound() + 1);

    let mut krylov: Vec<Vec<Gf2e>> = Vec::with_capacity(2 * d);
    krylov.push(b.to_vec());
    while krylov.len() < 2 * d {
        let next = a.apply(krylov.last().unwrap());
        let zero = next.iter().all(|x| x.is_zero());
        krylov.push(next);
        if zero {
            break;
        }
    }
    let s_at = |i: usize| -> Option<&Vec<Gf2e>> { krylov.get(i) };

    let mut g = PolyOverGf2e::one();
    let mut residual = b.to_vec();
    let mut probe_index = 0usize;
    while residual.iter().any(|x| !x.is_zero()) {
        let deg_g = g.degree().unwrap();
        if deg_g >= d {
            break;
        }
        let len = 2 * (d - deg_g);
        let proj: Box<dyn Fn(&[Gf2e]) -> Gf2e> = match &mut probes {
            Probes::Unit => {
                let k = residual.iter().position(|x| !x.is_zero()).unwrap();
                Box::new(move |v: &[Gf2e]| v[k])
            }
            Probes::Random(rng) => {
                let u: Vec<Gf2e> = (0..n).map(|_| field.random(&mut **rng)).collect();
                Box::new(move |v: &[Gf2e]| field.dot(&u, v))
            }
        };
        probe_index += 1;
        // Projections of A^i g(A) b = sum_j g_j A^{i+j} b; missing Krylov
        // vectors past an early zero are zero.
        let base: Vec<Gf2e> = (0..len + deg_g).map(|i| s_at(i).map_or(Gf2e::ZERO, |v| proj(v))).collect();
        let seq: Vec<Gf2e> = (0..len)
            .map(|i| g.coeffs().iter().enumerate().fold(Gf2e::ZERO, |acc, (j, &gj)| acc + field.mul(gj, base[i + j])))
            .collect();
        let f = berlekamp_massey(&field, &seq);
        if f.degree() == Some(0) {
            // Only random probes can produce a zero sequence.
            if probe_index > 4 * n {
                break;
            }
            continue;
        }
        g = g.mul(&f, &field);
        residual = combine(&field, &g, 0, &krylov, n);
    }

    if residual.iter().any(|x| !x.is_zero()) || g.constant_term().is_zero() {
        log::debug!("wiedemann: no solution, factor of degree {:?}", g.degree());
        return WiedemannOutcome::Factor(g);
    }
    let g0_inv = field.inv(g.constant_term()).expect("nonzero constant term");
    let mut x = combine(&field, &g, 1, &krylov, n);
    for xi in &mut x {
        *xi = field.mul(*xi, g0_inv);
    }
    if a.apply(&x) == b {
        WiedemannOutcome::Solution(x)
    } else {
        WiedemannOutcome::Factor(g)
    }
}

/// `sum_{i >= from} g_i A^{i - from} b` from the stored Krylov vectors.
fn combine(field: &super::Gf2eField, g: &PolyOverGf2e, from: usize, krylov: &[Vec<Gf2e>], n: usize) -> Vec<Gf2e> {
    let mut acc = vec![0u128; n];
    for (i, &gi) in g.coeffs().iter().enumerate().skip(from) {
        if let Some(v) = krylov.get(i - from) {
            super::Gf2eField::axpy_lazy(&mut acc, gi, v);
        }
    }
    acc.into_iter().map(|x| field.reduce(x)).collect()
}
