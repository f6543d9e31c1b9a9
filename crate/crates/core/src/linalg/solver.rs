use rand::Rng;

use super::{
    berlekamp_massey, random_sol, wiedemann, BlackBox, Gf2e, LinalgError, PolyOverGf2e, Preconditioned, Probes,
    SparseMatrix, Transposed, WiedemannOutcome,
};

/// Outcome of [`sparse_linear_system_solver`]; every payload has been
/// verified exactly before it is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverVerdict {
    /// `A x = b`, found by Wiedemann's algorithm on `A` directly.
    Nonsingular(Vec<Gf2e>),
    /// `A x = b` with `x` a random element of the solution space.
    SingularConsistent(Vec<Gf2e>),
    /// `u^T A = 0` and `u^T b != 0`.
    SingularInconsistent(Vec<Gf2e>),
}

impl SolverVerdict {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, SolverVerdict::SingularInconsistent(_))
    }

    pub fn payload(&self) -> &[Gf2e] {
        match self {
            SolverVerdict::Nonsingular(v)
            | SolverVerdict::SingularConsistent(v)
            | SolverVerdict::SingularInconsistent(v) => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Unit-vector probes in the initial Wiedemann pass; random ones otherwise.
    pub deterministic: bool,
    /// Preconditioner draws before giving up.
    pub retry_budget: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { deterministic: true, retry_budget: 20 }
    }
}

/// The minimal polynomial of the projected sequence `u^T B^i v` for random
/// `u`, `v`. With high probability over a large field this is the minimal
/// polynomial of `B`; in any case it divides it.
pub fn minimal_polynomial<B, R>(b: &B, rng: &mut R) -> PolyOverGf2e
where
    B: BlackBox + ?Sized,
    R: Rng + ?Sized,
{
    let field = *b.field();
    let n = b.dim();
    let bound = n.min(b.rank_bound() + 1);
    let len = 2 * bound + 2;
    let u: Vec<Gf2e> = (0..n).map(|_| field.random(rng)).collect();
    let mut v: Vec<Gf2e> = (0..n).map(|_| field.random(rng)).collect();
    let mut seq = Vec::with_capacity(len);
    for i in 0..len {
        if i > 0 {
            v = b.apply(&v);
        }
        seq.push(field.dot(&u, &v));
        if v.iter().all(|x| x.is_zero()) {
            seq.resize(len, Gf2e::ZERO);
            break;
        }
    }
    berlekamp_massey(&field, &seq)
}

/// Solves `A x = b` or certifies that no solution exists.
///
/// A first Wiedemann pass on `A` settles systems it can solve outright.
/// Otherwise `A` is preconditioned as `B = U A L` with random unit
/// triangular Toeplitz `U`, `L`; `f = minpoly(B) / z` yields either a
/// random left-kernel vector of `B` exposing inconsistency, or a random
/// solution of `B y = U b` giving `x = L y`. Failed trials redraw the
/// preconditioners until `retry_budget` is exhausted.
pub fn sparse_linear_system_solver<R>(
    a: &SparseMatrix,
    b: &[Gf2e],
    rng: &mut R,
    options: SolverOptions,
) -> Result<SolverVerdict, LinalgError>
where
    R: Rng,
{
    let n = a.n_rows();
    if a.n_cols() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, found: a.n_cols() });
    }
    if b.len() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, found: b.len() });
    }
    let field = *a.field();

    let probes = if options.deterministic { Probes::Unit } else { Probes::Random(rng) };
    if let WiedemannOutcome::Solution(x) = wiedemann(a, b, probes) {
        return Ok(SolverVerdict::Nonsingular(x));
    }

    for attempt in 1..=options.retry_budget {
        let pre = Preconditioned::random(a, rng);
        let f_hat = minimal_polynomial(&pre, rng);
        let Some(f) = f_hat.div_by_z() else {
            log::debug!("attempt {attempt}: minimal polynomial not divisible by z");
            continue;
        };
        if f.constant_term().is_zero() {
            log::debug!("attempt {attempt}: z divides f");
            continue;
        }
        let c = pre.apply_u(b);

        let zero = vec![Gf2e::ZERO; n];
        if let Some(u) = random_sol(&Transposed(&pre), &zero, &f, rng)? {
            if !field.dot(&u, &c).is_zero() {
                let v = pre.apply_u_transpose(&u);
                if a.mul_transpose_vec(&v).iter().all(|x| x.is_zero()) && !field.dot(&v, b).is_zero() {
                    return Ok(SolverVerdict::SingularInconsistent(v));
                }
                log::debug!("attempt {attempt}: certificate failed verification");
                continue;
            }
        }
        if let Some(y) = random_sol(&pre, &c, &f, rng)? {
            let x = pre.apply_l(&y);
            if a.mul_vec(&x) == b {
                return Ok(SolverVerdict::SingularConsistent(x));
            }
        }
        log::debug!("attempt {attempt}: no verified payload");
    }
    Err(LinalgError::RetryBudgetExhausted { attempts: options.retry_budget })
}
