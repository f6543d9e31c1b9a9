use rand::Rng;

use super::{BlackBox, Gf2e, Gf2eField, LinalgError, PolyOverGf2e};

/// A random solution of `A x = b` from a polynomial `f` with `f(0) != 0`
/// that annihilates `A` on its image.
///
/// Draws a uniform shift `w`, sets `b' = b + A w`, evaluates
/// `x' = f_0^{-1} sum_{i=1}^{r} f_i A^{i-1} b'` with `r = deg f`, and returns
/// `x' + w` when it verifies. `Ok(None)` means this trial found no solution.
/// Uses `r + 1` matrix-vector products.
pub fn random_sol<B, R>(a: &B, b: &[Gf2e], f: &PolyOverGf2e, rng: &mut R) -> Result<Option<Vec<Gf2e>>, LinalgError>
where
    B: BlackBox + ?Sized,
    R: Rng + ?Sized,
{
    let field = *a.field();
    let n = a.dim();
    if b.len() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, found: b.len() });
    }
    if f.constant_term().is_zero() {
        return Err(LinalgError::ZeroConstantTerm);
    }
    let w: Vec<Gf2e> = (0..n).map(|_| field.random(rng)).collect();
    let r = f.degree().expect("nonzero polynomial");

    let mut power: Vec<Gf2e> = a.apply(&w).iter().zip(b).map(|(&x, &y)| x + y).collect();
    let mut acc = vec![0u128; n];
    for i in 1..=r {
        if i > 1 {
            power = a.apply(&power);
        }
        Gf2eField::axpy_lazy(&mut acc, f.coeff(i), &power);
    }
    let f0_inv = field.inv(f.constant_term())?;
    let x: Vec<Gf2e> = acc.into_iter().zip(&w).map(|(v, &wi)| field.mul(field.reduce(v), f0_inv) + wi).collect();
    Ok((a.apply(&x) == b).then_some(x))
}
