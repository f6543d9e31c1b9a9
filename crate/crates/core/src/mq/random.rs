use rand::Rng;

use super::{Assignment, BooleanPolynomial, Monomial, PolynomialSystem};
use crate::rng;

/// A random quadratic system and, when requested, a planted root.
///
/// Each polynomial draws its `1 + n + C(n,2)` coefficients as fair bits in
/// the order: constant, `x_1..x_n`, then `x_i x_j` for `i < j`
/// lexicographically. The planted root is drawn after all polynomials as
/// the low `n` bits of one 64-bit output, and only the constant terms are
/// adjusted so that it is a root.
pub fn random_system(n: usize, m: usize, seed: u64, ensure_solution: bool) -> (PolynomialSystem, Option<Assignment>) {
    let mut rng = rng::seeded(seed);
    let mut polys: Vec<BooleanPolynomial> = (0..m)
        .map(|_| {
            let mut terms = Vec::new();
            if rng.gen::<bool>() {
                terms.push(Monomial::ONE);
            }
            for i in 0..n {
                if rng.gen::<bool>() {
                    terms.push(Monomial::var(i));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen::<bool>() {
                        terms.push(Monomial::var(i) * Monomial::var(j));
                    }
                }
            }
            BooleanPolynomial::from_terms(n, terms)
        })
        .collect();

    let planted = ensure_solution.then(|| {
        let root = Assignment::new(rng.gen::<u64>(), n);
        for p in &mut polys {
            if p.eval_bits(root.bits()) {
                *p = &*p + &BooleanPolynomial::one(n);
            }
        }
        root
    });
    let system = PolynomialSystem::new(n, polys).expect("generated polynomials are quadratic");
    (system, planted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mq::brute_force_solve;

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(random_system(10, 7, 99, true), random_system(10, 7, 99, true));
        assert_ne!(random_system(10, 7, 99, false).0, random_system(10, 7, 100, false).0);
    }

    #[test]
    fn planted_root_solves() {
        for seed in 0..20 {
            let (f, z) = random_system(10, 12, seed, true);
            assert!(f.is_root(&z.unwrap()).unwrap());
        }
    }

    #[test]
    fn solvable_fraction_matches_poisson_heuristic() {
        // P[at least one root] = 1 - (1 - 2^-10)^(2^10) ≈ 0.632 for n = m = 10.
        let solvable = (0..100)
            .filter(|&seed| !brute_force_solve(&random_system(10, 10, seed, false).0).unwrap().is_empty())
            .count();
        let expected = 1.0 - (1.0 - 2f64.powi(-10)).powi(1024);
        assert!((solvable as f64 / 100.0 - expected).abs() <= 0.15, "{solvable} of 100 solvable");
    }
}
