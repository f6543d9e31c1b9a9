//! Reference implementations used as test oracles. They favour obviousness
//! over speed and share no code with the library beyond field arithmetic.

#![allow(dead_code)]

use mqsolve_core::linalg::{Gf2e, Gf2eField};
use mqsolve_core::mq::PolynomialSystem;

/// Result of dense Gaussian elimination on `A x = b` over `GF(2^e)`.
pub struct DenseSolve {
    pub rank: usize,
    /// A solution when the system is consistent.
    pub solution: Option<Vec<Gf2e>>,
}

/// Reduced row echelon form of the augmented matrix `[A | b]`.
pub fn dense_solve(field: &Gf2eField, a: &[Vec<Gf2e>], b: &[Gf2e]) -> DenseSolve {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Gf2e>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x += field.mul(factor, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let consistent = m[r..].iter().all(|row| row[cols].is_zero());
    let solution = consistent.then(|| {
        let mut x = vec![Gf2e::ZERO; cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = m[i][cols];
        }
        x
    });
    DenseSolve { rank: r, solution }
}

pub fn dense_mul_vec(field: &Gf2eField, a: &[Vec<Gf2e>], x: &[Gf2e]) -> Vec<Gf2e> {
    a.iter().map(|row| row.iter().zip(x).fold(Gf2e::ZERO, |acc, (&p, &q)| acc + field.mul(p, q))).collect()
}

pub fn dense_transpose_mul_vec(field: &Gf2eField, a: &[Vec<Gf2e>], y: &[Gf2e]) -> Vec<Gf2e> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().zip(y).fold(Gf2e::ZERO, |acc, (row, &q)| acc + field.mul(row[j], q))).collect()
}

/// Whether `e_last = (0, ..., 0, 1)` lies in the `F_2` row space of the
/// 0/1 matrix with the given row supports and `cols` columns.
pub fn f2_row_space_contains_last_unit(rows: &[Vec<u32>], cols: usize) -> bool {
    if cols == 0 {
        return false;
    }
    let mut basis: Vec<Vec<bool>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let reduce = |mut v: Vec<bool>, basis: &Vec<Vec<bool>>, pivot_cols: &Vec<usize>| {
        for (b, &p) in basis.iter().zip(pivot_cols) {
            if v[p] {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        v
    };
    for row in rows {
        let mut v = vec![false; cols];
        for &c in row {
            v[c as usize] ^= true;
        }
        let v = reduce(v, &basis, &pivot_cols);
        if let Some(p) = v.iter().position(|&x| x) {
            for (b, _) in basis.iter_mut().zip(&pivot_cols).filter(|(b, _)| b[p]) {
                for (x, &y) in b.iter_mut().zip(&v) {
                    *x ^= y;
                }
            }
            basis.push(v);
            pivot_cols.push(p);
        }
    }
    let mut target = vec![false; cols];
    target[cols - 1] = true;
    reduce(target, &basis, &pivot_cols).iter().all(|&x| !x)
}

/// Roots by evaluating every polynomial at every point, as integers with
/// bit `i` holding `x_{i+1}`.
pub fn naive_roots(system: &PolynomialSystem) -> Vec<u64> {
    let n = system.num_vars();
    (0..1u64 << n)
        .filter(|&p| {
            system.polys().iter().all(|f| {
                let value = f.terms().iter().fold(false, |acc, t| acc ^ t.vars().all(|i| p >> i & 1 == 1));
                !value
            })
        })
        .collect()
}

/// `C(n, k)` as `u64`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
