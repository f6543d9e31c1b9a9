use num_bigint::BigInt;
use num_traits::Signed;

use super::MacaulayError;

/// Coefficients `c_0..=c_up_to` of
/// `HS(m, n, k) = (1 + t)^(n-k) / ((1 - t) (1 + t^2)^m)`, exactly.
pub fn hilbert_prefix(m: usize, n: usize, k: usize, up_to: usize) -> Vec<BigInt> {
    assert!(k <= n, "cannot fix more variables than exist");
    let free = n - k;
    // (1 + t)^free via Pascal's rule.
    let mut c = vec![BigInt::from(0); up_to + 1];
    c[0] = BigInt::from(1);
    for _ in 0..free {
        for i in (1..=up_to).rev() {
            let prev = c[i - 1].clone();
            c[i] += prev;
        }
    }
    // 1 / (1 - t): prefix sums.
    for i in 1..=up_to {
        let prev = c[i - 1].clone();
        c[i] += prev;
    }
    // 1 / (1 + t^2), m times: c'_i = c_i - c'_{i-2}.
    for _ in 0..m {
        for i in 2..=up_to {
            let prev = c[i - 2].clone();
            c[i] -= prev;
        }
    }
    c
}

/// The witness degree `d_wit(m, n, k)`: the index of the first
/// non-positive coefficient of [`hilbert_prefix`], scanning up to `n + 2`.
pub fn witness_degree(m: usize, n: usize, k: usize) -> Result<usize, MacaulayError> {
    let cap = n + 2;
    hilbert_prefix(m, n, k, cap).iter().position(|c| !c.is_positive()).ok_or(MacaulayError::SeriesNeverTruncates {
        m,
        n,
        k,
        cap,
    })
}
