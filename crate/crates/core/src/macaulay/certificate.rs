use rand::Rng;
use serde::Serialize;

use crate::linalg::{sparse_linear_system_solver, Gf2e, Gf2eField, SolverOptions, SolverVerdict, SparseMatrix};

use super::{MacaulayError, MacaulayMatrix};

/// How `u M = e_last` is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateBackend {
    /// Gaussian elimination over `F_2`.
    Dense,
    /// The certifying sparse solver over `GF(2^e)` on the transposed,
    /// zero-padded system.
    Sparse,
    /// Both, failing on disagreement; returns the dense certificate.
    CrossCheck,
}

impl std::str::FromStr for CertificateBackend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dense" => Ok(CertificateBackend::Dense),
            "sparse" => Ok(CertificateBackend::Sparse),
            "cross-check" | "crosscheck" => Ok(CertificateBackend::CrossCheck),
            other => Err(format!("unknown backend {other:?} (expected dense, sparse or cross-check)")),
        }
    }
}

/// A row combination `u` with `u M = (0, ..., 0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Indices of the rows summed over `F_2`.
    Binary(Vec<usize>),
    /// One coefficient per row over `GF(2^e)`.
    Extension { field: Gf2eField, coeffs: Vec<Gf2e> },
}

impl Certificate {
    /// Checks `u M = e_last` exactly.
    pub fn verify(&self, m: &MacaulayMatrix) -> bool {
        let c = m.n_cols();
        if c == 0 {
            return false;
        }
        match self {
            Certificate::Binary(rows) => {
                let mut acc = vec![false; c];
                for &r in rows {
                    let Some(row) = m.rows().get(r) else { return false };
                    for &col in row {
                        acc[col as usize] ^= true;
                    }
                }
                acc[..c - 1].iter().all(|&b| !b) && acc[c - 1]
            }
            Certificate::Extension { coeffs, .. } => {
                if coeffs.len() != m.n_rows() {
                    return false;
                }
                let mut acc = vec![Gf2e::ZERO; c];
                for (row, &u) in m.rows().iter().zip(coeffs) {
                    for &col in row {
                        acc[col as usize] += u;
                    }
                }
                acc[..c - 1].iter().all(|x| x.is_zero()) && acc[c - 1] == Gf2e::ONE
            }
        }
    }

    /// Rows with a nonzero coefficient.
    pub fn support(&self) -> usize {
        match self {
            Certificate::Binary(rows) => rows.len(),
            Certificate::Extension { coeffs, .. } => coeffs.iter().filter(|x| !x.is_zero()).count(),
        }
    }
}

/// Finds `u` with `u M = (0, ..., 0, 1)`, or `None` when none exists.
///
/// A certificate proves that the underlying system has no Boolean root.
/// Returned certificates are always verified.
pub fn consistency_certificate<R: Rng>(
    m: &MacaulayMatrix,
    backend: CertificateBackend,
    options: SolverOptions,
    rng: &mut R,
) -> Result<Option<Certificate>, MacaulayError> {
    let cert = match backend {
        CertificateBackend::Dense => dense_certificate(m),
        CertificateBackend::Sparse => sparse_certificate(m, options, rng)?,
        CertificateBackend::CrossCheck => {
            let dense = dense_certificate(m);
            let sparse = sparse_certificate(m, options, rng)?;
            if dense.is_some() != sparse.is_some() {
                return Err(MacaulayError::BackendDisagreement { dense: dense.is_some(), sparse: sparse.is_some() });
            }
            dense
        }
    };
    debug_assert!(cert.as_ref().map_or(true, |c| c.verify(m)));
    Ok(cert)
}

/// Gaussian elimination over `F_2` with 64 columns per word, tracking which
/// original rows make up each reduced row.
fn dense_certificate(m: &MacaulayMatrix) -> Option<Certificate> {
    let c = m.n_cols();
    let r = m.n_rows();
    if c == 0 || r == 0 {
        return None;
    }
    let col_words = c.div_ceil(64);
    let row_words = r.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .rows()
        .iter()
        .map(|row| {
            let mut bits = vec![0u64; col_words];
            for &col in row {
                bits[col as usize / 64] |= 1 << (col % 64);
            }
            bits
        })
        .collect();
    let mut combos: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut bits = vec![0u64; row_words];
            bits[i / 64] |= 1 << (i % 64);
            bits
        })
        .collect();

    let mut next = 0;
    for col in 0..c {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (next..r).find(|&i| rows[i][w] & bit != 0) else { continue };
        rows.swap(next, p);
        combos.swap(next, p);
        let (done, rest) = rows.split_at_mut(next + 1);
        let (cdone, crest) = combos.split_at_mut(next + 1);
        let pivot = &done[next];
        let pcombo = &cdone[next];
        for (row, combo) in rest.iter_mut().zip(crest.iter_mut()) {
            if row[w] & bit != 0 {
                for (a, b) in row[w..].iter_mut().zip(&pivot[w..]) {
                    *a ^= b;
                }
                for (a, b) in combo.iter_mut().zip(pcombo) {
                    *a ^= b;
                }
            }
        }
        if col == c - 1 {
            let selected = (0..r).filter(|&i| combos[next][i / 64] >> (i % 64) & 1 == 1).collect();
            return Some(Certificate::Binary(selected));
        }
        next += 1;
        if next == r {
            break;
        }
    }
    None
}

/// Solves `M^T u^T = e_last` with the certifying sparse solver after
/// padding `M^T` to a square matrix of size `max(r, c)`.
fn sparse_certificate<R: Rng>(
    m: &MacaulayMatrix,
    options: SolverOptions,
    rng: &mut R,
) -> Result<Option<Certificate>, MacaulayError> {
    Ok(match sparse_verdict(m, options, rng)? {
        Some((field, SolverVerdict::Nonsingular(x) | SolverVerdict::SingularConsistent(x))) => {
            Some(Certificate::Extension { field, coeffs: x[..m.n_rows()].to_vec() })
        }
        Some((_, SolverVerdict::SingularInconsistent(_))) | None => None,
    })
}

/// The raw verdict of the sparse solver on `A x = e_{c-1}`, where `A` is
/// `M^T` padded with zeros to `N x N`, `N = max(r, c)`, over the field
/// chosen for `N`. `None` for an empty matrix.
///
/// A consistent payload `x` gives the certificate `u = x[..r]`. An
/// inconsistent payload `v` satisfies `M v[..c] = 0` with `v[c-1] != 0`,
/// proving that `e_{c-1}` is not in the row space.
pub fn sparse_verdict<R: Rng>(
    m: &MacaulayMatrix,
    options: SolverOptions,
    rng: &mut R,
) -> Result<Option<(Gf2eField, SolverVerdict)>, MacaulayError> {
    let r = m.n_rows();
    let c = m.n_cols();
    if c == 0 || r == 0 {
        return Ok(None);
    }
    let n = r.max(c);
    let field = Gf2eField::for_dimension(n)?;
    let triplets =
        m.rows().iter().enumerate().flat_map(|(row, cols)| cols.iter().map(move |&col| (col as usize, row, Gf2e::ONE)));
    let a = SparseMatrix::from_triplets(field, n, n, triplets)?;
    let mut b = vec![Gf2e::ZERO; n];
    b[c - 1] = Gf2e::ONE;
    Ok(Some((field, sparse_linear_system_solver(&a, &b, rng, options)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::build_macaulay;
    use crate::mq::{parse_system, random_system};
    use crate::rng;

    fn check(m: &MacaulayMatrix, backend: CertificateBackend) -> Option<Certificate> {
        let mut r = rng::seeded(11);
        consistency_certificate(m, backend, SolverOptions::default(), &mut r).unwrap()
    }

    #[test]
    fn constant_row_is_its_own_certificate() {
        let f = parse_system("2 2\nx1*x2 + x1\n1\n").unwrap();
        let mac = build_macaulay(&f, 2).unwrap();
        let cert = check(&mac, CertificateBackend::Dense).unwrap();
        assert_eq!(cert, Certificate::Binary(vec![1]));
        let sparse = check(&mac, CertificateBackend::Sparse).unwrap();
        assert!(sparse.verify(&mac));
    }

    #[test]
    fn zero_rows_have_no_certificate() {
        let f = parse_system("2 2\n0\n0\n").unwrap();
        let mac = build_macaulay(&f, 2).unwrap();
        assert_eq!(check(&mac, CertificateBackend::CrossCheck), None);
    }

    #[test]
    fn backends_agree_on_random_systems() {
        for seed in 0..10 {
            let (f, _) = random_system(6, 9, seed, seed % 2 == 0);
            let mac = build_macaulay(&f, 3).unwrap();
            let cert = check(&mac, CertificateBackend::CrossCheck);
            if let Some(c) = &cert {
                assert!(c.verify(&mac));
            }
            if seed % 2 == 0 {
                assert!(cert.is_none(), "planted root but certificate found");
            }
        }
    }
}
