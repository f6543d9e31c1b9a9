use std::sync::atomic::{AtomicU64, Ordering};

use super::{Gf2e, Gf2eField, LinalgError};

/// A square linear operator accessed only through matrix-vector products.
///
/// Implementations count calls to [`BlackBox::apply`] and
/// [`BlackBox::apply_transpose`]; the count is what the complexity bounds
/// of the Wiedemann-style algorithms are stated in.
pub trait BlackBox {
    fn field(&self) -> &Gf2eField;

    fn dim(&self) -> usize;

    /// `A v`.
    fn apply(&self, v: &[Gf2e]) -> Vec<Gf2e>;

    /// `A^T v`.
    fn apply_transpose(&self, v: &[Gf2e]) -> Vec<Gf2e>;

    /// An upper bound on the rank (used to size Krylov sequences).
    fn rank_bound(&self) -> usize {
        self.dim()
    }

    /// Matrix-vector products performed so far.
    fn calls(&self) -> u64;
}

/// The transpose of a black box; calls are charged to the wrapped operator.
pub struct Transposed<'a, B: BlackBox + ?Sized>(pub &'a B);

impl<B: BlackBox + ?Sized> BlackBox for Transposed<'_, B> {
    fn field(&self) -> &Gf2eField {
        self.0.field()
    }

    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn apply(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.0.apply_transpose(v)
    }

    fn apply_transpose(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.0.apply(v)
    }

    fn rank_bound(&self) -> usize {
        self.0.rank_bound()
    }

    fn calls(&self) -> u64 {
        self.0.calls()
    }
}

/// A sparse matrix over `GF(2^e)` stored by rows.
///
/// Every row is a list of `(column, value)` pairs with strictly increasing
/// columns and no zero values.
pub struct SparseMatrix {
    field: Gf2eField,
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<(u32, Gf2e)>>,
    calls: AtomicU64,
}

impl Clone for SparseMatrix {
    fn clone(&self) -> Self {
        SparseMatrix {
            field: self.field,
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows: self.rows.clone(),
            calls: AtomicU64::new(self.calls()),
        }
    }
}

impl std::fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SparseMatrix[{}x{}, nnz={}, {:?}]", self.n_rows, self.n_cols, self.nnz(), self.field)
    }
}

impl SparseMatrix {
    pub fn new(
        field: Gf2eField,
        n_rows: usize,
        n_cols: usize,
        rows: Vec<Vec<(u32, Gf2e)>>,
    ) -> Result<Self, LinalgError> {
        if rows.len() != n_rows {
            return Err(LinalgError::DimensionMismatch { expected: n_rows, found: rows.len() });
        }
        for (r, row) in rows.iter().enumerate() {
            let increasing = row.windows(2).all(|w| w[0].0 < w[1].0);
            let in_range = row.last().map_or(true, |&(c, _)| (c as usize) < n_cols);
            let valid = row.iter().all(|&(_, v)| !v.is_zero() && field.contains(v));
            if !(increasing && in_range && valid) {
                return Err(LinalgError::MalformedRow { row: r });
            }
        }
        Ok(SparseMatrix { field, n_rows, n_cols, rows, calls: AtomicU64::new(0) })
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zero results dropped.
    pub fn from_triplets<I>(field: Gf2eField, n_rows: usize, n_cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Gf2e)>,
    {
        let mut rows: Vec<Vec<(u32, Gf2e)>> = vec![Vec::new(); n_rows];
        for (r, c, v) in triplets {
            if r >= n_rows || c >= n_cols {
                return Err(LinalgError::DimensionMismatch { expected: n_rows.max(n_cols), found: r.max(c) + 1 });
            }
            rows[r].push((c as u32, v));
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(u32, Gf2e)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|&(_, v)| !v.is_zero());
            *row = merged;
        }
        SparseMatrix::new(field, n_rows, n_cols, rows)
    }

    pub fn identity(field: Gf2eField, n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i as u32, Gf2e::ONE)]).collect();
        SparseMatrix::new(field, n, n, rows).expect("identity is well formed")
    }

    pub fn zero(field: Gf2eField, n: usize) -> Self {
        SparseMatrix::new(field, n, n, vec![Vec::new(); n]).expect("zero matrix is well formed")
    }

    pub fn from_dense(field: Gf2eField, dense: &[Vec<Gf2e>]) -> Result<Self, LinalgError> {
        let n_cols = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, &v)| (c as u32, v)).collect())
            .collect();
        SparseMatrix::new(field, dense.len(), n_cols, rows)
    }

    pub fn to_dense(&self) -> Vec<Vec<Gf2e>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![Gf2e::ZERO; self.n_cols];
                for &(c, v) in row {
                    dense[c as usize] = v;
                }
                dense
            })
            .collect()
    }

    pub fn field(&self) -> &Gf2eField {
        &self.field
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[Vec<(u32, Gf2e)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// One past the last row holding a nonzero entry.
    pub fn row_support_len(&self) -> usize {
        self.rows.iter().rposition(|r| !r.is_empty()).map_or(0, |i| i + 1)
    }

    /// One past the last column holding a nonzero entry.
    pub fn col_support_len(&self) -> usize {
        self.rows.iter().filter_map(|r| r.last()).map(|&(c, _)| c as usize + 1).max().unwrap_or(0)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(u32, Gf2e)>> = vec![Vec::new(); self.n_cols];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                rows[c as usize].push((r as u32, v));
            }
        }
        SparseMatrix::new(self.field, self.n_cols, self.n_rows, rows).expect("transpose preserves well-formedness")
    }

    /// Product `A v` without touching the call counter.
    pub(crate) fn mul_vec_uncounted(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        assert_eq!(v.len(), self.n_cols, "vector length does not match column count");
        self.rows
            .iter()
            .map(|row| {
                let mut ones = Gf2e::ZERO;
                let mut acc = 0u128;
                for &(c, a) in row {
                    let x = v[c as usize];
                    if a == Gf2e::ONE {
                        ones += x;
                    } else {
                        acc ^= super::gf2e::clmul(a.0, x.0);
                    }
                }
                ones + self.field.reduce(acc)
            })
            .collect()
    }

    /// Product `A^T v` without touching the call counter.
    pub(crate) fn mul_transpose_uncounted(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        assert_eq!(v.len(), self.n_rows, "vector length does not match row count");
        let mut acc = vec![0u128; self.n_cols];
        for (row, &x) in self.rows.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for &(c, a) in row {
                acc[c as usize] ^= if a == Gf2e::ONE { x.0 as u128 } else { super::gf2e::clmul(a.0, x.0) };
            }
        }
        acc.into_iter().map(|x| self.field.reduce(x)).collect()
    }

    /// Counted `A v` for rectangular matrices.
    pub fn mul_vec(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.mul_vec_uncounted(v)
    }

    /// Counted `A^T v` for rectangular matrices.
    pub fn mul_transpose_vec(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.mul_transpose_uncounted(v)
    }

    pub fn reset_calls(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }

    fn nonzero_row_count(&self) -> usize {
        self.rows.iter().filter(|r| !r.is_empty()).count()
    }

    fn nonzero_col_count(&self) -> usize {
        let mut seen = vec![false; self.n_cols];
        for row in &self.rows {
            for &(c, _) in row {
                seen[c as usize] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }
}

impl BlackBox for SparseMatrix {
    fn field(&self) -> &Gf2eField {
        &self.field
    }

    fn dim(&self) -> usize {
        assert_eq!(self.n_rows, self.n_cols, "black-box matrices are square");
        self.n_rows
    }

    fn apply(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.mul_vec(v)
    }

    fn apply_transpose(&self, v: &[Gf2e]) -> Vec<Gf2e> {
        self.mul_transpose_vec(v)
    }

    fn rank_bound(&self) -> usize {
        self.nonzero_row_count().min(self.nonzero_col_count())
    }

    fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}
