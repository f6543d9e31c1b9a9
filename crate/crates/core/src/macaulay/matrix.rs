use std::io::{self, BufRead, Write};

use crate::mq::{Monomial, PolynomialSystem};

use super::{DrlOrder, MacaulayError};

/// The Boolean Macaulay matrix of a quadratic system in degree `d`.
///
/// Row `(i, t)` holds the coefficients of `φ(t f_i)` for every square-free
/// `t` with `deg t <= d - 2`; columns are all square-free monomials of degree
/// at most `d` in descending DRL order, so the last column is `1`. Rows are
/// stored as strictly increasing column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayMatrix {
    n: usize,
    degree: usize,
    n_cols: usize,
    labels: Vec<(usize, Monomial)>,
    rows: Vec<Vec<u32>>,
}

/// Upper bounds on the shape of a Macaulay matrix for `1 <= d < n/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeBounds {
    pub rows: f64,
    pub cols: f64,
    pub nonzeros: f64,
}

/// Bounds with `x = d / n`:
/// `c < (1-x)/(1-2x) C(n,d)`, `r < m x^2/((1-2x)(1-x)) C(n,d)` and
/// `s < m n^2 x^2/((1-2x)(1-x)) C(n,d)`. `None` outside `1 <= d < n/2`.
pub fn shape_bounds(m: usize, n: usize, d: usize) -> Option<ShapeBounds> {
    if d < 1 || 2 * d >= n {
        return None;
    }
    let x = d as f64 / n as f64;
    let binom = (0..d).fold(1.0f64, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    let row_factor = x * x / ((1.0 - 2.0 * x) * (1.0 - x));
    Some(ShapeBounds {
        cols: (1.0 - x) / (1.0 - 2.0 * x) * binom,
        rows: m as f64 * row_factor * binom,
        nonzeros: m as f64 * (n * n) as f64 * row_factor * binom,
    })
}

/// Builds the degree-`d` Macaulay matrix of `system`.
pub fn build_macaulay(system: &PolynomialSystem, d: usize) -> Result<MacaulayMatrix, MacaulayError> {
    let n = system.num_vars();
    if d < 2 && system.polys().iter().any(|p| p.degree() == Some(2)) {
        return Err(MacaulayError::DegreeTooLow { d });
    }
    let order = DrlOrder::new(n);
    let multipliers: Vec<Monomial> =
        if d >= 2 { (0..=d - 2).flat_map(|j| order.monomials_of_degree(j)).collect() } else { Vec::new() };

    let mut labels = Vec::with_capacity(system.num_equations() * multipliers.len());
    let mut rows = Vec::with_capacity(labels.capacity());
    for (i, f) in system.polys().iter().enumerate() {
        for &t in &multipliers {
            let mut cols: Vec<u32> = f
                .terms()
                .iter()
                .map(|&s| order.column_index(s * t, d).expect("product degree is at most d") as u32)
                .collect();
            cols.sort_unstable();
            rows.push(cancel_pairs(cols));
            labels.push((i, t));
        }
    }
    Ok(MacaulayMatrix { n, degree: d, n_cols: order.count_up_to(d), labels, rows })
}

fn cancel_pairs(sorted: Vec<u32>) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::with_capacity(sorted.len());
    for c in sorted {
        if out.last() == Some(&c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

impl MacaulayMatrix {
    /// Variables of the underlying system.
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `r_Mac`.
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// `c_Mac`.
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// `s_Mac`.
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `(equation index, multiplier)` of each row.
    pub fn labels(&self) -> &[(usize, Monomial)] {
        &self.labels
    }

    /// Column monomials in order.
    pub fn columns(&self) -> Vec<Monomial> {
        DrlOrder::new(self.n).monomials_desc(self.degree)
    }

    pub fn to_dense(&self) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![false; self.n_cols];
                for &c in row {
                    dense[c as usize] = true;
                }
                dense
            })
            .collect()
    }

    /// Writes the `r c` header and one `row col` line per nonzero entry.
    pub fn write_triplets<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{} {}", self.n_rows(), self.n_cols())?;
        for (r, row) in self.rows.iter().enumerate() {
            for &c in row {
                writeln!(out, "{r} {c}")?;
            }
        }
        Ok(())
    }
}

/// Reads the triplet format back as `(r, c, rows)` with sorted rows.
pub fn read_triplets<R: BufRead>(input: R) -> Result<(usize, usize, Vec<Vec<u32>>), MacaulayError> {
    let mut lines = input.lines().enumerate();
    let parse_pair = |line_no: usize, line: &str| -> Result<(usize, usize), MacaulayError> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(MacaulayError::Triplet {
                line: line_no + 1,
                message: format!("expected two integers, got {line:?}"),
            }),
        }
    };
    let (r, c) = match lines.next() {
        Some((i, line)) => {
            parse_pair(i, &line.map_err(|e| MacaulayError::Triplet { line: 1, message: e.to_string() })?)?
        }
        None => return Err(MacaulayError::Triplet { line: 1, message: "missing header".into() }),
    };
    let mut rows = vec![Vec::new(); r];
    for (i, line) in lines {
        let line = line.map_err(|e| MacaulayError::Triplet { line: i + 1, message: e.to_string() })?;
        if line.trim().is_empty() {
            continue;
        }
        let (row, col) = parse_pair(i, &line)?;
        if row >= r || col >= c {
            return Err(MacaulayError::Triplet {
                line: i + 1,
                message: format!("entry ({row}, {col}) outside {r}x{c}"),
            });
        }
        rows[row].push(col as u32);
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    Ok((r, c, rows))
}
