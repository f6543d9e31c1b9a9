//! Text format for polynomial systems.
//!
//! ```text
//! # comment lines start with '#'
//! 3 2
//! x1*x2 + x3 + 1
//! x2*x3 + x1
//! ```
//!
//! The first non-comment line holds `n m`; exactly `m` polynomial lines
//! follow. A term is `1`, `xI` or `xI*xJ` with `1 <= I, J <= n`; repeated
//! terms cancel. Blank lines are ignored, and `0` denotes the zero
//! polynomial (the serializer writes it for polynomials without terms).

use super::{BooleanPolynomial, Monomial, MqError, PolynomialSystem, MAX_VARS};

pub fn parse_system(text: &str) -> Result<PolynomialSystem, MqError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });

    let (header_line, header) =
        lines.next().ok_or(MqError::Syntax { line: 1, column: 1, message: "missing `n m` header".into() })?;
    let (n, m) = parse_header(header_line, header)?;

    let mut polys = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if polys.len() == m {
            return Err(MqError::EquationCount { expected: m, found: polys.len() + 1, line: line_no });
        }
        polys.push(parse_polynomial(line_no, line, n)?);
    }
    if polys.len() != m {
        return Err(MqError::EquationCount { expected: m, found: polys.len(), line: text.lines().count().max(1) });
    }
    PolynomialSystem::new(n, polys)
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize), MqError> {
    let mut fields = line.split_whitespace();
    let mut number = |what: &str| -> Result<usize, MqError> {
        let tok = fields.next().ok_or_else(|| MqError::Syntax {
            line: line_no,
            column: line.len() + 1,
            message: format!("header is missing {what}"),
        })?;
        tok.parse::<usize>().map_err(|_| MqError::Syntax {
            line: line_no,
            column: column_of(line, tok),
            message: format!("expected {what}, found `{tok}`"),
        })
    };
    let n = number("the variable count n")?;
    let m = number("the equation count m")?;
    if let Some(extra) = fields.next() {
        return Err(MqError::Syntax {
            line: line_no,
            column: column_of(line, extra),
            message: format!("unexpected `{extra}` after `n m`"),
        });
    }
    if n > MAX_VARS {
        return Err(MqError::TooManyVariables(n));
    }
    Ok((n, m))
}

/// 1-based column of `sub`, which must be a subslice of `line`.
fn column_of(line: &str, sub: &str) -> usize {
    sub.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_polynomial(line_no: usize, line: &str, n: usize) -> Result<BooleanPolynomial, MqError> {
    let mut terms = Vec::new();
    for raw in line.split('+') {
        let term = raw.trim();
        let column = column_of(line, raw) + (raw.len() - raw.trim_start().len());
        if term.is_empty() {
            return Err(MqError::Syntax { line: line_no, column, message: "empty term".into() });
        }
        match term {
            "1" => terms.push(Monomial::ONE),
            "0" => {}
            _ => terms.push(parse_product(line_no, line, term, n)?),
        }
    }
    Ok(BooleanPolynomial::from_terms(n, terms))
}

fn parse_product(line_no: usize, line: &str, term: &str, n: usize) -> Result<Monomial, MqError> {
    let factors: Vec<&str> = term.split('*').collect();
    if factors.len() > 2 {
        return Err(MqError::DegreeTooHigh { line: line_no, column: column_of(line, term) });
    }
    let mut mono = Monomial::ONE;
    for raw in factors {
        let factor = raw.trim();
        let column = column_of(line, raw) + (raw.len() - raw.trim_start().len());
        let index = factor
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| MqError::Syntax {
                line: line_no,
                column,
                message: format!("expected `1` or a variable `xI`, found `{factor}`"),
            })?;
        if index == 0 || index > n {
            return Err(MqError::VariableOutOfRange { line: line_no, column, index, n });
        }
        mono = mono * Monomial::var(index - 1);
    }
    Ok(mono)
}
