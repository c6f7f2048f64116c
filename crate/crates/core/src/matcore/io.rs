//! Matrix text format shared with the CLI.
//!
//! Line 1 holds the dimension `n`, followed by `n` lines of `n`
//! whitespace-separated entries. A real entry is a bare decimal, a complex
//! entry is `re,im`. Printing uses shortest-representation scientific
//! notation, so write/parse round-trips are exact.

use super::{ComplexMatrix, RealMatrix};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt::Write as _;

/// A parsed matrix: real if no entry carried an imaginary part.
#[derive(Clone, Debug)]
pub enum ParsedMatrix {
    Real(RealMatrix),
    Complex(ComplexMatrix),
}

impl ParsedMatrix {
    pub fn into_complex(self) -> ComplexMatrix {
        match self {
            ParsedMatrix::Real(r) => ComplexMatrix::from_real(&r),
            ParsedMatrix::Complex(c) => c,
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<ParsedMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad dimension line: {e}")))?;
    if n == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }
    let mut entries: Vec<Complex64> = Vec::with_capacity(n * n);
    let mut any_complex = false;
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != n {
            return Err(Error::Parse(format!(
                "row {i}: expected {n} entries, found {}",
                toks.len()
            )));
        }
        for tok in toks {
            let z = if let Some((re, im)) = tok.split_once(',') {
                any_complex = true;
                Complex64::new(parse_f64(re)?, parse_f64(im)?)
            } else {
                Complex64::new(parse_f64(tok)?, 0.0)
            };
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite);
            }
            entries.push(z);
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after matrix rows".into()));
    }
    if any_complex {
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, entries[i * n + j]);
            }
        }
        Ok(ParsedMatrix::Complex(m))
    } else {
        let mut m = RealMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, entries[i * n + j].re);
            }
        }
        Ok(ParsedMatrix::Real(m))
    }
}

fn parse_f64(tok: &str) -> Result<f64> {
    tok.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad number {tok:?}: {e}")))
}

pub fn format_complex_matrix(a: &ComplexMatrix) -> String {
    let n = a.n();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let z = a.get(i, j);
            let _ = write!(out, "{:e},{:e}", z.re, z.im);
        }
        out.push('\n');
    }
    out
}

pub fn format_real_matrix(a: &RealMatrix) -> String {
    let n = a.n();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:e}", a.get(i, j));
        }
        out.push('\n');
    }
    out
}
