//! Plain-text subspace format.
//!
//! ```text
//! n k q
//! <k rows of n whitespace-separated integers>
//! ```
//!
//! Rows may be any basis. Blank lines and lines starting with `#` are
//! skipped, so several subspaces can follow each other in one stream.

use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::linalg::{Matrix, Subspace};

fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers<T: std::str::FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::Parse(format!("line {line_no}: bad integer {tok:?}")))
        })
        .collect()
}

/// Parses every subspace in the stream.
pub fn parse_subspaces(input: &str) -> Result<Vec<Subspace>> {
    let mut lines = content_lines(input);
    let mut out = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let h: Vec<usize> = parse_numbers(line_no, header)?;
        let [n, k, q] = h[..] else {
            return Err(Error::Parse(format!(
                "line {line_no}: header must be \"n k q\", got {header:?}"
            )));
        };
        if k > n {
            return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
        }
        let field = FieldTable::new(u32::try_from(q).unwrap_or(u32::MAX))?;
        let mut rows = Vec::with_capacity(k);
        for r in 0..k {
            let (row_no, line) = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {k} rows, found {r}")))?;
            let row: Vec<u32> = parse_numbers(row_no, line)?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "line {row_no}: expected {n} entries, found {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= q as u32) {
                return Err(Error::ElementOutOfRange {
                    value: bad,
                    q: q as u32,
                });
            }
            rows.push(row.into_iter().map(|e| e as u8).collect::<Vec<u8>>());
        }
        let m = if k == 0 {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_rows(&rows)?
        };
        out.push(Subspace::from_basis(&m, &field)?);
    }
    Ok(out)
}

/// Parses exactly one subspace.
pub fn parse_subspace(input: &str) -> Result<Subspace> {
    let mut all = parse_subspaces(input)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Parse("no subspace in input".into())),
        m => Err(Error::Parse(format!("expected one subspace, found {m}"))),
    }
}

fn join(row: &[u8]) -> String {
    row.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

/// The canonical text form: header then the RREF rows.
pub fn format_subspace(x: &Subspace) -> String {
    let mut s = format!("{} {} {}\n", x.n(), x.k(), x.q());
    for row in x.rref().row_iter() {
        s.push_str(&join(row));
        s.push('\n');
    }
    s
}

/// One subspace on a single line: the k*n RREF entries, row-major.
pub fn format_codeword(x: &Subspace) -> String {
    x.rref().row_iter().map(join).collect::<Vec<_>>().join(" ")
}

pub fn parse_codeword(line: &str, n: usize, k: usize, q: u32) -> Result<Subspace> {
    let entries: Vec<u32> = parse_numbers(0, line)?;
    if entries.len() != n * k {
        return Err(Error::Parse(format!(
            "codeword has {} entries, expected {}",
            entries.len(),
            n * k
        )));
    }
    let mut m = Matrix::zeros(k, n);
    for (i, &e) in entries.iter().enumerate() {
        if e >= q {
            return Err(Error::ElementOutOfRange { value: e, q });
        }
        m.set(i / n, i % n, e as u8);
    }
    Subspace::from_rref(m, q)
}
