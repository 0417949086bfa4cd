//! Brute-force references that share no code with the library beyond the
//! `Subspace` container. Arithmetic is mod q, so only prime q is supported.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::HashSet;

use grasscode::{Matrix, Scheme, Subspace};

fn is_rref(rows: &[Vec<u8>]) -> bool {
    let mut last: Option<usize> = None;
    for (i, row) in rows.iter().enumerate() {
        let Some(p) = row.iter().position(|&e| e != 0) else {
            return false;
        };
        if row[p] != 1 || last.is_some_and(|l| p <= l) {
            return false;
        }
        if rows
            .iter()
            .enumerate()
            .any(|(r, other)| r != i && other[p] != 0)
        {
            return false;
        }
        last = Some(p);
    }
    true
}

/// Every k x n matrix over Z_q that is in RREF with k nonzero rows.
pub fn all_subspaces(n: usize, k: usize, q: u32) -> Vec<Subspace> {
    let cells = n * k;
    let total = (q as u64).pow(cells as u32);
    let mut out = Vec::new();
    let mut digits = vec![0u8; cells];
    for _ in 0..total {
        let rows: Vec<Vec<u8>> = digits.chunks(n).map(<[u8]>::to_vec).collect();
        if is_rref(&rows) {
            let m = if k == 0 {
                Matrix::zeros(0, n)
            } else {
                Matrix::from_rows(&rows).unwrap()
            };
            out.push(Subspace::from_rref(m, q).unwrap());
        }
        for d in digits.iter_mut() {
            *d += 1;
            if u32::from(*d) < q {
                break;
            }
            *d = 0;
        }
    }
    out
}

pub fn span(x: &Subspace) -> HashSet<Vec<u8>> {
    let (n, k, q) = (x.n(), x.k(), x.q());
    let mut out = HashSet::new();
    let mut coeffs = vec![0u32; k];
    loop {
        let mut v = vec![0u32; n];
        for (c, row) in coeffs.iter().zip(x.rref().row_iter()) {
            for (acc, &e) in v.iter_mut().zip(row) {
                *acc = (*acc + c * u32::from(e)) % q;
            }
        }
        out.insert(v.into_iter().map(|e| e as u8).collect());
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// dim X + dim Y - 2 dim(X ∩ Y), with the intersection counted element-wise.
pub fn distance(x: &Subspace, y: &Subspace) -> usize {
    let common = span(x).intersection(&span(y)).count();
    let mut dim = 0;
    while (x.q() as usize).pow(dim as u32) < common {
        dim += 1;
    }
    x.k() + y.k() - 2 * dim
}

/// Columns right to left, each as (identifying bit, rows top to bottom).
pub fn extended_key(x: &Subspace) -> Vec<u8> {
    let n = x.n();
    let pivots = x.pivots();
    let mut key = Vec::with_capacity(n * (x.k() + 1));
    for c in (0..n).rev() {
        key.push(pivots.contains(&c) as u8);
        key.extend((0..x.k()).map(|r| x.rref().get(r, c)));
    }
    key
}

/// Dot counts of the non-pivot columns, right to left.
pub fn column_heights(x: &Subspace) -> Vec<usize> {
    let pivots = x.pivots();
    (0..x.n())
        .rev()
        .filter(|c| !pivots.contains(c))
        .map(|c| pivots.iter().filter(|&&p| p < c).count())
        .collect()
}

pub fn diagram_size(x: &Subspace) -> usize {
    column_heights(x).iter().sum()
}

/// Larger diagrams first, then more dots in the rightmost differing column,
/// then the tableau entries read column by column from the right.
pub fn ferrers_key(x: &Subspace) -> (Reverse<usize>, Vec<Reverse<usize>>, Vec<u8>) {
    let heights = column_heights(x);
    let pivots = x.pivots();
    let mut entries = Vec::new();
    for c in (0..x.n()).rev().filter(|c| !pivots.contains(c)) {
        for r in 0..pivots.iter().filter(|&&p| p < c).count() {
            entries.push(x.rref().get(r, c));
        }
    }
    (
        Reverse(heights.iter().sum()),
        heights.into_iter().map(Reverse).collect(),
        entries,
    )
}

pub fn sorted(mut all: Vec<Subspace>, scheme: Scheme) -> Vec<Subspace> {
    match scheme {
        Scheme::Ferrers => all.sort_by_key(ferrers_key),
        Scheme::Extended => all.sort_by_key(extended_key),
        Scheme::Hybrid(_) => panic!("no single key for the hybrid order"),
    }
    all
}

/// Greedy code over an explicit list, in list order.
pub fn greedy(list: &[Subspace], d: usize) -> Vec<Subspace> {
    let mut code: Vec<Subspace> = Vec::new();
    for x in list {
        if code.iter().all(|c| distance(x, c) >= d) {
            code.push(x.clone());
        }
    }
    code
}

/// Members of `all` with at least `t` dots that come after `x` in extended
/// order.
pub fn succeeding_large(all: &[Subspace], x: &Subspace, t: usize) -> usize {
    let kx = extended_key(x);
    all.iter()
        .filter(|y| diagram_size(y) >= t && extended_key(y) > kx)
        .count()
}

pub fn matrix(rows: &[&[u8]]) -> Matrix {
    Matrix::from_rows(rows).unwrap()
}
