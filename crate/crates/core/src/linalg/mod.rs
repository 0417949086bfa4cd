//! Dense matrices over F_q, row reduction, and the subspace representations
//! built on top of the reduced row echelon form.

mod ferrers;
pub mod packed;
mod subspace;

pub use ferrers::{diagram_to_vector, vector_to_diagram, FerrersDiagram, FerrersTableaux};
pub use subspace::{subspace_distance, ExtColumn, ExtendedRep, Subspace};

use crate::error::{Error, Result};
use crate::field::{Element, FieldTable};

/// Dense row-major matrix. Columns are stored left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from explicit rows. An empty row list needs `cols`
    /// separately, see [`Matrix::zeros`].
    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Element {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Element) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Element] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Element]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.row_iter().map(<[Element]>::to_vec).collect()
    }

    /// Fails if an entry is not an element of F_q.
    pub fn check_entries(&self, q: u32) -> Result<()> {
        match self.data.iter().find(|&&e| e as u32 >= q) {
            Some(&e) => Err(Error::ElementOutOfRange { value: e as u32, q }),
            None => Ok(()),
        }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ParamMismatch {
                expected: format!("{} columns", self.cols),
                got: format!("{} columns", other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Whether the matrix satisfies the RREF conditions with no zero rows.
    pub fn is_rref(&self) -> bool {
        let mut last: Option<usize> = None;
        for r in 0..self.rows {
            let Some(p) = self.row(r).iter().position(|&e| e != 0) else {
                return false;
            };
            if last.is_some_and(|l| p <= l) || self.get(r, p) != 1 {
                return false;
            }
            if (0..self.rows).any(|o| o != r && self.get(o, p) != 0) {
                return false;
            }
            last = Some(p);
        }
        true
    }
}

/// Gauss-Jordan elimination. Returns the reduced row echelon form with zero
/// rows dropped, together with the rank.
pub fn rref(m: &Matrix, f: &FieldTable) -> (Matrix, usize) {
    let mut a = m.clone();
    let mut rank = 0;
    for c in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(pr) = (rank..a.rows).find(|&r| a.get(r, c) != 0) else {
            continue;
        };
        a.swap_rows(rank, pr);
        let inv = f.inv(a.get(rank, c)).expect("pivot is nonzero");
        if inv != 1 {
            for cc in c..a.cols {
                let v = f.mul(a.get(rank, cc), inv);
                a.set(rank, cc, v);
            }
        }
        for r in 0..a.rows {
            let factor = a.get(r, c);
            if r == rank || factor == 0 {
                continue;
            }
            for cc in c..a.cols {
                let v = f.sub(a.get(r, cc), f.mul(factor, a.get(rank, cc)));
                a.set(r, cc, v);
            }
        }
        rank += 1;
    }
    a.data.truncate(rank * a.cols);
    a.rows = rank;
    (a, rank)
}

pub fn rank(m: &Matrix, f: &FieldTable) -> usize {
    if f.order() == 2 && m.cols() <= 64 {
        let mut rows = packed::pack_rows(m);
        return packed::rank(&mut rows);
    }
    rref(m, f).1
}
