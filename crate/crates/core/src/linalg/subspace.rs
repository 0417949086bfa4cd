use num_bigint::BigUint;

use super::ferrers::{vector_to_diagram, FerrersDiagram, FerrersTableaux};
use super::{packed, rank, rref, Matrix};
use crate::error::{Error, Result};
use crate::field::{Element, FieldTable};

/// A k-dimensional subspace of F_q^n, held as its unique RREF generator
/// matrix together with the identifying vector (pivot columns, left to right).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    k: usize,
    q: u32,
    re: Matrix,
    idvec: Vec<bool>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the rows of `m`, of whatever dimension they span.
    pub fn from_generators(m: &Matrix, f: &FieldTable) -> Result<Self> {
        m.check_entries(f.order())?;
        let (re, _) = rref(m, f);
        Ok(Self::from_rref_unchecked(re, f.order()))
    }

    /// Like [`Subspace::from_generators`] but the rows must be independent.
    pub fn from_basis(m: &Matrix, f: &FieldTable) -> Result<Self> {
        let s = Self::from_generators(m, f)?;
        if s.k != m.rows() {
            return Err(Error::RankDeficient {
                expected: m.rows(),
                rank: s.k,
            });
        }
        Ok(s)
    }

    /// Wraps a matrix that must already be in RREF with full row rank.
    pub fn from_rref(re: Matrix, q: u32) -> Result<Self> {
        re.check_entries(q)?;
        if !re.is_rref() {
            return Err(Error::Precondition("matrix is not in RREF".into()));
        }
        Ok(Self::from_rref_unchecked(re, q))
    }

    pub(crate) fn from_rref_unchecked(re: Matrix, q: u32) -> Self {
        let n = re.cols();
        let pivots: Vec<usize> = re
            .row_iter()
            .map(|r| r.iter().position(|&e| e != 0).expect("no zero rows"))
            .collect();
        let mut idvec = vec![false; n];
        for &p in &pivots {
            idvec[p] = true;
        }
        debug_assert!(re.is_rref());
        Subspace {
            n,
            k: re.rows(),
            q,
            re,
            idvec,
            pivots,
        }
    }

    /// The subspace spanned by the first k unit vectors, RREF `[I_k | 0]`.
    pub fn leading_unit(n: usize, k: usize, q: u32) -> Self {
        assert!(k <= n);
        let mut re = Matrix::zeros(k, n);
        for i in 0..k {
            re.set(i, i, 1);
        }
        Self::from_rref_unchecked(re, q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rref(&self) -> &Matrix {
        &self.re
    }

    /// v(X), stored left to right.
    pub fn identifying_vector(&self) -> &[bool] {
        &self.idvec
    }

    /// Pivot columns, left to right, 0-based.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn extended(&self) -> ExtendedRep<'_> {
        ExtendedRep { sub: self }
    }

    pub fn ferrers_diagram(&self) -> FerrersDiagram {
        vector_to_diagram(&self.idvec, self.k).expect("identifying vector has weight k")
    }

    /// Reads the entries of RE(X) at the dots of EF(v(X)). Dots are numbered
    /// by diagram column right to left and top to bottom inside a column.
    pub fn tableaux(&self) -> FerrersTableaux {
        let diagram = self.ferrers_diagram();
        let mut entries = Vec::with_capacity(diagram.size());
        for c in (0..self.n).rev().filter(|&c| !self.idvec[c]) {
            for (i, &p) in self.pivots.iter().enumerate() {
                if p > c {
                    break;
                }
                entries.push(self.re.get(i, c));
            }
        }
        FerrersTableaux::new(diagram, entries).expect("entry count matches the diagram")
    }

    /// Places tableau entries into the echelon Ferrers form they describe.
    pub fn from_tableaux(t: &FerrersTableaux, q: u32) -> Result<Self> {
        if let Some(&e) = t.entries().iter().find(|&&e| e as u32 >= q) {
            return Err(Error::ElementOutOfRange { value: e as u32, q });
        }
        let diagram = t.diagram();
        let (n, k) = (diagram.n(), diagram.k());
        let idvec = super::ferrers::diagram_to_vector(diagram);
        let pivots: Vec<usize> = (0..n).filter(|&c| idvec[c]).collect();
        let mut re = Matrix::zeros(k, n);
        for (i, &p) in pivots.iter().enumerate() {
            re.set(i, p, 1);
        }
        let mut next = t.entries().iter();
        for c in (0..n).rev().filter(|&c| !idvec[c]) {
            for (i, &p) in pivots.iter().enumerate() {
                if p > c {
                    break;
                }
                re.set(i, c, *next.next().expect("diagram size matches entries"));
            }
        }
        Ok(Subspace {
            n,
            k,
            q,
            re,
            idvec,
            pivots,
        })
    }

    pub(crate) fn packed_rows(&self) -> Vec<u64> {
        packed::pack_rows(&self.re)
    }

    pub(crate) fn check_params(&self, n: usize, k: usize, q: u32) -> Result<()> {
        if (self.n, self.k, self.q) != (n, k, q) {
            return Err(Error::ParamMismatch {
                expected: format!("(n,k,q)=({n},{k},{q})"),
                got: format!("({},{},{})", self.n, self.k, self.q),
            });
        }
        Ok(())
    }
}

/// One column of EXT(X): the identifying bit over the RREF column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtColumn {
    pub pivot: bool,
    /// Entries top to bottom.
    pub entries: Vec<Element>,
}

/// The (k+1) x n extended representation. Columns are addressed with the
/// right-to-left index `j` in `1..=n`, column 1 being the rightmost.
#[derive(Clone, Copy, Debug)]
pub struct ExtendedRep<'a> {
    sub: &'a Subspace,
}

impl ExtendedRep<'_> {
    pub fn column(&self, j: usize) -> ExtColumn {
        assert!(
            (1..=self.sub.n).contains(&j),
            "column index {j} out of 1..={}",
            self.sub.n
        );
        let c = self.sub.n - j;
        ExtColumn {
            pivot: self.sub.idvec[c],
            entries: (0..self.sub.k).map(|r| self.sub.re.get(r, c)).collect(),
        }
    }

    /// The column read as a base-q integer, identifying bit most significant,
    /// then the RREF rows top to bottom.
    pub fn column_value(&self, j: usize) -> BigUint {
        let col = self.column(j);
        let mut digits = Vec::with_capacity(self.sub.k + 1);
        digits.push(col.pivot as u8);
        digits.extend(col.entries);
        BigUint::from_radix_be(&digits, self.sub.q).expect("digits below radix")
    }

    /// Stored left to right, like every other matrix.
    pub fn to_matrix(&self) -> Matrix {
        let s = self.sub;
        let mut m = Matrix::zeros(s.k + 1, s.n);
        for c in 0..s.n {
            m.set(0, c, s.idvec[c] as Element);
            for r in 0..s.k {
                m.set(r + 1, c, s.re.get(r, c));
            }
        }
        m
    }
}

/// d(X, Y) = dim X + dim Y - 2 dim(X ∩ Y) = 2 rank[X; Y] - dim X - dim Y.
pub fn subspace_distance(x: &Subspace, y: &Subspace, f: &FieldTable) -> Result<usize> {
    if x.n != y.n || x.q != y.q || x.q != f.order() {
        return Err(Error::ParamMismatch {
            expected: format!("n={} over F_{}", x.n, x.q),
            got: format!("n={} over F_{} (field F_{})", y.n, y.q, f.order()),
        });
    }
    let r = if x.q == 2 && x.n <= 64 {
        packed::stacked_rank(&x.packed_rows(), &y.packed_rows())
    } else {
        rank(&x.re.stack(&y.re)?, f)
    };
    Ok(2 * r - x.k - y.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldTable {
        FieldTable::new(2).unwrap()
    }

    fn running_example() -> Subspace {
        let m = Matrix::from_rows(&[
            [1, 0, 1, 1, 0, 0, 0],
            [0, 0, 1, 0, 1, 0, 1],
            [1, 0, 0, 0, 1, 1, 0],
        ])
        .unwrap();
        Subspace::from_basis(&m, &f2()).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn identifying_vector_of_running_example() {
        assert_eq!(
            running_example().identifying_vector(),
            bits("1011000").as_slice()
        );
        assert_eq!(
            Subspace::leading_unit(5, 2, 2).identifying_vector(),
            bits("11000").as_slice()
        );
    }

    #[test]
    fn identifying_vector_of_y() {
        let re = Matrix::from_rows(&[[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0]])
            .unwrap();
        let y = Subspace::from_rref(re, 2).unwrap();
        assert_eq!(y.identifying_vector(), bits("110010").as_slice());
    }

    #[test]
    fn extended_matrix_stacks_idvec() {
        let x = running_example();
        let ext = x.extended().to_matrix();
        assert_eq!(
            ext.to_rows(),
            vec![
                vec![1, 0, 1, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 0, 1, 0, 1, 0, 1],
                vec![0, 0, 0, 1, 0, 1, 1],
            ]
        );
        // column 1 is the rightmost
        let c1 = x.extended().column(1);
        assert!(!c1.pivot);
        assert_eq!(c1.entries, vec![0, 1, 1]);
        assert_eq!(x.extended().column_value(1), BigUint::from(3u32));
        assert_eq!(x.extended().column_value(7), BigUint::from(12u32));
    }

    #[test]
    fn tableaux_of_running_example() {
        let x = running_example();
        let t = x.tableaux();
        assert_eq!(t.diagram().cols(), &[1, 3, 3, 3]);
        assert_eq!(
            t.rows_display(),
            vec![vec![0, 1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
        );
        assert_eq!(t.entries(), &[0, 1, 1, 1, 0, 1, 1, 1, 0, 0]);
        assert_eq!(Subspace::from_tableaux(&t, 2).unwrap(), x);
    }

    #[test]
    fn tableaux_numbering_matches_worked_z() {
        let re = Matrix::from_rows(&[[1, 1, 0, 1, 0, 1], [0, 0, 1, 1, 0, 1], [0, 0, 0, 0, 1, 0]])
            .unwrap();
        let z = Subspace::from_rref(re, 2).unwrap();
        assert_eq!(z.tableaux().entries(), &[1, 1, 0, 1, 1, 1]);
        assert_eq!(
            z.tableaux().rows_display(),
            vec![vec![1, 1, 1], vec![1, 1], vec![0]]
        );
    }

    #[test]
    fn leading_unit_has_zero_full_tableaux() {
        let x = Subspace::leading_unit(6, 2, 3);
        let t = x.tableaux();
        assert_eq!(t.diagram().cols(), &[2, 2, 2, 2]);
        assert!(t.entries().iter().all(|&e| e == 0));
    }

    #[test]
    fn tableaux_rejects_out_of_field_entries() {
        let t = Subspace::leading_unit(4, 2, 2).tableaux();
        let bad = FerrersTableaux::new(t.diagram().clone(), vec![0, 0, 2, 0]).unwrap();
        assert!(matches!(
            Subspace::from_tableaux(&bad, 2),
            Err(Error::ElementOutOfRange { value: 2, q: 2 })
        ));
    }

    #[test]
    fn degenerate_dimensions() {
        let f = f2();
        let empty = Subspace::from_generators(&Matrix::zeros(2, 5), &f).unwrap();
        assert_eq!(empty.k(), 0);
        assert_eq!(empty.tableaux().entries().len(), 0);
        assert_eq!(
            Subspace::from_tableaux(&empty.tableaux(), 2).unwrap(),
            empty
        );
        let whole = Subspace::leading_unit(4, 4, 2);
        assert_eq!(whole.ferrers_diagram().size(), 0);
        assert_eq!(
            Subspace::from_tableaux(&whole.tableaux(), 2).unwrap(),
            whole
        );
    }

    #[test]
    fn basis_must_be_independent() {
        let m = Matrix::from_rows(&[[1, 1, 0], [1, 1, 0]]).unwrap();
        assert_eq!(
            Subspace::from_basis(&m, &f2()).unwrap_err(),
            Error::RankDeficient {
                expected: 2,
                rank: 1
            }
        );
    }

    #[test]
    fn distance_basics() {
        let f = f2();
        let x = Subspace::from_rref(Matrix::from_rows(&[[1, 0, 0, 0], [0, 1, 0, 0]]).unwrap(), 2)
            .unwrap();
        let y = Subspace::from_rref(Matrix::from_rows(&[[0, 0, 1, 0], [0, 0, 0, 1]]).unwrap(), 2)
            .unwrap();
        assert_eq!(subspace_distance(&x, &x, &f).unwrap(), 0);
        assert_eq!(subspace_distance(&x, &y, &f).unwrap(), 4);
        let other = Subspace::leading_unit(5, 2, 2);
        assert!(subspace_distance(&x, &other, &f).is_err());
        let f3 = FieldTable::new(3).unwrap();
        let a = Subspace::leading_unit(4, 2, 3);
        let b = Subspace::from_rref(Matrix::from_rows(&[[1, 0, 0, 2], [0, 0, 1, 0]]).unwrap(), 3)
            .unwrap();
        assert_eq!(subspace_distance(&a, &b, &f3).unwrap(), 4);
        let c = Subspace::from_rref(Matrix::from_rows(&[[1, 0, 0, 2], [0, 1, 0, 0]]).unwrap(), 3)
            .unwrap();
        assert_eq!(subspace_distance(&a, &c, &f3).unwrap(), 2);
    }
}
