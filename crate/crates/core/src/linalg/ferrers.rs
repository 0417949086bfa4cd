use crate::error::{Error, Result};
use crate::field::Element;

/// A Ferrers diagram inside a k x (n-k) box, stored as its column heights
/// `(F_{n-k}, ..., F_1)`: columns are numbered right to left, so `cols()`
/// lists the leftmost column first and `column(1)` is the rightmost one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersDiagram {
    k: usize,
    cols: Vec<usize>,
}

impl FerrersDiagram {
    /// `cols` is `(F_{n-k}, ..., F_1)`; heights must be at most `k` and must
    /// not increase going left.
    pub fn new(k: usize, cols: Vec<usize>) -> Result<Self> {
        if let Some(&h) = cols.iter().find(|&&h| h > k) {
            return Err(Error::InvalidDiagram(format!(
                "column height {h} exceeds {k}"
            )));
        }
        if cols.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "column heights {cols:?} increase to the left"
            )));
        }
        Ok(FerrersDiagram { k, cols })
    }

    /// Builds a diagram from `(F_1, ..., F_{n-k})`, rightmost first.
    pub fn from_rightmost(k: usize, mut heights: Vec<usize>) -> Result<Self> {
        heights.reverse();
        Self::new(k, heights)
    }

    pub fn full(k: usize, width: usize) -> Self {
        FerrersDiagram {
            k,
            cols: vec![k; width],
        }
    }

    pub fn empty(k: usize, width: usize) -> Self {
        FerrersDiagram {
            k,
            cols: vec![0; width],
        }
    }

    /// Box height.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Box width, n - k.
    pub fn width(&self) -> usize {
        self.cols.len()
    }

    /// Ambient dimension n = k + width.
    pub fn n(&self) -> usize {
        self.k + self.cols.len()
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// F_i, 1-based from the right.
    pub fn column(&self, i: usize) -> usize {
        self.cols[self.cols.len() - i]
    }

    /// Column heights rightmost first, `(F_1, ..., F_{n-k})`.
    pub fn rightmost_first(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols.iter().rev().copied()
    }

    pub fn size(&self) -> usize {
        self.cols.iter().sum()
    }

    /// Dots per row, top to bottom, including empty rows (length k).
    pub fn row_counts(&self) -> Vec<usize> {
        (1..=self.k)
            .map(|i| self.cols.iter().filter(|&&h| h >= i).count())
            .collect()
    }
}

/// EF(v) for a weight-k vector `v` (left to right). Row i (0-based) holds
/// one dot per zero of `v` to the right of its pivot.
pub fn vector_to_diagram(v: &[bool], k: usize) -> Result<FerrersDiagram> {
    let weight = v.iter().filter(|&&b| b).count();
    if weight != k {
        return Err(Error::WrongWeight {
            expected: k,
            got: weight,
        });
    }
    // the i-th zero from the right has one dot per pivot to its left
    let mut ones_left = k;
    let mut rightmost = Vec::with_capacity(v.len() - k);
    for &bit in v.iter().rev() {
        if bit {
            ones_left -= 1;
        } else {
            rightmost.push(ones_left);
        }
    }
    FerrersDiagram::from_rightmost(k, rightmost)
}

/// Inverse of [`vector_to_diagram`]: pivot i (1-based) sits at position
/// n - (k - i) - rho_i, where rho_i is the i-th row count.
pub fn diagram_to_vector(f: &FerrersDiagram) -> Vec<bool> {
    let (n, k) = (f.n(), f.k());
    let mut v = vec![false; n];
    for (i, rho) in f.row_counts().into_iter().enumerate() {
        let pos = n - (k - (i + 1)) - rho;
        v[pos - 1] = true;
    }
    v
}

/// Field values written into the dots of a Ferrers diagram. Entries are
/// numbered by diagram column right to left, and top to bottom inside a
/// column, so `entries()[0]` is the top dot of the rightmost column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersTableaux {
    diagram: FerrersDiagram,
    entries: Vec<Element>,
}

impl FerrersTableaux {
    pub fn new(diagram: FerrersDiagram, entries: Vec<Element>) -> Result<Self> {
        if entries.len() != diagram.size() {
            return Err(Error::InvalidDiagram(format!(
                "{} entries for a diagram of size {}",
                entries.len(),
                diagram.size()
            )));
        }
        Ok(FerrersTableaux { diagram, entries })
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// The tableau as printed: one vector per row, entries left to right.
    pub fn rows_display(&self) -> Vec<Vec<Element>> {
        let mut offsets = Vec::with_capacity(self.diagram.width());
        let mut acc = 0;
        for h in self.diagram.rightmost_first() {
            offsets.push(acc);
            acc += h;
        }
        self.diagram
            .row_counts()
            .into_iter()
            .enumerate()
            .map(|(i, rho)| {
                (0..rho)
                    .rev()
                    .map(|r| self.entries[offsets[r] + i])
                    .collect()
            })
            .collect()
    }
}
