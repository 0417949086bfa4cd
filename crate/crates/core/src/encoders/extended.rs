use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;

use super::{digits_value, small_value, value_digits, Grassmannian};
use crate::error::Result;
use crate::linalg::{Matrix, Subspace};

impl Grassmannian {
    /// Ind_2: the index in the extended-representation order.
    ///
    /// Walking columns right to left with `w` pivots seen so far, the members
    /// sharing the first j columns number `[n-j, k-w]_q`. A pivot column
    /// outranks all `q^{k-w}` non-pivot columns; a non-pivot column outranks
    /// those whose top `k-w` entries form a smaller base-q number (the bottom
    /// `w` entries are forced to zero).
    pub fn encode_extended(&self, x: &Subspace) -> Result<BigUint> {
        self.check(x)?;
        let (n, k) = (self.n, self.k);
        let re = x.rref();
        let idvec = x.identifying_vector();
        let mut index = BigUint::default();
        let mut w = 0;
        for j in 1..=n {
            let c = n - j;
            let free = k - w;
            if idvec[c] {
                index += self.gauss.scaled(n - j, free);
                w += 1;
            } else if free > 0 {
                debug_assert!((free..k).all(|r| re.get(r, c) == 0));
                let completions = self.gauss.get(n - j, free);
                let top = (0..free).map(|r| re.get(r, c));
                match small_value(top.clone(), self.q()) {
                    Some(v) => index += completions * v,
                    None => index += digits_value(&top.collect::<Vec<_>>(), self.q()) * completions,
                }
            }
        }
        Ok(index)
    }

    pub fn decode_extended(&self, index: &BigUint) -> Result<Subspace> {
        self.check_index(index)?;
        let (n, k) = (self.n, self.k);
        let mut re = Matrix::zeros(k, n);
        let mut rest = index.clone();
        let mut w = 0;
        for j in 1..=n {
            if w >= k {
                break;
            }
            let c = n - j;
            let free = k - w;
            let completions = self.gauss.get(n - j, free);
            let pivot_offset = self.gauss.scaled(n - j, free);
            if &rest >= pivot_offset {
                rest -= pivot_offset;
                re.set(free - 1, c, 1);
                w += 1;
            } else {
                let (val, r) = rest.div_rem(completions);
                rest = r;
                for (row, d) in value_digits(&val, self.q(), free).into_iter().enumerate() {
                    re.set(row, c, d);
                }
            }
        }
        debug_assert_eq!(w, k);
        Ok(Subspace::from_rref_unchecked(re, self.q()))
    }

    /// Compares EXT(X) and EXT(Y) at the rightmost column where they differ.
    pub fn compare_extended(&self, x: &Subspace, y: &Subspace) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        let (ex, ey) = (x.extended(), y.extended());
        for j in 1..=self.n {
            match ex.column_value(j).cmp(&ey.column_value(j)) {
                Ordering::Equal => continue,
                other => return Ok(other),
            }
        }
        Ok(Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_ext(rows: [[u8; 6]; 4]) -> Subspace {
        let s = Subspace::from_rref(Matrix::from_rows(&rows[1..]).unwrap(), 2).unwrap();
        let expect: Vec<bool> = rows[0].iter().map(|&b| b == 1).collect();
        assert_eq!(s.identifying_vector(), expect.as_slice());
        s
    }

    fn example_928() -> Subspace {
        from_ext([
            [0, 1, 0, 1, 1, 0],
            [0, 1, 1, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 1],
        ])
    }

    #[test]
    fn worked_index_928() {
        let g = Grassmannian::new(6, 3, 2).unwrap();
        let x = example_928();
        let expected = 5 * 155 + 8 * 15 + 4 * 7 + 3 + 2;
        assert_eq!(expected, 928);
        assert_eq!(g.encode_extended(&x).unwrap(), BigUint::from(928u32));
        assert_eq!(g.decode_extended(&BigUint::from(928u32)).unwrap(), x);
    }

    #[test]
    fn worked_pair_order() {
        let g = Grassmannian::new(6, 3, 2).unwrap();
        let x = from_ext([
            [1, 1, 1, 0, 0, 0],
            [1, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
        ]);
        let y = from_ext([
            [1, 1, 0, 0, 1, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ]);
        assert_eq!(g.compare_extended(&x, &y).unwrap(), Ordering::Less);
        assert_eq!(g.compare_extended(&y, &x).unwrap(), Ordering::Greater);
        assert_eq!(g.compare_extended(&x, &x).unwrap(), Ordering::Equal);
        assert!(g.encode_extended(&x).unwrap() < g.encode_extended(&y).unwrap());
    }

    #[test]
    fn zero_index_is_leading_unit() {
        for (n, k, q) in [(6, 3, 2), (5, 2, 3), (7, 1, 4)] {
            let g = Grassmannian::new(n, k, q).unwrap();
            assert_eq!(g.encode_extended(&g.first()).unwrap(), BigUint::default());
            assert_eq!(g.decode_extended(&BigUint::default()).unwrap(), g.first());
        }
    }

    #[test]
    fn last_index_decodes() {
        let g = Grassmannian::new(6, 3, 2).unwrap();
        let last = g.total() - 1u32;
        let x = g.decode_extended(&last).unwrap();
        // all pivots at the right end
        assert_eq!(x.pivots(), &[3, 4, 5]);
        assert_eq!(g.encode_extended(&x).unwrap(), last);
        assert!(g.decode_extended(g.total()).is_err());
    }
}
