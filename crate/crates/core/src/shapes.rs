//! Counting Ferrers diagrams in a box, Gaussian coefficients, and the
//! lexicographic rank of a diagram among all diagrams of the same size.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumcode::{self, PrefixOracle};
use crate::error::{Error, Result};
use crate::linalg::FerrersDiagram;

/// Memo table for p(m, k, eta), the number of Ferrers diagrams of size m that
/// fit in a box with k rows and eta columns. Shared across threads.
#[derive(Debug, Default)]
pub struct PartitionCache {
    memo: Mutex<HashMap<(usize, usize, usize), BigUint>>,
}

impl PartitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// p(m, k, eta). Zero for m < 0 or m > k * eta.
    pub fn p_box(&self, m: i64, k: usize, eta: usize) -> BigUint {
        if m < 0 || m as u128 > (k as u128) * (eta as u128) {
            return BigUint::zero();
        }
        let mut memo = self.memo.lock().unwrap();
        p_rec(&mut memo, m as usize, k, eta)
    }

    /// alpha_l = p(l, k, eta) for l = 0..=k*eta.
    pub fn alpha(&self, k: usize, eta: usize) -> Vec<BigUint> {
        (0..=k * eta)
            .map(|l| self.p_box(l as i64, k, eta))
            .collect()
    }

    /// N_m(F_j, ..., F_1): diagrams of size m in the k x eta box whose j
    /// rightmost columns are `rightmost = [F_1, ..., F_j]`.
    pub fn n_m_count(&self, rightmost: &[usize], m: i64, k: usize, eta: usize) -> Result<BigUint> {
        if rightmost.len() > eta {
            return Err(Error::InvalidDiagram(format!(
                "{} columns given for a box of width {eta}",
                rightmost.len()
            )));
        }
        let mut prev = k;
        for &h in rightmost {
            if h > prev {
                return Err(Error::InvalidDiagram(format!(
                    "prefix {rightmost:?} is not non-increasing from {k}"
                )));
            }
            prev = h;
        }
        let used: usize = rightmost.iter().sum();
        Ok(self.p_box(m - used as i64, prev, eta - rightmost.len()))
    }

    /// ind_m(F): rank of `f` among diagrams of its own size in its box.
    /// In the least column (from the right) where two diagrams differ, the
    /// one with more dots comes first.
    pub fn ferrers_rank(&self, f: &FerrersDiagram) -> BigUint {
        let (k, eta) = (f.k(), f.width());
        let m = f.size() as i64;
        let mut index = BigUint::zero();
        let (mut prev, mut used) = (k, 0usize);
        for (j, h) in f.rightmost_first().enumerate() {
            for a in h + 1..=prev {
                index += self.p_box(m - (used + a) as i64, a, eta - j - 1);
            }
            used += h;
            prev = h;
        }
        index
    }

    /// The diagram of size m with `ferrers_rank == index`.
    pub fn ferrers_unrank(
        &self,
        m: usize,
        index: &BigUint,
        k: usize,
        eta: usize,
    ) -> Result<FerrersDiagram> {
        let oracle = FerrersOracle {
            cache: self,
            m,
            k,
            eta,
        };
        let symbols = enumcode::unrank_sequence(index, &oracle)?;
        Ok(oracle.diagram(&symbols))
    }

    /// Larger diagrams first; equal sizes ordered by `ferrers_rank`.
    pub fn compare_ferrers(&self, f: &FerrersDiagram, g: &FerrersDiagram) -> Result<Ordering> {
        if (f.k(), f.width()) != (g.k(), g.width()) {
            return Err(Error::ParamMismatch {
                expected: format!("{}x{} box", f.k(), f.width()),
                got: format!("{}x{} box", g.k(), g.width()),
            });
        }
        Ok(g.size()
            .cmp(&f.size())
            .then_with(|| self.ferrers_rank(f).cmp(&self.ferrers_rank(g))))
    }
}

fn p_rec(
    memo: &mut HashMap<(usize, usize, usize), BigUint>,
    m: usize,
    k: usize,
    eta: usize,
) -> BigUint {
    let area = k * eta;
    if m > area {
        return BigUint::zero();
    }
    // p(m,k,eta) = p(k*eta - m, k, eta)
    let m = m.min(area - m);
    if m == 0 || k == 1 || eta == 1 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&(m, k, eta)) {
        return v.clone();
    }
    // either every row is nonempty (drop the leftmost full column) or the
    // bottom row is empty
    let with_full_column = if m >= k {
        p_rec(memo, m - k, k, eta - 1)
    } else {
        BigUint::zero()
    };
    let v = with_full_column + p_rec(memo, m, k - 1, eta);
    memo.insert((m, k, eta), v.clone());
    v
}

/// Diagrams of size m in a k x eta box as sequences over column heights,
/// rightmost column first. At each column the symbol `s` stands for height
/// `previous - s`, so taller columns get smaller symbols.
pub struct FerrersOracle<'a> {
    pub cache: &'a PartitionCache,
    pub m: usize,
    pub k: usize,
    pub eta: usize,
}

impl FerrersOracle<'_> {
    fn heights(&self, symbols: &[usize]) -> Vec<usize> {
        let mut prev = self.k;
        symbols
            .iter()
            .map(|&s| {
                prev -= s;
                prev
            })
            .collect()
    }

    pub fn diagram(&self, symbols: &[usize]) -> FerrersDiagram {
        FerrersDiagram::from_rightmost(self.k, self.heights(symbols))
            .expect("heights are non-increasing")
    }

    pub fn symbols(&self, f: &FerrersDiagram) -> Vec<usize> {
        let mut prev = self.k;
        f.rightmost_first()
            .map(|h| {
                let s = prev - h;
                prev = h;
                s
            })
            .collect()
    }
}

impl PrefixOracle for FerrersOracle<'_> {
    fn len(&self) -> usize {
        self.eta
    }

    fn alphabet_size(&self, prefix: &[usize]) -> usize {
        self.heights(prefix).last().map_or(self.k, |&h| h) + 1
    }

    fn count(&self, prefix: &[usize], symbol: usize) -> BigUint {
        let mut heights = self.heights(prefix);
        let prev = heights.last().map_or(self.k, |&h| h);
        heights.push(prev - symbol);
        self.cache
            .n_m_count(&heights, self.m as i64, self.k, self.eta)
            .expect("oracle prefixes are valid")
    }
}

/// [n k]_q from the partition expansion sum_l p(l, k, n-k) q^l. The result
/// is checked against the product formula.
pub fn gaussian(n: usize, k: usize, q: u32, cache: &PartitionCache) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let eta = n - k;
    let qb = BigUint::from(q);
    let mut power = BigUint::one();
    let mut sum = BigUint::zero();
    for l in 0..=k * eta {
        sum += cache.p_box(l as i64, k, eta) * &power;
        power *= &qb;
    }
    assert_eq!(
        sum,
        gaussian_product(n, k, q),
        "partition expansion of [{n} {k}]_{q}"
    );
    sum
}

/// prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{k-i} - 1).
pub fn gaussian_product(n: usize, k: usize, q: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qb.pow((n - i) as u32) - 1u32;
        den *= qb.pow((k - i) as u32) - 1u32;
    }
    num / den
}

/// Gaussian coefficients [a b]_q for a <= n_max, b <= k_max, filled by the
/// q-Pascal rule [a b] = [a-1 b-1] + q^b [a-1 b]. The products q^b [a b]
/// are kept as well.
#[derive(Clone, Debug)]
pub struct GaussianTable {
    k_max: usize,
    rows: Vec<Vec<BigUint>>,
    scaled: Vec<Vec<BigUint>>,
}

impl GaussianTable {
    pub fn new(n_max: usize, k_max: usize, q: u32) -> Self {
        let qb = BigUint::from(q);
        let q_pow: Vec<BigUint> = (0..=k_max).map(|b| qb.pow(b as u32)).collect();
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        let mut scaled: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        for a in 0..=n_max {
            let row: Vec<BigUint> = (0..=k_max)
                .map(|b| match (a, b) {
                    (_, 0) => BigUint::one(),
                    (0, _) => BigUint::zero(),
                    _ => &rows[a - 1][b - 1] + &scaled[a - 1][b],
                })
                .collect();
            scaled.push(row.iter().zip(&q_pow).map(|(g, p)| g * p).collect());
            rows.push(row);
        }
        GaussianTable {
            k_max,
            rows,
            scaled,
        }
    }

    pub fn get(&self, a: usize, b: usize) -> &BigUint {
        assert!(b <= self.k_max);
        &self.rows[a][b]
    }

    /// q^b [a b]_q
    pub fn scaled(&self, a: usize, b: usize) -> &BigUint {
        assert!(b <= self.k_max);
        &self.scaled[a][b]
    }
}
