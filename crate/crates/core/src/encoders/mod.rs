//! Bijections between G_q(n, k) and `0..[n k]_q`.
//!
//! Three orders are supported:
//! * [`Scheme::Ferrers`]: larger Ferrers diagrams first, then diagram rank,
//!   then the tableau entries read as a base-q number.
//! * [`Scheme::Extended`]: columns of the extended representation compared
//!   right to left, identifying bit most significant.
//! * [`Scheme::Hybrid`]: subspaces whose diagram has at least `threshold`
//!   dots take the Ferrers indices, the rest follow in extended order.

mod extended;
mod ferrers;
mod hybrid;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Element, FieldTable};
use crate::linalg::Subspace;
use crate::shapes::{GaussianTable, PartitionCache};

pub use hybrid::HybridConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Ferrers,
    Extended,
    Hybrid(HybridConfig),
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Ferrers => f.write_str("ferrers"),
            Scheme::Extended => f.write_str("extended"),
            Scheme::Hybrid(cfg) => write!(f, "hybrid:{}", cfg.threshold),
        }
    }
}

impl FromStr for Scheme {
    type Err = Error;

    /// Accepts `ferrers`, `extended` and `hybrid:<threshold>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ferrers" => Ok(Scheme::Ferrers),
            "extended" => Ok(Scheme::Extended),
            _ => {
                let t = s
                    .strip_prefix("hybrid:")
                    .ok_or_else(|| Error::Parse(format!("unknown scheme {s:?}")))?;
                let threshold = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad hybrid threshold {t:?}")))?;
                Ok(Scheme::Hybrid(HybridConfig { threshold }))
            }
        }
    }
}

/// Per-size tables used by the Ferrers order, built on first use.
#[derive(Debug)]
struct FerrersTables {
    alpha: Vec<BigUint>,
    q_pow: Vec<BigUint>,
    /// `from_size[s]` = sum over i >= s of alpha_i q^i; length k(n-k) + 2.
    from_size: Vec<BigUint>,
}

/// Parameters of G_q(n, k) plus the cached counts every scheme needs.
#[derive(Debug)]
pub struct Grassmannian {
    n: usize,
    k: usize,
    field: FieldTable,
    gauss: GaussianTable,
    /// q^0 ..= q^k
    q_pow_k: Vec<BigUint>,
    total: BigUint,
    partitions: PartitionCache,
    ferrers: OnceLock<FerrersTables>,
}

impl Grassmannian {
    pub fn new(n: usize, k: usize, q: u32) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
        }
        let field = FieldTable::new(q)?;
        let gauss = GaussianTable::new(n, k, q);
        let total = gauss.get(n, k).clone();
        let qb = BigUint::from(q);
        let q_pow_k = (0..=k).map(|e| qb.pow(e as u32)).collect();
        Ok(Grassmannian {
            n,
            k,
            field,
            gauss,
            q_pow_k,
            total,
            partitions: PartitionCache::new(),
            ferrers: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn partitions(&self) -> &PartitionCache {
        &self.partitions
    }

    /// Box width n - k.
    pub fn eta(&self) -> usize {
        self.n - self.k
    }

    /// [n k]_q, the number of subspaces.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// [a b]_q for a <= n, b <= k.
    pub fn gaussian(&self, a: usize, b: usize) -> &BigUint {
        self.gauss.get(a, b)
    }

    /// alpha_l = number of Ferrers diagrams of size l in the k x (n-k) box.
    pub fn alpha(&self) -> &[BigUint] {
        &self.ferrers_tables().alpha
    }

    fn ferrers_tables(&self) -> &FerrersTables {
        self.ferrers.get_or_init(|| {
            let alpha = self.partitions.alpha(self.k, self.eta());
            let qb = BigUint::from(self.q());
            let mut q_pow = Vec::with_capacity(alpha.len());
            let mut p = BigUint::one();
            for _ in 0..alpha.len() {
                q_pow.push(p.clone());
                p *= &qb;
            }
            let mut from_size = vec![BigUint::zero(); alpha.len() + 1];
            for s in (0..alpha.len()).rev() {
                from_size[s] = &from_size[s + 1] + &alpha[s] * &q_pow[s];
            }
            debug_assert_eq!(from_size[0], self.total);
            FerrersTables {
                alpha,
                q_pow,
                from_size,
            }
        })
    }

    /// The subspace `[I_k | 0]`, index 0 in every scheme.
    pub fn first(&self) -> Subspace {
        Subspace::leading_unit(self.n, self.k, self.q())
    }

    pub fn encode(&self, x: &Subspace, scheme: Scheme) -> Result<BigUint> {
        match scheme {
            Scheme::Ferrers => self.encode_ferrers(x),
            Scheme::Extended => self.encode_extended(x),
            Scheme::Hybrid(cfg) => self.encode_hybrid(x, cfg),
        }
    }

    pub fn decode(&self, index: &BigUint, scheme: Scheme) -> Result<Subspace> {
        match scheme {
            Scheme::Ferrers => self.decode_ferrers(index),
            Scheme::Extended => self.decode_extended(index),
            Scheme::Hybrid(cfg) => self.decode_hybrid(index, cfg),
        }
    }

    /// The order a scheme enumerates subspaces in, as a comparator. Hybrid
    /// has no comparator of its own and is ordered by index.
    pub fn compare(
        &self,
        x: &Subspace,
        y: &Subspace,
        scheme: Scheme,
    ) -> Result<std::cmp::Ordering> {
        match scheme {
            Scheme::Ferrers => self.compare_tableaux(x, y),
            Scheme::Extended => self.compare_extended(x, y),
            Scheme::Hybrid(_) => Ok(self.encode(x, scheme)?.cmp(&self.encode(y, scheme)?)),
        }
    }

    fn check(&self, x: &Subspace) -> Result<()> {
        x.check_params(self.n, self.k, self.q())
    }

    fn check_index(&self, index: &BigUint) -> Result<()> {
        if index >= &self.total {
            return Err(Error::IndexOutOfRange {
                index: index.clone(),
                total: self.total.clone(),
            });
        }
        Ok(())
    }
}

/// Base-q value of `digits`, first digit most significant.
fn digits_value(digits: &[Element], q: u32) -> BigUint {
    if digits.is_empty() {
        return BigUint::zero();
    }
    BigUint::from_radix_be(digits, q).expect("digits are field elements")
}

/// Like [`digits_value`] when the result fits in a u64.
fn small_value(mut digits: impl Iterator<Item = Element>, q: u32) -> Option<u64> {
    digits.try_fold(0u64, |acc, d| {
        acc.checked_mul(u64::from(q))?.checked_add(u64::from(d))
    })
}

/// `value` as exactly `len` base-q digits, most significant first.
fn value_digits(value: &BigUint, q: u32, len: usize) -> Vec<Element> {
    let mut out = vec![0; len];
    if len == 0 || value.is_zero() {
        return out;
    }
    let digits = value.to_radix_be(q);
    debug_assert!(digits.len() <= len);
    out[len - digits.len()..].copy_from_slice(&digits);
    out
}
