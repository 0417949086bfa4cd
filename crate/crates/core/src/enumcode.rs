//! Lexicographic ranking of fixed-length symbol sequences drawn from a set S,
//! given a way to count the members of S that extend a prefix.
//!
//! For x in S the rank is the sum, over every position j, of the number of
//! members that agree with x before j and carry a smaller symbol at j.
//! Unranking walks the same counting tree from the root.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Counts members of a set of sequences by prefix. Symbols at each position
/// are `0..alphabet_size(prefix)` and compare as integers.
pub trait PrefixOracle {
    /// Length of every member.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn alphabet_size(&self, prefix: &[usize]) -> usize;

    /// Number of members beginning with `prefix` followed by `symbol`.
    fn count(&self, prefix: &[usize], symbol: usize) -> BigUint;
}

/// |S|.
pub fn total<O: PrefixOracle + ?Sized>(oracle: &O) -> BigUint {
    if oracle.is_empty() {
        return BigUint::one();
    }
    (0..oracle.alphabet_size(&[]))
        .map(|s| oracle.count(&[], s))
        .sum()
}

pub fn rank_sequence<O: PrefixOracle + ?Sized>(x: &[usize], oracle: &O) -> Result<BigUint> {
    if x.len() != oracle.len() {
        return Err(Error::NotInSet);
    }
    let mut index = BigUint::zero();
    for j in 0..x.len() {
        let prefix = &x[..j];
        if x[j] >= oracle.alphabet_size(prefix) {
            return Err(Error::NotInSet);
        }
        for m in 0..x[j] {
            index += oracle.count(prefix, m);
        }
        if oracle.count(prefix, x[j]).is_zero() {
            return Err(Error::NotInSet);
        }
    }
    Ok(index)
}

pub fn unrank_sequence<O: PrefixOracle + ?Sized>(
    index: &BigUint,
    oracle: &O,
) -> Result<Vec<usize>> {
    let out_of_range = || Error::IndexOutOfRange {
        index: index.clone(),
        total: total(oracle),
    };
    let mut rest = index.clone();
    let mut x = Vec::with_capacity(oracle.len());
    for _ in 0..oracle.len() {
        let size = oracle.alphabet_size(&x);
        let mut chosen = None;
        for s in 0..size {
            let c = oracle.count(&x, s);
            if rest < c {
                chosen = Some(s);
                break;
            }
            rest -= c;
        }
        x.push(chosen.ok_or_else(out_of_range)?);
    }
    if !rest.is_zero() {
        return Err(out_of_range());
    }
    Ok(x)
}
