use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::{digits_value, value_digits, Grassmannian};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// Diagrams with at least `threshold` dots form S_F and are indexed by the
/// Ferrers order; every other subspace follows in extended order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HybridConfig {
    pub threshold: usize,
}

impl HybridConfig {
    /// The largest threshold whose Ferrers block still covers 90% of the
    /// Grassmannian.
    pub fn default_for(g: &Grassmannian) -> Self {
        let tables = g.ferrers_tables();
        let nine_tenths = g.total() * 9u32;
        let threshold = (0..tables.from_size.len())
            .rev()
            .find(|&t| &tables.from_size[t] * 10u32 >= nine_tenths)
            .unwrap_or(0);
        HybridConfig { threshold }
    }

    pub fn admits(&self, diagram_size: usize) -> bool {
        diagram_size >= self.threshold
    }
}

impl Grassmannian {
    fn check_threshold(&self, cfg: HybridConfig) -> Result<()> {
        let max = self.k * self.eta() + 1;
        if cfg.threshold > max {
            return Err(Error::InvalidParams(format!(
                "hybrid threshold {} exceeds {max}",
                cfg.threshold
            )));
        }
        Ok(())
    }

    /// Number of subspaces whose diagram lies in S_F.
    pub fn hybrid_block(&self, cfg: HybridConfig) -> Result<BigUint> {
        self.check_threshold(cfg)?;
        Ok(self.ferrers_tables().from_size[cfg.threshold].clone())
    }

    /// Completions of a prefix that leaves `len` columns to fill with `ones`
    /// further pivots, already holding `dots` dots, counted only when the
    /// final diagram size satisfies `keep`. Left parts with s dots number
    /// p(s, ones, len - ones) and each carries q^s tableau fillings.
    fn completions(
        &self,
        len: usize,
        ones: usize,
        dots: usize,
        keep: impl Fn(usize) -> bool,
    ) -> BigUint {
        if ones > len {
            return BigUint::zero();
        }
        let eta = len - ones;
        let q = BigUint::from(self.q());
        let mut power = BigUint::from(1u32);
        let mut sum = BigUint::zero();
        for s in 0..=ones * eta {
            if keep(dots + s) {
                sum += self.partitions.p_box(s as i64, ones, eta) * &power;
            }
            power *= &q;
        }
        sum
    }

    /// Delta_X: subspaces with diagram in S_F that follow X in extended
    /// order. X itself must lie outside S_F.
    pub fn delta_count(&self, x: &Subspace, cfg: HybridConfig) -> Result<BigUint> {
        self.check(x)?;
        self.check_threshold(cfg)?;
        if cfg.admits(x.ferrers_diagram().size()) {
            return Err(Error::Precondition(
                "delta is only defined for subspaces outside S_F".into(),
            ));
        }
        let (n, k) = (self.n, self.k);
        let in_sf = |size: usize| cfg.admits(size);
        let mut delta = BigUint::zero();
        let (mut w, mut dots) = (0, 0);
        for j in 1..=n {
            if w == k {
                // the rest of Y would have to copy X, putting Y outside S_F
                break;
            }
            let c = n - j;
            let free = k - w;
            if x.identifying_vector()[c] {
                // nothing exceeds a pivot column
                w += 1;
                continue;
            }
            // Y pivots here
            delta += self.completions(n - j, free - 1, dots, in_sf);
            // Y has a larger non-pivot column here
            let top: Vec<u8> = (0..free).map(|r| x.rref().get(r, c)).collect();
            let larger = &self.q_pow_k[free] - 1u32 - digits_value(&top, self.q());
            if !larger.is_zero() {
                delta += larger * self.completions(n - j, free, dots + free, in_sf);
            }
            dots += free;
        }
        Ok(delta)
    }

    /// Ind_1(X) when the diagram of X lies in S_F, Ind_2(X) + Delta_X
    /// otherwise.
    pub fn encode_hybrid(&self, x: &Subspace, cfg: HybridConfig) -> Result<BigUint> {
        self.check(x)?;
        self.check_threshold(cfg)?;
        if cfg.admits(x.ferrers_diagram().size()) {
            self.encode_ferrers(x)
        } else {
            Ok(self.encode_extended(x)? + self.delta_count(x, cfg)?)
        }
    }

    /// Indices below the S_F block decode in Ferrers order. The rest are
    /// unranked among subspaces outside S_F by an extended-order column walk
    /// that only counts completions with fewer than `threshold` dots.
    pub fn decode_hybrid(&self, index: &BigUint, cfg: HybridConfig) -> Result<Subspace> {
        self.check_index(index)?;
        let block = self.hybrid_block(cfg)?;
        if index < &block {
            return self.decode_ferrers(index);
        }
        let (n, k) = (self.n, self.k);
        let outside = |size: usize| !cfg.admits(size);
        let mut rest = index - block;
        let mut re = Matrix::zeros(k, n);
        let (mut w, mut dots) = (0, 0);
        for j in 1..=n {
            if w >= k {
                break;
            }
            let c = n - j;
            let free = k - w;
            let per_value = self.completions(n - j, free, dots + free, outside);
            let pivot_offset = &self.q_pow_k[free] * &per_value;
            if rest >= pivot_offset {
                rest -= pivot_offset;
                re.set(free - 1, c, 1);
                w += 1;
            } else {
                let (val, r) = rest.div_rem(&per_value);
                rest = r;
                for (row, d) in value_digits(&val, self.q(), free).into_iter().enumerate() {
                    re.set(row, c, d);
                }
                dots += free;
            }
        }
        debug_assert_eq!(w, k);
        debug_assert!(rest.is_zero());
        Ok(Subspace::from_rref_unchecked(re, self.q()))
    }
}
