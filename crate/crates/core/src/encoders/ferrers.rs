use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;

use super::{digits_value, value_digits, Grassmannian};
use crate::error::Result;
use crate::linalg::{FerrersTableaux, Subspace};

impl Grassmannian {
    /// Ind_1: the index in the Ferrers tableaux order,
    /// `sum_{i > |F|} alpha_i q^i + ind(F) q^|F| + {x}` where `{x}` reads the
    /// tableau entries as a base-q number with the first entry most
    /// significant.
    pub fn encode_ferrers(&self, x: &Subspace) -> Result<BigUint> {
        self.check(x)?;
        let tables = self.ferrers_tables();
        let t = x.tableaux();
        let size = t.diagram().size();
        let rank = self.partitions.ferrers_rank(t.diagram());
        Ok(&tables.from_size[size + 1]
            + rank * &tables.q_pow[size]
            + digits_value(t.entries(), self.q()))
    }

    /// Inverse of [`Grassmannian::encode_ferrers`]. Size classes are scanned
    /// from the full box downwards, each occupying alpha_s q^s indices.
    pub fn decode_ferrers(&self, index: &BigUint) -> Result<Subspace> {
        self.check_index(index)?;
        let tables = self.ferrers_tables();
        let mut rest = index.clone();
        for size in (0..tables.alpha.len()).rev() {
            let block = &tables.alpha[size] * &tables.q_pow[size];
            if rest < block {
                let (diagram_index, entries) = rest.div_rem(&tables.q_pow[size]);
                let diagram =
                    self.partitions
                        .ferrers_unrank(size, &diagram_index, self.k, self.eta())?;
                let entries = value_digits(&entries, self.q(), size);
                return Subspace::from_tableaux(&FerrersTableaux::new(diagram, entries)?, self.q());
            }
            rest -= block;
        }
        unreachable!("index below total lands in some size class")
    }

    /// The Ferrers tableaux order: diagrams by `compare_ferrers`, then tableau
    /// entries lexicographically.
    pub fn compare_tableaux(&self, x: &Subspace, y: &Subspace) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        let (tx, ty) = (x.tableaux(), y.tableaux());
        Ok(self
            .partitions
            .compare_ferrers(tx.diagram(), ty.diagram())?
            .then_with(|| tx.entries().cmp(ty.entries())))
    }
}
