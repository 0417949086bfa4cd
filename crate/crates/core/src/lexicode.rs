//! Greedy lexicodes: walk G_q(n, k) in the order of a scheme and keep every
//! subspace whose distance to all kept subspaces is at least d.
//!
//! Checkpoint format, one header line followed by one codeword per line:
//!
//! ```text
//! n k q d order next_index count
//! <k*n RREF entries, row-major>
//! ```

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::encoders::{Grassmannian, Scheme};
use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::linalg::{packed, subspace_distance, Subspace};
use crate::text;

/// Codeword counts above which distance checks fan out over the rayon pool.
const PARALLEL_MIN: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeBuild {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d: usize,
    pub order: Scheme,
    /// Accepted codewords in increasing index order.
    pub codewords: Vec<Subspace>,
    /// First index not yet examined.
    pub next_index: BigUint,
}

impl CodeBuild {
    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn to_checkpoint(&self) -> String {
        let mut s = format!(
            "{} {} {} {} {} {} {}\n",
            self.n,
            self.k,
            self.q,
            self.d,
            self.order,
            self.next_index,
            self.codewords.len()
        );
        for c in &self.codewords {
            writeln!(s, "{}", text::format_codeword(c)).unwrap();
        }
        s
    }

    pub fn from_checkpoint(input: &str) -> Result<Self> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty checkpoint".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, k, q, d, order, next, count] = fields[..] else {
            return Err(Error::Parse(format!("bad checkpoint header {header:?}")));
        };
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad checkpoint field {s:?}")))
        };
        let (n, k, q, d, count) = (num(n)?, num(k)?, num(q)? as u32, num(d)?, num(count)?);
        let order: Scheme = order.parse()?;
        let next_index: BigUint = next
            .parse()
            .map_err(|_| Error::Parse(format!("bad next_index {next:?}")))?;
        let codewords = lines
            .map(|l| text::parse_codeword(l, n, k, q))
            .collect::<Result<Vec<_>>>()?;
        if codewords.len() != count {
            return Err(Error::Parse(format!(
                "checkpoint declares {count} codewords, found {}",
                codewords.len()
            )));
        }
        Ok(CodeBuild {
            n,
            k,
            q,
            d,
            order,
            codewords,
            next_index,
        })
    }
}

pub struct LexicodeBuilder<'g> {
    g: &'g Grassmannian,
    build: CodeBuild,
    /// Packed RREF rows per codeword when q = 2.
    packed: Option<Vec<Vec<u64>>>,
}

fn check_distance(g: &Grassmannian, d: usize) -> Result<()> {
    if !d.is_multiple_of(2) || d < 2 || d > 2 * g.k() {
        return Err(Error::InvalidParams(format!(
            "minimum distance {d} must be even and within 2..={}",
            2 * g.k()
        )));
    }
    Ok(())
}

impl<'g> LexicodeBuilder<'g> {
    pub fn new(g: &'g Grassmannian, d: usize, order: Scheme) -> Result<Self> {
        check_distance(g, d)?;
        let build = CodeBuild {
            n: g.n(),
            k: g.k(),
            q: g.q(),
            d,
            order,
            codewords: Vec::new(),
            next_index: BigUint::zero(),
        };
        Ok(Self::with_build(g, build))
    }

    /// Continues a build restored from a checkpoint.
    pub fn resume(g: &'g Grassmannian, build: CodeBuild) -> Result<Self> {
        if (build.n, build.k, build.q) != (g.n(), g.k(), g.q()) {
            return Err(Error::ParamMismatch {
                expected: format!("({},{},{})", g.n(), g.k(), g.q()),
                got: format!("({},{},{})", build.n, build.k, build.q),
            });
        }
        check_distance(g, build.d)?;
        if &build.next_index > g.total() {
            return Err(Error::IndexOutOfRange {
                index: build.next_index.clone(),
                total: g.total().clone(),
            });
        }
        Ok(Self::with_build(g, build))
    }

    fn with_build(g: &'g Grassmannian, build: CodeBuild) -> Self {
        let packed = (g.q() == 2 && g.n() <= 64)
            .then(|| build.codewords.iter().map(Subspace::packed_rows).collect());
        LexicodeBuilder { g, build, packed }
    }

    pub fn build(&self) -> &CodeBuild {
        &self.build
    }

    pub fn into_build(self) -> CodeBuild {
        self.build
    }

    pub fn is_done(&self) -> bool {
        &self.build.next_index >= self.g.total()
    }

    fn compatible(&self, x: &Subspace) -> bool {
        let k = self.g.k();
        let min_rank = k + self.build.d / 2;
        match &self.packed {
            Some(packed) => {
                let rows = x.packed_rows();
                let far = |c: &Vec<u64>| packed::stacked_rank(&rows, c) >= min_rank;
                if packed.len() >= PARALLEL_MIN {
                    packed.par_iter().all(far)
                } else {
                    packed.iter().all(far)
                }
            }
            None => {
                let f: &FieldTable = self.g.field();
                let far = |c: &Subspace| {
                    subspace_distance(x, c, f).expect("same parameters") >= self.build.d
                };
                if self.build.codewords.len() >= PARALLEL_MIN {
                    self.build.codewords.par_iter().all(far)
                } else {
                    self.build.codewords.iter().all(far)
                }
            }
        }
    }

    /// Examines one index. Returns whether its subspace was accepted.
    pub fn step(&mut self) -> Result<bool> {
        let x = self.g.decode(&self.build.next_index, self.build.order)?;
        let accept = self.compatible(&x);
        if accept {
            if let Some(p) = &mut self.packed {
                p.push(x.packed_rows());
            }
            self.build.codewords.push(x);
        }
        self.build.next_index += 1u32;
        Ok(accept)
    }

    /// Runs until `limit` (exclusive, capped at the total) is reached.
    /// `on_progress` is called every `every` indices with the current state.
    pub fn run_with(
        &mut self,
        limit: Option<&BigUint>,
        every: u64,
        mut on_progress: impl FnMut(&CodeBuild) -> Result<()>,
    ) -> Result<()> {
        let end = match limit {
            Some(l) if l < self.g.total() => l.clone(),
            _ => self.g.total().clone(),
        };
        let mut since = 0u64;
        while self.build.next_index < end {
            self.step()?;
            since += 1;
            if every > 0 && since >= every {
                since = 0;
                on_progress(&self.build)?;
            }
        }
        Ok(())
    }

    pub fn run(&mut self, limit: Option<&BigUint>) -> Result<()> {
        self.run_with(limit, 0, |_| Ok(()))
    }
}

/// Builds the lexicode over indices `0..limit` (or the whole Grassmannian).
pub fn build_lexicode(
    g: &Grassmannian,
    d: usize,
    order: Scheme,
    limit: Option<&BigUint>,
) -> Result<CodeBuild> {
    let mut b = LexicodeBuilder::new(g, d, order)?;
    b.run(limit)?;
    Ok(b.into_build())
}

/// Outcome of [`verify_min_distance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCheck {
    pub ok: bool,
    /// First violating pair `(i, j, distance)` with `i < j`.
    pub witness: Option<(usize, usize, usize)>,
}

pub fn verify_min_distance(code: &[Subspace], d: usize, f: &FieldTable) -> Result<DistanceCheck> {
    if code.is_empty() {
        return Err(Error::Precondition("cannot verify an empty code".into()));
    }
    let (n, q) = (code[0].n(), code[0].q());
    let packed: Option<Vec<Vec<u64>>> =
        (q == 2 && n <= 64 && f.order() == 2 && code.iter().all(|c| (c.n(), c.q()) == (n, q)))
            .then(|| code.iter().map(Subspace::packed_rows).collect());
    for i in 0..code.len() {
        for j in i + 1..code.len() {
            let dist = match &packed {
                Some(p) => 2 * packed::stacked_rank(&p[i], &p[j]) - code[i].k() - code[j].k(),
                None => subspace_distance(&code[i], &code[j], f)?,
            };
            if dist < d {
                return Ok(DistanceCheck {
                    ok: false,
                    witness: Some((i, j, dist)),
                });
            }
        }
    }
    Ok(DistanceCheck {
        ok: true,
        witness: None,
    })
}

impl CodeBuild {
    pub fn verify(&self, f: &FieldTable) -> Result<DistanceCheck> {
        verify_min_distance(&self.codewords, self.d, f)
    }

    pub fn examined(&self) -> &BigUint {
        &self.next_index
    }

    pub fn is_complete(&self, g: &Grassmannian) -> bool {
        &self.next_index >= g.total()
    }
}
