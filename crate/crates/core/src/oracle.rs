//! Krull–Schmidt decomposition of a locally nilpotent representation from
//! the ranks of its path maps.
//!
//! With `r_i(l)` the rank of the composite map along `p_i^l`, the
//! multiplicity of `V(i,l)` is
//! `r_i(l) - r_i(l+1) - r_{i-1}(l+1) + r_{i-1}(l+2)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::comodule::{indecomposable_rep, Indecomposable, QuiverRep};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{QuiverContext, QuiverKind};

/// A direct sum `⊕ V(i,l)^{m(i,l)}`, stored with positive multiplicities only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    summands: BTreeMap<Indecomposable, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(v: Indecomposable) -> Self {
        let mut d = Self::new();
        d.add(v, 1);
        d
    }

    pub fn add(&mut self, v: Indecomposable, multiplicity: u64) {
        if multiplicity > 0 {
            *self.summands.entry(v).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, v: Indecomposable) -> u64 {
        self.summands.get(&v).copied().unwrap_or(0)
    }

    /// Summands in canonical (vertex, length) order.
    pub fn iter(&self) -> impl Iterator<Item = (Indecomposable, u64)> + '_ {
        self.summands.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn total_dimension(&self) -> usize {
        self.iter().map(|(v, m)| v.dimension() * m as usize).sum()
    }

    /// Pointwise sum of multiplicities.
    pub fn merge(&mut self, other: &Decomposition) {
        for (v, m) in other.iter() {
            self.add(v, m);
        }
    }

    /// Dimension of the sum at each vertex.
    pub fn graded_dimension(&self, ctx: &QuiverContext) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (v, mult) in self.iter() {
            for k in 0..=v.length {
                *out.entry(ctx.normalize_vertex(v.vertex + k as i64))
                    .or_insert(0) += mult as usize;
            }
        }
        out
    }

    /// The representation `⊕ V(i,l)^{m(i,l)}`.
    pub fn realize(&self, ctx: &QuiverContext) -> QuiverRep {
        let mut rep = QuiverRep::new(ctx);
        for (v, m) in self.iter() {
            let piece = indecomposable_rep(v, ctx);
            for _ in 0..m {
                rep = rep.direct_sum(&piece);
            }
        }
        rep
    }
}

impl FromIterator<(Indecomposable, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Indecomposable, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (v, m) in iter {
            d.add(v, m);
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (k, (v, m)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Rank of the composite arrow map along `p_i^l`; `dim V_i` when `l = 0`.
pub fn path_rank(rep: &QuiverRep, i: i64, l: usize) -> usize {
    if l == 0 {
        return rep.dim(i);
    }
    let mut acc: Option<Matrix> = None;
    for k in 0..l {
        let Some(a) = rep.arrow(i + k as i64) else {
            return 0;
        };
        let next = match acc {
            None => a.clone(),
            Some(m) => a.mul(&m),
        };
        if next.is_zero() {
            return 0;
        }
        acc = Some(next);
    }
    acc.map_or(0, |m| m.rank())
}

/// All nonzero path ranks `r_i(l)` of a representation, keyed by start vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankProfile {
    ranks: BTreeMap<i64, Vec<usize>>,
}

impl RankProfile {
    pub fn of(rep: &QuiverRep) -> Result<Self> {
        let total = rep.total_dim();
        let mut ranks = BTreeMap::new();
        for v in sweep_vertices(rep) {
            let mut row = Vec::new();
            let dim = rep.dim(v);
            if dim > 0 {
                row.push(dim);
                let mut acc: Option<Matrix> = None;
                for k in 0.. {
                    let Some(a) = rep.arrow(v + k as i64) else {
                        break;
                    };
                    let next = match acc {
                        None => a.clone(),
                        Some(m) => a.mul(&m),
                    };
                    let r = next.rank();
                    if r == 0 {
                        break;
                    }
                    if k + 1 >= total.max(1) {
                        return Err(Error::NotLocallyNilpotent {
                            vertex: v,
                            length: k + 1,
                        });
                    }
                    row.push(r);
                    acc = Some(next);
                }
            }
            if !row.is_empty() {
                ranks.insert(v, row);
            }
        }
        Ok(RankProfile { ranks })
    }

    pub fn get(&self, i: i64, l: usize) -> usize {
        self.ranks
            .get(&i)
            .and_then(|row| row.get(l))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &[usize])> + '_ {
        self.ranks.iter().map(|(k, v)| (*k, v.as_slice()))
    }
}

fn sweep_vertices(rep: &QuiverRep) -> Vec<i64> {
    match rep.context().kind() {
        QuiverKind::Cyclic(n) => (0..i64::from(n)).collect(),
        QuiverKind::InfiniteLinear => match rep.support() {
            Some((lo, hi)) => (lo - 2..=hi + 2).collect(),
            None => Vec::new(),
        },
    }
}

/// Decompose a finite-dimensional locally nilpotent representation into
/// indecomposables.
pub fn decompose_rep(rep: &QuiverRep) -> Result<Decomposition> {
    let ctx = rep.context();
    let profile = RankProfile::of(rep)?;
    let total = rep.total_dim();
    let mut out = Decomposition::new();
    for i in sweep_vertices(rep) {
        let prev = ctx.normalize_vertex(i - 1);
        let r = |v: i64, l: usize| profile.get(v, l) as i64;
        for l in 0..=total {
            let m = r(i, l) - r(i, l + 1) - r(prev, l + 1) + r(prev, l + 2);
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    vertex: i,
                    length: l,
                    multiplicity: m,
                });
            }
            out.add(Indecomposable::new(i, l), m as u64);
        }
    }
    let found = out.total_dimension();
    if found != total {
        return Err(Error::DimensionMismatch {
            expected: total,
            found,
        });
    }
    Ok(out)
}
