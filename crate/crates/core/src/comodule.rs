//! Representations of minimal Hopf quivers, the indecomposables `V(i,l)`,
//! and tensor products of indecomposables.
//!
//! A locally nilpotent representation is stored as a dimension per vertex
//! and one matrix per arrow `i → i+1`. The tensor product `V(i,l) ⊗ V(j,m)`
//! has basis `v_s ⊗ v_t` (row-major in `(s,t)`), with `v_s ⊗ v_t` sitting at
//! vertex `i+j+s+t` and the arrow acting by
//! `v_s ⊗ v_t ↦ v_{s+1} ⊗ v_t + q^{i+s} v_s ⊗ v_{t+1}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{PathIndex, QuiverContext};
use crate::scalar::ScalarValue;

/// The indecomposable `V(i,l)` of dimension `l+1`, with basis
/// `v_0, …, v_l` and `v_m` at vertex `i+m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indecomposable {
    pub vertex: i64,
    pub length: usize,
}

impl Indecomposable {
    pub fn new(vertex: i64, length: usize) -> Self {
        Indecomposable { vertex, length }
    }

    pub fn dimension(&self) -> usize {
        self.length + 1
    }

    pub fn normalized(self, ctx: &QuiverContext) -> Self {
        Indecomposable {
            vertex: ctx.normalize_vertex(self.vertex),
            length: self.length,
        }
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.vertex, self.length)
    }
}

/// A finite-dimensional representation: vector spaces at finitely many
/// vertices and a matrix `dim(v+1) × dim(v)` for each arrow `v → v+1`
/// between nonzero spaces.
#[derive(Clone, Debug)]
pub struct QuiverRep {
    ctx: QuiverContext,
    vertex_dims: BTreeMap<i64, usize>,
    arrows: BTreeMap<i64, Matrix>,
}

impl QuiverRep {
    pub fn new(ctx: &QuiverContext) -> Self {
        QuiverRep {
            ctx: ctx.clone(),
            vertex_dims: BTreeMap::new(),
            arrows: BTreeMap::new(),
        }
    }

    /// Assemble a representation, checking vertex ranges and matrix shapes.
    pub fn from_parts(
        ctx: &QuiverContext,
        vertex_dims: BTreeMap<i64, usize>,
        arrows: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let mut rep = QuiverRep::new(ctx);
        for (v, d) in vertex_dims {
            if ctx.normalize_vertex(v) != v {
                return Err(Error::InvalidContext(format!("vertex {v} is not reduced")));
            }
            if d > 0 {
                rep.vertex_dims.insert(v, d);
            }
        }
        for (v, m) in arrows {
            let (src, tgt) = (rep.dim(v), rep.dim(v + 1));
            if m.ncols() != src || m.nrows() != tgt {
                return Err(Error::DimensionMismatch {
                    expected: src * tgt,
                    found: m.nrows() * m.ncols(),
                });
            }
            if !m.is_zero() {
                rep.arrows.insert(ctx.normalize_vertex(v), m);
            }
        }
        Ok(rep)
    }

    pub fn context(&self) -> &QuiverContext {
        &self.ctx
    }

    pub fn dim(&self, v: i64) -> usize {
        self.vertex_dims
            .get(&self.ctx.normalize_vertex(v))
            .copied()
            .unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.vertex_dims.values().sum()
    }

    pub fn vertex_dims(&self) -> &BTreeMap<i64, usize> {
        &self.vertex_dims
    }

    pub fn arrows(&self) -> &BTreeMap<i64, Matrix> {
        &self.arrows
    }

    /// Matrix of the arrow `v → v+1`; `None` means the zero map.
    pub fn arrow(&self, v: i64) -> Option<&Matrix> {
        self.arrows.get(&self.ctx.normalize_vertex(v))
    }

    /// Smallest and largest vertex with a nonzero space.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.vertex_dims.keys().next()?;
        let hi = *self.vertex_dims.keys().next_back()?;
        Some((lo, hi))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &QuiverRep) -> QuiverRep {
        let mut dims = self.vertex_dims.clone();
        for (v, d) in &other.vertex_dims {
            *dims.entry(*v).or_insert(0) += d;
        }
        let mut arrows = BTreeMap::new();
        let keys: alloc::collections::BTreeSet<i64> = self
            .arrows
            .keys()
            .chain(other.arrows.keys())
            .copied()
            .collect();
        for v in keys {
            let (s0, t0) = (self.dim(v), self.dim(v + 1));
            let (s1, t1) = (other.dim(v), other.dim(v + 1));
            let mut m = Matrix::zeros(t0 + t1, s0 + s1);
            if let Some(a) = self.arrows.get(&v) {
                for c in 0..a.ncols() {
                    for (r, x) in a.column(c) {
                        m.set(*r, c, x.clone());
                    }
                }
            }
            if let Some(b) = other.arrows.get(&v) {
                for c in 0..b.ncols() {
                    for (r, x) in b.column(c) {
                        m.set(t0 + r, s0 + c, x.clone());
                    }
                }
            }
            arrows.insert(v, m);
        }
        QuiverRep {
            ctx: self.ctx.clone(),
            vertex_dims: dims,
            arrows,
        }
    }
}

/// The representation of `V(i,l)`: a single string of identity maps.
pub fn indecomposable_rep(v: Indecomposable, ctx: &QuiverContext) -> QuiverRep {
    let mut local = Vec::with_capacity(v.dimension());
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    for m in 0..=v.length {
        let at = ctx.normalize_vertex(v.vertex + m as i64);
        let slot = dims.entry(at).or_insert(0);
        local.push((at, *slot));
        *slot += 1;
    }
    let one = ctx.field().one();
    let mut arrows: BTreeMap<i64, Matrix> = BTreeMap::new();
    for m in 0..v.length {
        let (at, src) = local[m];
        let (_, tgt) = local[m + 1];
        let next = ctx.normalize_vertex(at + 1);
        arrows
            .entry(at)
            .or_insert_with(|| Matrix::zeros(dims[&next], dims[&at]))
            .set(tgt, src, one.clone());
    }
    QuiverRep {
        ctx: ctx.clone(),
        vertex_dims: dims,
        arrows,
    }
}

/// `δ(v_m) = Σ_{j=m}^{l} v_j ⊗ p_{i+m}^{j-m}`, returned as `(j, path)` pairs.
pub fn comodule_delta(
    v: Indecomposable,
    m: usize,
    ctx: &QuiverContext,
) -> Result<Vec<(usize, PathIndex)>> {
    if m > v.length {
        return Err(Error::BasisIndex {
            vertex: v.vertex,
            length: v.length,
            index: m,
        });
    }
    Ok((m..=v.length)
        .map(|j| (j, ctx.path(v.vertex + m as i64, j - m)))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorBasisVector {
    pub s: usize,
    pub t: usize,
}

impl fmt::Display for TensorBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{} ⊗ v_{}", self.s, self.t)
    }
}

/// `V(i,l) ⊗ V(j,m)` with its structure maps written out on the basis.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub left: Indecomposable,
    pub right: Indecomposable,
    ctx: QuiverContext,
}

impl TensorProduct {
    pub fn new(left: Indecomposable, right: Indecomposable, ctx: &QuiverContext) -> Self {
        TensorProduct {
            left: left.normalized(ctx),
            right: right.normalized(ctx),
            ctx: ctx.clone(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.left.dimension() * self.right.dimension()
    }

    /// Position of `v_s ⊗ v_t` in the row-major basis.
    pub fn basis_index(&self, b: TensorBasisVector) -> usize {
        b.s * self.right.dimension() + b.t
    }

    pub fn basis(&self) -> impl Iterator<Item = TensorBasisVector> + '_ {
        (0..=self.left.length)
            .flat_map(move |s| (0..=self.right.length).map(move |t| TensorBasisVector { s, t }))
    }

    pub fn vertex_of(&self, b: TensorBasisVector) -> i64 {
        self.ctx
            .normalize_vertex(self.left.vertex + self.right.vertex + (b.s + b.t) as i64)
    }

    /// Action of the dual path `(p_e^f)^*` as a square matrix on the whole basis:
    /// `v_s ⊗ v_t ↦ Σ_x q^{(i+s)(f-x)} C(f,x)_q v_{s+x} ⊗ v_{t+f-x}` when
    /// `v_s ⊗ v_t` sits at vertex `e`, and 0 otherwise.
    pub fn dual_path_action(&self, p: PathIndex) -> Matrix {
        let n = self.dimension();
        let mut out = Matrix::zeros(n, n);
        let e = self.ctx.normalize_vertex(p.source);
        let f = p.length;
        let (l, m) = (self.left.length, self.right.length);
        for b in self.basis() {
            if self.vertex_of(b) != e {
                continue;
            }
            let col = self.basis_index(b);
            for x in 0..=f {
                if x > l - b.s || f - x > m - b.t {
                    continue;
                }
                let c = &self
                    .ctx
                    .q_pow((self.left.vertex + b.s as i64) * (f - x) as i64)
                    * &self.ctx.q_binomial(f, x);
                let row = self.basis_index(TensorBasisVector {
                    s: b.s + x,
                    t: b.t + f - x,
                });
                out.add_to(row, col, &c);
            }
        }
        out
    }

    /// Comodule structure of the tensor product:
    /// `δ(v_s ⊗ v_t) = Σ_{x ≥ s, y ≥ t} q^{(i+s)(y-t)} C(x+y-s-t, x-s)_q
    /// v_x ⊗ v_y ⊗ p_{i+j+s+t}^{x+y-s-t}`, zero terms dropped.
    pub fn comodule_delta(
        &self,
        b: TensorBasisVector,
    ) -> Vec<(TensorBasisVector, ScalarValue, PathIndex)> {
        let mut out = Vec::new();
        let source = self.left.vertex + self.right.vertex + (b.s + b.t) as i64;
        for x in b.s..=self.left.length {
            for y in b.t..=self.right.length {
                let len = x + y - b.s - b.t;
                let c = &self
                    .ctx
                    .q_pow((self.left.vertex + b.s as i64) * (y - b.t) as i64)
                    * &self.ctx.q_binomial(len, x - b.s);
                if !c.is_zero() {
                    out.push((
                        TensorBasisVector { s: x, t: y },
                        c,
                        self.ctx.path(source, len),
                    ));
                }
            }
        }
        out
    }

    /// The tensor product as a quiver representation. Local bases at each
    /// vertex follow the row-major order of `(s,t)`.
    pub fn rep(&self) -> QuiverRep {
        let ctx = &self.ctx;
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        let mut local = Vec::with_capacity(self.dimension());
        for b in self.basis() {
            let slot = dims.entry(self.vertex_of(b)).or_insert(0);
            local.push(*slot);
            *slot += 1;
        }
        let mut arrows: BTreeMap<i64, Matrix> = BTreeMap::new();
        let (l, m) = (self.left.length, self.right.length);
        for b in self.basis() {
            let at = self.vertex_of(b);
            let next = ctx.normalize_vertex(at + 1);
            let src = local[self.basis_index(b)];
            let mut targets: Vec<(usize, ScalarValue)> = Vec::new();
            if b.s < l {
                let tb = TensorBasisVector { s: b.s + 1, t: b.t };
                targets.push((local[self.basis_index(tb)], ctx.field().one()));
            }
            if b.t < m {
                let tb = TensorBasisVector { s: b.s, t: b.t + 1 };
                targets.push((
                    local[self.basis_index(tb)],
                    ctx.q_pow(self.left.vertex + b.s as i64),
                ));
            }
            if targets.is_empty() {
                continue;
            }
            let mat = arrows
                .entry(at)
                .or_insert_with(|| Matrix::zeros(dims[&next], dims[&at]));
            for (r, c) in targets {
                mat.add_to(r, src, &c);
            }
        }
        arrows.retain(|_, m| !m.is_zero());
        QuiverRep {
            ctx: ctx.clone(),
            vertex_dims: dims,
            arrows,
        }
    }
}

pub fn tensor_rep(a: Indecomposable, b: Indecomposable, ctx: &QuiverContext) -> QuiverRep {
    TensorProduct::new(a, b, ctx).rep()
}
