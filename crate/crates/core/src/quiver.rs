//! Minimal Hopf quivers and their path Hopf algebras.
//!
//! On the cyclic quiver `Z_n` and the infinite linear quiver a path is fixed
//! by its source vertex and its length, so paths are handled as
//! [`PathIndex`] values and never as arrow sequences. Multiplication is
//! `p_i^l · p_j^m = q^{im} C(l+m, l)_q p_{i+j}^{l+m}`; the coproduct splits a
//! path into all (later part, earlier part) pairs.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{q_binomial, QSpec, ScalarField, ScalarValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuiverKind {
    /// The cyclic quiver with `n ≥ 1` vertices (`n = 1` is the one-loop quiver).
    Cyclic(u32),
    InfiniteLinear,
}

impl fmt::Display for QuiverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverKind::Cyclic(n) => write!(f, "cyclic({n})"),
            QuiverKind::InfiniteLinear => write!(f, "infinite"),
        }
    }
}

/// A minimal Hopf quiver with a chosen Hopf structure `q`.
///
/// Scalars live in one ambient field per context: `Q(ζ_n)` for a cyclic
/// quiver with `q ≠ 1`, `Q(ζ_d)` for the infinite quiver with `q` of order
/// `d`, and `Q` otherwise.
#[derive(Clone, Debug)]
pub struct QuiverContext {
    kind: QuiverKind,
    q: QSpec,
    field: ScalarField,
    q_value: ScalarValue,
}

impl PartialEq for QuiverContext {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.q == other.q
    }
}

impl Eq for QuiverContext {}

impl QuiverContext {
    pub fn new(kind: QuiverKind, q: QSpec) -> Result<Self> {
        let field = match (&kind, &q) {
            (QuiverKind::Cyclic(0), _) => {
                return Err(Error::InvalidContext("a cyclic quiver needs n >= 1".into()))
            }
            (QuiverKind::Cyclic(_), QSpec::One) => ScalarField::Rationals,
            (QuiverKind::Cyclic(n), QSpec::RootOfUnity { .. }) => {
                let d = q.multiplicative_order().expect("root of unity");
                if n % d != 0 {
                    return Err(Error::InvalidContext(format!(
                        "q = {q} has order {d}, which does not divide n = {n} (q^n = 1 is required)"
                    )));
                }
                ScalarField::cyclotomic(*n)?
            }
            (QuiverKind::Cyclic(n), QSpec::GenericRational(_)) => {
                return Err(Error::InvalidContext(format!(
                    "q = {q} is not an {n}-th root of unity"
                )))
            }
            (QuiverKind::InfiniteLinear, QSpec::RootOfUnity { .. }) => {
                ScalarField::cyclotomic(q.multiplicative_order().expect("root of unity"))?
            }
            (QuiverKind::InfiniteLinear, _) => ScalarField::Rationals,
        };
        let q_value = q.value_in(&field)?;
        Ok(QuiverContext {
            kind,
            q,
            field,
            q_value,
        })
    }

    pub fn cyclic(n: u32, q: QSpec) -> Result<Self> {
        Self::new(QuiverKind::Cyclic(n), q)
    }

    pub fn infinite(q: QSpec) -> Result<Self> {
        Self::new(QuiverKind::InfiniteLinear, q)
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn q(&self) -> &QSpec {
        &self.q
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn q_value(&self) -> &ScalarValue {
        &self.q_value
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.kind, QuiverKind::Cyclic(_))
    }

    /// Number of vertices, `None` for the infinite quiver.
    pub fn vertex_count(&self) -> Option<u32> {
        match self.kind {
            QuiverKind::Cyclic(n) => Some(n),
            QuiverKind::InfiniteLinear => None,
        }
    }

    /// Multiplicative order of `q` (`None` when `q` is not a root of unity).
    pub fn q_order(&self) -> Option<u32> {
        self.q.multiplicative_order()
    }

    /// Order `d ≥ 2` when `q` is a nontrivial root of unity.
    pub fn root_order(&self) -> Option<u32> {
        match self.q {
            QSpec::RootOfUnity { .. } => self.q.multiplicative_order(),
            _ => None,
        }
    }

    pub fn normalize_vertex(&self, v: i64) -> i64 {
        match self.kind {
            QuiverKind::Cyclic(n) => v.rem_euclid(i64::from(n)),
            QuiverKind::InfiniteLinear => v,
        }
    }

    pub fn path(&self, source: i64, length: usize) -> PathIndex {
        PathIndex {
            source: self.normalize_vertex(source),
            length,
        }
    }

    /// `q^exp` for any integer exponent.
    pub fn q_pow(&self, exp: i64) -> ScalarValue {
        match &self.q {
            QSpec::One => self.field.one(),
            QSpec::RootOfUnity { .. } => {
                let (d, k) = self.q.primitive_form().expect("root of unity");
                let ambient = self.field.cyclotomic_order().expect("cyclotomic field");
                let step = i64::from(k) * i64::from(ambient / d);
                self.field.zeta_pow(step * exp).expect("cyclotomic field")
            }
            QSpec::GenericRational(_) => self.q_value.pow(exp).expect("q is nonzero"),
        }
    }

    pub fn q_binomial(&self, top: usize, bottom: usize) -> ScalarValue {
        q_binomial(top, bottom, &self.q_value).expect("bottom <= top")
    }
}

/// The path `p_i^l`: `l` consecutive arrows starting at vertex `i`.
/// Length zero is the trivial path (group-like) `g^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathIndex {
    pub source: i64,
    pub length: usize,
}

impl PathIndex {
    pub fn new(source: i64, length: usize) -> Self {
        PathIndex { source, length }
    }

    pub fn vertex(source: i64) -> Self {
        PathIndex { source, length: 0 }
    }

    pub fn target(&self) -> i64 {
        self.source + self.length as i64
    }
}

impl fmt::Display for PathIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p_{}^{}", self.source, self.length)
    }
}

/// A scalar multiple of a single path.
#[derive(Clone, Debug)]
pub struct ScaledPath {
    pub coeff: ScalarValue,
    pub path: PathIndex,
}

impl ScaledPath {
    pub fn unit(ctx: &QuiverContext, path: PathIndex) -> Self {
        ScaledPath {
            coeff: ctx.field().one(),
            path,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(mut self, c: &ScalarValue) -> Self {
        self.coeff = &self.coeff * c;
        self
    }

    pub fn mul(&self, rhs: &ScaledPath, ctx: &QuiverContext) -> ScaledPath {
        let prod = path_mul(self.path, rhs.path, ctx);
        ScaledPath {
            coeff: &(&self.coeff * &rhs.coeff) * &prod.coeff,
            path: prod.path,
        }
    }
}

/// Equality as elements of the path algebra: every zero multiple is the same element.
impl PartialEq for ScaledPath {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.path == other.path && self.coeff == other.coeff,
            _ => false,
        }
    }
}

/// `p_i^l · p_j^m = q^{im} C(l+m, l)_q p_{i+j}^{l+m}`. The coefficient may be zero.
pub fn path_mul(p: PathIndex, r: PathIndex, ctx: &QuiverContext) -> ScaledPath {
    let i = ctx.normalize_vertex(p.source);
    let exp = i * r.length as i64;
    let coeff = &ctx.q_pow(exp) * &ctx.q_binomial(p.length + r.length, p.length);
    ScaledPath {
        coeff,
        path: ctx.path(p.source + r.source, p.length + r.length),
    }
}

/// `Δ(p_i^l) = Σ_k p_{i+k}^{l-k} ⊗ p_i^k`, listed from `k = l` down to `k = 0`.
pub fn coproduct(p: PathIndex, ctx: &QuiverContext) -> Vec<(PathIndex, PathIndex)> {
    (0..=p.length)
        .rev()
        .map(|k| {
            (
                ctx.path(p.source + k as i64, p.length - k),
                ctx.path(p.source, k),
            )
        })
        .collect()
}

/// `ε(p)`: 1 on trivial paths, 0 otherwise.
pub fn counit(p: PathIndex) -> i64 {
    i64::from(p.length == 0)
}

fn word(ctx: &QuiverContext, letters: &[PathIndex]) -> ScaledPath {
    let one = ScaledPath::unit(ctx, ctx.path(0, 0));
    letters
        .iter()
        .fold(one, |acc, &p| acc.mul(&ScaledPath::unit(ctx, p), ctx))
}

/// Evaluate the generators-and-relations presentation of the path Hopf
/// algebra in the path basis. Every relation must hold.
pub fn check_presentation(ctx: &QuiverContext) -> Report {
    let mut report = Report::default();
    let one = word(ctx, &[]);
    let g = ctx.path(1, 0);
    let arrow = ctx.path(0, 1);
    let q = ctx.q_value().clone();
    let (a, name_a) = if ctx.is_cyclic() {
        (arrow, "a_0")
    } else {
        (arrow, "e_0")
    };

    match ctx.kind() {
        QuiverKind::Cyclic(n) => {
            let gs: Vec<PathIndex> = (0..n).map(|_| g).collect();
            report.push(format!("g^{n} = 1"), word(ctx, &gs) == one);
        }
        QuiverKind::InfiniteLinear => {
            let g_inv = ctx.path(-1, 0);
            report.push("g g^-1 = 1", word(ctx, &[g, g_inv]) == one);
            report.push("g^-1 g = 1", word(ctx, &[g_inv, g]) == one);
        }
    }

    let lhs = word(ctx, &[g, a]);
    let rhs = word(ctx, &[a, g]);
    if ctx.q().is_one() {
        report.push(format!("g {name_a} = {name_a} g"), lhs == rhs);
    } else {
        report.push(format!("g {name_a} = q {name_a} g"), lhs == rhs.scale(&q));
    }

    if let Some(d) = ctx.root_order() {
        let d = d as usize;
        let pd = ctx.path(0, d);
        let power: Vec<PathIndex> = (0..d).map(|_| a).collect();
        report.push(format!("{name_a}^{d} = 0"), word(ctx, &power).is_zero());
        report.push(
            format!("{name_a} p_0^{d} = p_0^{d} {name_a}"),
            word(ctx, &[a, pd]) == word(ctx, &[pd, a]),
        );
        report.push(
            format!("g p_0^{d} = p_0^{d} g"),
            word(ctx, &[g, pd]) == word(ctx, &[pd, g]),
        );
    }
    report
}
