//! Closed-form Clebsch–Gordan decompositions `V(i,l) ⊗ V(j,m)`.
//!
//! Tensoring with `V(1,0)` only shifts vertices, so every product reduces
//! to `V(0,l) ⊗ V(0,m)` with `l ≤ m` followed by a shift by `i+j`.
//!
//! For `q = 1` (or `q` not a root of unity) the answer is
//! `⊕_{i=0}^{l} V(i, l+m-2i)`. For `q` of order `d ≥ 2` write `l = ed+f`
//! and `m = Md+h` with `0 ≤ f,h < d`; the summands come in blocks of `d`
//! consecutive vertices, one block per `k < e`, plus a final block at
//! vertex `ed`, and the shape of each block depends on `f ≤ h` and on
//! `f + h < d - 1`.

use alloc::format;
use alloc::vec::Vec;

use crate::comodule::Indecomposable;
use crate::error::{Error, Result};
use crate::oracle::Decomposition;
use crate::quiver::QuiverContext;

/// `V(i,l) ⊗ V(j,m) ≅ V(shift,0) ⊗ V(0,left) ⊗ V(0,right)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizedPair {
    pub shift: i64,
    pub left: usize,
    pub right: usize,
}

pub fn normalize_pair(a: Indecomposable, b: Indecomposable, ctx: &QuiverContext) -> NormalizedPair {
    NormalizedPair {
        shift: ctx.normalize_vertex(a.vertex + b.vertex),
        left: a.length.min(b.length),
        right: a.length.max(b.length),
    }
}

/// The four root-of-unity cases, by `f ≤ h` or `f > h` and by
/// `f + h < d - 1` or `f + h ≥ d - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootCase {
    /// `f ≤ h`, `f + h < d - 1`.
    One,
    /// `f ≤ h`, `f + h ≥ d - 1`.
    Two,
    /// `f > h`, `f + h < d - 1`.
    Three,
    /// `f > h`, `f + h ≥ d - 1`.
    Four,
}

/// Which closed formula applies to a normalized pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CgCase {
    Generic,
    RootOfUnity {
        d: usize,
        e: usize,
        f: usize,
        m: usize,
        h: usize,
        gamma: i64,
        case: RootCase,
    },
}

impl CgCase {
    pub fn classify(pair: NormalizedPair, ctx: &QuiverContext) -> CgCase {
        let Some(d) = ctx.root_order() else {
            return CgCase::Generic;
        };
        let d = d as usize;
        let (e, f) = (pair.left / d, pair.left % d);
        let (m, h) = (pair.right / d, pair.right % d);
        let low = f + h < d - 1;
        let case = match (f <= h, low) {
            (true, true) => RootCase::One,
            (true, false) => RootCase::Two,
            (false, true) => RootCase::Three,
            (false, false) => RootCase::Four,
        };
        CgCase::RootOfUnity {
            d,
            e,
            f,
            m,
            h,
            gamma: (f + h) as i64 - d as i64 + 1,
            case,
        }
    }
}

/// Summands `(vertex offset, length)` of `V(0,l) ⊗ V(0,m)` for generic `q`.
pub fn generic_summands(l: usize, m: usize) -> Vec<(i64, i64)> {
    let (l, m) = (l.min(m) as i64, l.max(m) as i64);
    (0..=l).map(|i| (i, l + m - 2 * i)).collect()
}

/// Summands `(vertex offset, length)` of `V(0,l) ⊗ V(0,m)` when `q` has order `d ≥ 2`.
pub fn root_of_unity_summands(l: usize, m: usize, d: usize) -> Vec<(i64, i64)> {
    assert!(d >= 2, "order must be at least 2");
    let (l, m) = (l.min(m), l.max(m));
    let d = d as i64;
    let (e, f) = (l as i64 / d, l as i64 % d);
    let (mm, h) = (m as i64 / d, m as i64 % d);
    let g = f + h - d + 1;
    let mut out = Vec::new();
    let mut emit = |v: i64, len: i64| out.push((v, len));
    let span = |k: i64| (e + mm - 2 * k) * d;
    if f <= h && g < 0 {
        for k in 0..e {
            let b = k * d;
            for i in 0..=f {
                emit(b + i, span(k) + f + h - 2 * i);
            }
            for j in f + 1..=h {
                emit(b + j, span(k) - 1);
            }
            for r in h + 1..=f + h + 1 {
                emit(b + r, span(k) + f + h - 2 * r);
            }
            for s in f + h + 2..d {
                emit(b + s, span(k) - d - 1);
            }
        }
        for i in 0..=f {
            emit(e * d + i, (mm - e) * d + f + h - 2 * i);
        }
    } else if f <= h {
        for k in 0..e {
            let b = k * d;
            for i in 0..=g {
                emit(b + i, span(k) + d - 1);
            }
            for j in g + 1..=f {
                emit(b + j, span(k) + f + h - 2 * j);
            }
            for r in f + 1..=h {
                emit(b + r, span(k) - 1);
            }
            for s in h + 1..d {
                emit(b + s, span(k) + f + h - 2 * s);
            }
        }
        for i in 0..=g {
            emit(e * d + i, (mm - e) * d + d - 1);
        }
        for i in g + 1..=f {
            emit(e * d + i, (mm - e) * d + f + h - 2 * i);
        }
    } else if g < 0 {
        for k in 0..e {
            let b = k * d;
            for i in 0..=h {
                emit(b + i, span(k) + f + h - 2 * i);
            }
            for j in h + 1..=f {
                emit(b + j, span(k) - 1);
            }
            for r in f + 1..=f + h + 1 {
                emit(b + r, span(k) + f + h - 2 * r);
            }
            for s in f + h + 2..d {
                emit(b + s, span(k) - d - 1);
            }
        }
        for i in 0..=h {
            emit(e * d + i, (mm - e) * d + f + h - 2 * i);
        }
        for i in h + 1..=f {
            emit(e * d + i, (mm - e) * d - 1);
        }
    } else {
        for k in 0..e {
            let b = k * d;
            for i in 0..=g {
                emit(b + i, span(k) + d - 1);
            }
            for j in g + 1..=h {
                emit(b + j, span(k) + f + h - 2 * j);
            }
            for r in h + 1..=f {
                emit(b + r, span(k) - 1);
            }
            for s in f + 1..d {
                emit(b + s, span(k) + f + h - 2 * s);
            }
        }
        for i in 0..=g {
            emit(e * d + i, (mm - e) * d + d - 1);
        }
        for i in g + 1..=h {
            emit(e * d + i, (mm - e) * d + f + h - 2 * i);
        }
        for i in h + 1..=f {
            emit(e * d + i, (mm - e) * d - 1);
        }
    }
    out
}

/// Closed-form decomposition of `a ⊗ b`.
pub fn decompose_closed(
    a: Indecomposable,
    b: Indecomposable,
    ctx: &QuiverContext,
) -> Result<Decomposition> {
    let pair = normalize_pair(a, b, ctx);
    let raw = match CgCase::classify(pair, ctx) {
        CgCase::Generic => generic_summands(pair.left, pair.right),
        CgCase::RootOfUnity { d, e, f, m, h, .. } => {
            if f > h && e >= m {
                return Err(Error::InternalFormula(format!(
                    "l = {}, m = {}: f > h requires e < m",
                    pair.left, pair.right
                )));
            }
            root_of_unity_summands(pair.left, pair.right, d)
        }
    };
    let mut out = Decomposition::new();
    for (offset, len) in raw {
        if len < 0 {
            return Err(Error::InternalFormula(format!(
                "negative length {len} at offset {offset} for V(0,{}) ⊗ V(0,{})",
                pair.left, pair.right
            )));
        }
        out.add(
            Indecomposable::new(ctx.normalize_vertex(pair.shift + offset), len as usize),
            1,
        );
    }
    Ok(out)
}
