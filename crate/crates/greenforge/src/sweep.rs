//! Closed form versus oracle over all pairs within bounds.

use greenforge_core::oracle::RankProfile;
use greenforge_core::{
    decompose_closed, decompose_rep, tensor_rep, Decomposition, Indecomposable, QuiverContext,
    Result,
};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMismatch {
    pub left: Indecomposable,
    pub right: Indecomposable,
    pub closed: Option<Decomposition>,
    pub oracle: Option<Decomposition>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub pairs: usize,
    pub mismatches: usize,
    /// Pairs whose closed form breaks total or per-vertex dimension counts.
    pub conservation_failures: usize,
    /// Pairs whose oracle output, rebuilt as a direct sum, has different path ranks.
    pub round_trip_failures: usize,
    pub first_mismatch: Option<PairMismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.conservation_failures == 0 && self.round_trip_failures == 0
    }
}

/// Runs `f` on a pool sized by `GREENFORGE_THREADS` when that is set.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("GREENFORGE_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

/// All `(V(i,l), V(j,m))` with `i, j ∈ vertices` and `l, m ≤ max_len`,
/// ordered by `(l, m, i, j)`.
pub fn pairs(vertices: &[i64], max_len: usize) -> Vec<(Indecomposable, Indecomposable)> {
    let mut out = Vec::with_capacity((max_len + 1).pow(2) * vertices.len().pow(2));
    for l in 0..=max_len {
        for m in 0..=max_len {
            for &i in vertices {
                for &j in vertices {
                    out.push((Indecomposable::new(i, l), Indecomposable::new(j, m)));
                }
            }
        }
    }
    out
}

struct PairOutcome {
    mismatch: Option<PairMismatch>,
    conserved: bool,
    round_trip: bool,
}

fn check_pair(
    ctx: &QuiverContext,
    a: Indecomposable,
    b: Indecomposable,
    round_trip: bool,
) -> PairOutcome {
    let rep = tensor_rep(a, b, ctx);
    let closed = decompose_closed(a, b, ctx).ok();
    let oracle = decompose_rep(&rep).ok();
    let conserved = closed.as_ref().is_some_and(|d| {
        d.total_dimension() == a.dimension() * b.dimension()
            && &d.graded_dimension(ctx) == rep.vertex_dims()
    });
    let round_trip = !round_trip
        || oracle.as_ref().is_some_and(|d| {
            match (RankProfile::of(&d.realize(ctx)), RankProfile::of(&rep)) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            }
        });
    let mismatch = (closed.is_none() || closed != oracle).then_some(PairMismatch {
        left: a,
        right: b,
        closed,
        oracle,
    });
    PairOutcome {
        mismatch,
        conserved,
        round_trip,
    }
}

/// Compares `decompose_closed` with the oracle on every pair of
/// [`pairs`]`(vertices, max_len)`; `round_trip` also rebuilds each oracle
/// answer and compares path ranks.
pub fn verify_pairs(
    ctx: &QuiverContext,
    vertices: &[i64],
    max_len: usize,
    round_trip: bool,
) -> SweepReport {
    let all = pairs(vertices, max_len);
    let outcomes: Vec<PairOutcome> = with_pool(|| {
        all.par_iter()
            .map(|&(a, b)| check_pair(ctx, a, b, round_trip))
            .collect()
    });
    let mut report = SweepReport {
        pairs: all.len(),
        ..SweepReport::default()
    };
    for o in outcomes {
        report.conservation_failures += usize::from(!o.conserved);
        report.round_trip_failures += usize::from(!o.round_trip);
        if let Some(m) = o.mismatch {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(m);
        }
    }
    report
}

/// Closed-form decompositions of every pair, in [`pairs`] order.
pub fn table_rows(
    ctx: &QuiverContext,
    vertices: &[i64],
    max_len: usize,
) -> Result<Vec<(Indecomposable, Indecomposable, Decomposition)>> {
    pairs(vertices, max_len)
        .into_iter()
        .map(|(a, b)| Ok((a, b, decompose_closed(a, b, ctx)?)))
        .collect()
}
