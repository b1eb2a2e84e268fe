//! Seeded random Green ring elements and polynomials.

use greenforge_core::{
    ring_tag, GreenElement, Indecomposable, Monomial, PresentedPoly, QuiverContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` elements with at most five summands, coefficients in `[-3, 3]`
/// and lengths up to `max_len`.
pub fn random_elements(
    ctx: &QuiverContext,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Vec<GreenElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut a = GreenElement::zero();
            for _ in 0..rng.gen_range(0..=5) {
                let v = Indecomposable::new(vertex(ctx, &mut rng), rng.gen_range(0..=max_len));
                a.add_term(v, rng.gen_range(-3..=3));
            }
            a.normalized(ctx)
        })
        .collect()
}

fn vertex(ctx: &QuiverContext, rng: &mut ChaCha8Rng) -> i64 {
    match ctx.vertex_count() {
        Some(n) => rng.gen_range(0..i64::from(n)),
        None => rng.gen_range(-3..=3),
    }
}

/// Random polynomials in the ring attached to `ctx`.
pub fn random_polys(ctx: &QuiverContext, count: usize, seed: u64) -> Vec<PresentedPoly> {
    let tag = ring_tag(ctx);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p = PresentedPoly::zero(tag);
            for _ in 0..rng.gen_range(0..=5) {
                let z = if tag.has_z() { rng.gen_range(0..=2) } else { 0 };
                let mono = Monomial::new(vertex(ctx, &mut rng), rng.gen_range(0..=6), z);
                p.add_term(mono, rng.gen_range(-3..=3));
            }
            p
        })
        .collect()
}
