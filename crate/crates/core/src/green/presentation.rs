//! The polynomial presentations of the Green ring.
//!
//! `x ↦ [V(1,0)]`, `y ↦ [V(0,1)]` and, when `q` has order `d ≥ 2`,
//! `z ↦ [V(0,d)]`. The classes `[V(i,k)]` correspond to the basis
//! `x^i f_k` of the quotient ring.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::fib::{fib2_table, fib3_table};
use super::poly::{Monomial, PresentedPoly, RingTag};
use super::{gr_mul, GreenElement};
use crate::comodule::Indecomposable;
use crate::error::{Error, Result};
use crate::quiver::{QuiverContext, QuiverKind};
use crate::report::Report;

/// The polynomial ring carrying the presentation for `ctx`.
pub fn ring_tag(ctx: &QuiverContext) -> RingTag {
    match (ctx.kind(), ctx.root_order().is_some()) {
        (QuiverKind::Cyclic(_), false) => RingTag::Poly2,
        (QuiverKind::Cyclic(_), true) => RingTag::Poly3,
        (QuiverKind::InfiniteLinear, false) => RingTag::Laurent2,
        (QuiverKind::InfiniteLinear, true) => RingTag::Laurent3,
    }
}

struct FibCache {
    tag: RingTag,
    d: Option<usize>,
    table: Vec<PresentedPoly>,
}

impl FibCache {
    fn new(ctx: &QuiverContext) -> Self {
        FibCache {
            tag: ring_tag(ctx),
            d: ctx.root_order().map(|d| d as usize),
            table: Vec::new(),
        }
    }

    fn get(&mut self, k: usize) -> &PresentedPoly {
        if k >= self.table.len() {
            let want = (k + 1).max(2 * self.table.len());
            self.table = match self.d {
                Some(d) => fib3_table(self.tag, want, d),
                None => fib2_table(self.tag, want),
            };
        }
        &self.table[k]
    }
}

fn reduce(p: PresentedPoly, ctx: &QuiverContext) -> PresentedPoly {
    match ctx.kind() {
        QuiverKind::Cyclic(n) => p.reduce_x_mod(n),
        QuiverKind::InfiniteLinear => p,
    }
}

/// `x^i f_k` in the ring of `ctx`.
pub fn basis_poly(v: Indecomposable, ctx: &QuiverContext) -> PresentedPoly {
    let mut cache = FibCache::new(ctx);
    reduce(
        cache
            .get(v.length)
            .mul_monomial(Monomial::new(v.vertex, 0, 0), 1),
        ctx,
    )
}

/// `Σ c_{i,k} [V(i,k)] ↦ Σ c_{i,k} x^i f_k`.
pub fn to_poly(a: &GreenElement, ctx: &QuiverContext) -> PresentedPoly {
    let mut cache = FibCache::new(ctx);
    let mut out = PresentedPoly::zero(cache.tag);
    for (v, c) in a.normalized(ctx).iter() {
        out = out.add(
            &cache
                .get(v.length)
                .mul_monomial(Monomial::new(v.vertex, 0, 0), c),
        );
    }
    reduce(out, ctx)
}

/// Reduce a polynomial modulo the presentation ideal to a combination of
/// basis elements `x^i f_k` and return it as a Green ring element.
///
/// The highest-order term `h(x) y^l z^m` is cancelled by `h(x) f_{md+l}`
/// when `l < d`, and otherwise by `h(x) (y^{l-d+1} - (1+x)^{l-d+1}) f_{(m+1)d-1}`,
/// which lies in the ideal. Without `z` the term `h(x) y^l` is cancelled by
/// `h(x) f_l`.
pub fn from_poly(p: &PresentedPoly, ctx: &QuiverContext) -> Result<GreenElement> {
    let tag = ring_tag(ctx);
    if p.tag() != tag {
        return Err(Error::RingTagMismatch {
            expected: tag.name(),
            found: p.tag().name(),
        });
    }
    let mut cache = FibCache::new(ctx);
    let d = cache.d;
    let mut residue = reduce(p.clone(), ctx);
    let mut out = GreenElement::zero();
    let w = residue.weight(d.unwrap_or(1) as u32) as usize;
    let bound = (w + 1) * (w / d.unwrap_or(1) + 1) + 1;
    let mut steps = 0;
    while let Some(top) = residue.order() {
        steps += 1;
        if steps > bound {
            return Err(Error::ReductionDiverged(bound));
        }
        let h = residue.leading_coefficients();
        let (l, m) = (top.l as usize, top.m as usize);
        let cancel = match d {
            None => {
                for (&i, &c) in &h {
                    out.add_term(Indecomposable::new(i, l), c);
                }
                cache.get(l).clone()
            }
            Some(d) if l < d => {
                for (&i, &c) in &h {
                    out.add_term(Indecomposable::new(i, m * d + l), c);
                }
                cache.get(m * d + l).clone()
            }
            Some(d) => {
                let a = (l - d + 1) as u32;
                let y = PresentedPoly::y(tag);
                let one_x = PresentedPoly::one(tag).add(&PresentedPoly::x(tag));
                y.pow(a).sub(&one_x.pow(a)).mul(cache.get((m + 1) * d - 1))
            }
        };
        let mut hx = PresentedPoly::zero(tag);
        for (&i, &c) in &h {
            hx.add_term(Monomial::new(i, 0, 0), c);
        }
        residue = reduce(residue.sub(&hx.mul(&cancel)), ctx);
        if residue.order().is_some_and(|o| o >= top) {
            return Err(Error::InternalFormula(format!(
                "reduction did not lower the order below {top:?}"
            )));
        }
    }
    Ok(out.normalized(ctx))
}

/// The ring map from the polynomial ring to the Green ring, computed by
/// Green ring multiplication of the generator images.
pub fn evaluate(p: &PresentedPoly, ctx: &QuiverContext) -> Result<GreenElement> {
    let d = ctx.root_order().map(|d| d as usize);
    if p.tag() != ring_tag(ctx) {
        return Err(Error::RingTagMismatch {
            expected: ring_tag(ctx).name(),
            found: p.tag().name(),
        });
    }
    let y = GreenElement::basis(Indecomposable::new(0, 1));
    let z = GreenElement::basis(Indecomposable::new(0, d.unwrap_or(0)));
    let mut y_pows: BTreeMap<u32, GreenElement> = BTreeMap::new();
    let mut z_pows: BTreeMap<u32, GreenElement> = BTreeMap::new();
    let mut out = GreenElement::zero();
    for (mono, c) in p.terms() {
        let x_part = x_power(mono.x, ctx)?;
        if let Entry::Vacant(e) = y_pows.entry(mono.y) {
            e.insert(y.pow(mono.y, ctx)?);
        }
        if let Entry::Vacant(e) = z_pows.entry(mono.z) {
            e.insert(z.pow(mono.z, ctx)?);
        }
        let yz = gr_mul(&y_pows[&mono.y], &z_pows[&mono.z], ctx)?;
        out = out.add(&gr_mul(&x_part, &yz, ctx)?.scale(c));
    }
    Ok(out)
}

fn x_power(e: i64, ctx: &QuiverContext) -> Result<GreenElement> {
    let step = GreenElement::basis(Indecomposable::new(e.signum(), 0).normalized(ctx));
    step.pow(e.unsigned_abs() as u32, ctx)
}

/// Check that the ideal generators vanish in the Green ring and that the
/// basis correspondence is a ring isomorphism on the supplied elements.
pub fn verify_presentation(ctx: &QuiverContext, battery: &[GreenElement]) -> Result<Report> {
    let tag = ring_tag(ctx);
    let mut report = Report::default();
    let x = PresentedPoly::x(tag);
    let y = PresentedPoly::y(tag);
    let one = PresentedPoly::one(tag);
    match ctx.kind() {
        QuiverKind::Cyclic(n) => {
            let rel = x.pow(n).sub(&one);
            report.push(format!("x^{n} - 1 = 0"), evaluate(&rel, ctx)?.is_zero());
        }
        QuiverKind::InfiniteLinear => {
            let x_inv = PresentedPoly::term(tag, 1, Monomial::new(-1, 0, 0));
            let rel = x.mul(&x_inv).sub(&one);
            report.push("x x^-1 - 1 = 0", evaluate(&rel, ctx)?.is_zero());
        }
    }
    if let Some(d) = ctx.root_order() {
        let d = d as usize;
        let f = FibCache::new(ctx).get(d - 1).clone();
        let rel = y.sub(&x).sub(&one).mul(&f);
        report.push(
            format!("(y - x - 1) f_{} = 0", d - 1),
            evaluate(&rel, ctx)?.is_zero(),
        );
        report.push(
            format!("(y - x - 1) f_{} reduces to 0", d - 1),
            from_poly(&rel, ctx)?.is_zero(),
        );
    }
    let mut round_trip = true;
    let mut evaluation = true;
    let mut injective = true;
    let mut multiplicative = true;
    let images: Vec<PresentedPoly> = battery.iter().map(|a| to_poly(a, ctx)).collect();
    for (a, pa) in battery.iter().zip(&images) {
        let a = a.normalized(ctx);
        round_trip &= from_poly(pa, ctx)? == a;
        evaluation &= evaluate(pa, ctx)? == a;
    }
    for (k, (a, pa)) in battery.iter().zip(&images).enumerate() {
        let Some((b, pb)) = battery.iter().zip(&images).nth((k + 1) % battery.len()) else {
            continue;
        };
        injective &= (pa == pb) == (a.normalized(ctx) == b.normalized(ctx));
        let direct = gr_mul(a, b, ctx)?;
        multiplicative &= from_poly(&reduce(pa.mul(pb), ctx), ctx)? == direct;
    }
    report.push("from_poly(to_poly(a)) = a", round_trip);
    report.push("evaluate(to_poly(a)) = a", evaluation);
    report.push("to_poly is injective", injective);
    report.push("to_poly(a) to_poly(b) reduces to a b", multiplicative);
    Ok(report)
}

fn check_identity_args(i: usize, m: usize, d: usize) {
    assert!(
        d >= 2 && (1..d).contains(&i) && m >= 1,
        "need 1 <= i < d and m >= 1"
    );
}

/// `f_i f_{md} - f_{md+i} - Σ_{j=1}^{i} x^j f_{md-1}` in `Z[x,y,z]`.
fn identity_defect(i: usize, m: usize, d: usize) -> PresentedPoly {
    let t = fib3_table(RingTag::Poly3, m * d + i, d);
    let mut defect = t[i].mul(&t[m * d]).sub(&t[m * d + i]);
    for j in 1..=i {
        defect = defect.sub(&t[m * d - 1].mul_monomial(Monomial::new(j as i64, 0, 0), 1));
    }
    defect
}

/// `f_i f_{md} = f_{md+i} + Σ_{j=1}^{i} x^j f_{md-1}` modulo the ideal
/// generated by `(y - x - 1) f_{d-1}`, for `1 ≤ i ≤ d-1`. The check is an
/// exact division of the defect by `(y - x - 1) f_{d-1}`.
pub fn fib_identity_check(i: usize, m: usize, d: usize) -> bool {
    check_identity_args(i, m, d);
    let tag = RingTag::Poly3;
    let generator = PresentedPoly::y(tag)
        .sub(&PresentedPoly::x(tag))
        .sub(&PresentedPoly::one(tag))
        .mul(&fib3_table(tag, d - 1, d)[d - 1]);
    divide_in_y(&identity_defect(i, m, d), &generator)
        .1
        .is_zero()
}

/// The same identity read literally in `Z[x,y,z]`. It holds for `i = 1`
/// and fails for every `i ≥ 2`.
pub fn fib_identity_literal(i: usize, m: usize, d: usize) -> bool {
    check_identity_args(i, m, d);
    identity_defect(i, m, d).is_zero()
}

/// `f_i f_{md} = f_{md+i} + x f_{i-1} f_{md-1}` exactly in `Z[x,y,z]`.
pub fn fib_product_identity(i: usize, m: usize, d: usize) -> bool {
    check_identity_args(i, m, d);
    let t = fib3_table(RingTag::Poly3, m * d + i, d);
    let lhs = t[i].mul(&t[m * d]);
    let rhs = t[m * d + i].add(
        &t[i - 1]
            .mul(&t[m * d - 1])
            .mul_monomial(Monomial::new(1, 0, 0), 1),
    );
    lhs == rhs
}

/// Division by a polynomial whose top power of `y` has coefficient exactly 1,
/// with coefficients in `Z[x,x⁻¹,z]`. Returns `(quotient, remainder)`.
fn divide_in_y(p: &PresentedPoly, divisor: &PresentedPoly) -> (PresentedPoly, PresentedPoly) {
    let tag = p.tag();
    let deg = divisor
        .terms()
        .map(|(mono, _)| mono.y)
        .max()
        .expect("nonzero divisor");
    let mut quot = PresentedPoly::zero(tag);
    let mut rem = p.clone();
    while let Some(top) = rem.terms().map(|(mono, _)| mono.y).max() {
        if top < deg {
            break;
        }
        let mut lead = PresentedPoly::zero(tag);
        for (mono, c) in rem.terms().filter(|(mono, _)| mono.y == top) {
            lead.add_term(Monomial::new(mono.x, top - deg, mono.z), c);
        }
        quot = quot.add(&lead);
        rem = rem.sub(&lead.mul(divisor));
    }
    (quot, rem)
}

/// Whether `f_{d-1}` divides `f_{md-1}`, by long division in `y` over `Z[x,z]`.
pub fn poly_divides(d: usize, m: usize) -> bool {
    assert!(d >= 2 && m >= 1, "need d >= 2 and m >= 1");
    let t = fib3_table(RingTag::Poly3, m * d - 1, d);
    divide_in_y(&t[m * d - 1], &t[d - 1]).1.is_zero()
}
