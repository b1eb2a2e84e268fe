use greenforge_core::{
    basis_poly, evaluate, fib2, fib2_closed, fib3, fib_identity_check, fib_identity_literal,
    fib_product_identity, from_poly, gr_mul, poly_divides, ring_tag, to_poly, verify_presentation,
    GreenElement, Indecomposable, Monomial, MonomialOrder, PresentedPoly, QSpec, QuiverContext,
    Rational, RingTag,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn v(i: i64, l: usize) -> Indecomposable {
    Indecomposable::new(i, l)
}

fn b(i: i64, l: usize) -> GreenElement {
    GreenElement::basis(v(i, l))
}

fn contexts() -> Vec<QuiverContext> {
    let two = QSpec::from_rational(Rational::from_integer(BigInt::from(2))).unwrap();
    vec![
        QuiverContext::cyclic(1, QSpec::One).unwrap(),
        QuiverContext::cyclic(3, QSpec::One).unwrap(),
        QuiverContext::cyclic(2, QSpec::root_of_unity(2, 1).unwrap()).unwrap(),
        QuiverContext::cyclic(6, QSpec::root_of_unity(3, 1).unwrap()).unwrap(),
        QuiverContext::cyclic(4, QSpec::root_of_unity(4, 1).unwrap()).unwrap(),
        QuiverContext::infinite(two).unwrap(),
        QuiverContext::infinite(QSpec::root_of_unity(3, 1).unwrap()).unwrap(),
    ]
}

fn element() -> impl Strategy<Value = Vec<(i64, usize, i64)>> {
    prop::collection::vec((-3i64..4, 0usize..8, -3i64..4), 0..6)
}

fn build(items: &[(i64, usize, i64)], ctx: &QuiverContext) -> GreenElement {
    let mut out = GreenElement::zero();
    for &(i, l, c) in items {
        out.add_term(v(i, l), c);
    }
    out.normalized(ctx)
}

fn poly(items: &[(i64, u32, u32, i64)], tag: RingTag) -> PresentedPoly {
    let mut p = PresentedPoly::zero(tag);
    for &(x, y, z, c) in items {
        let x = if tag.is_laurent() { x } else { x.rem_euclid(4) };
        let z = if tag.has_z() { z } else { 0 };
        p.add_term(Monomial::new(x, y, z), c);
    }
    p
}

#[test]
fn gr_mul_examples() {
    let ctx = QuiverContext::cyclic(2, QSpec::root_of_unity(2, 1).unwrap()).unwrap();
    assert_eq!(
        gr_mul(&b(0, 1), &b(0, 1), &ctx).unwrap(),
        b(0, 1).add(&b(1, 1))
    );
    assert_eq!(gr_mul(&b(1, 0), &b(0, 1), &ctx).unwrap(), b(1, 1));
    let rel = b(0, 1).sub(&b(1, 0)).sub(&b(0, 0));
    assert!(gr_mul(&rel, &b(0, 1), &ctx).unwrap().is_zero());
    for n in 1..7 {
        let ctx = QuiverContext::cyclic(n, QSpec::One).unwrap();
        assert_eq!(b(1, 0).pow(n, &ctx).unwrap(), GreenElement::one());
    }
}

#[test]
fn fib_examples() {
    let t = RingTag::Poly2;
    assert_eq!(fib2(0), PresentedPoly::one(t));
    assert_eq!(fib2(1), PresentedPoly::y(t));
    assert_eq!(fib2(2), PresentedPoly::parse(t, "y^2 - x").unwrap());
    assert_eq!(
        fib2(4),
        PresentedPoly::parse(t, "y^4 - 3*x*y^2 + x^2").unwrap()
    );
    let t = RingTag::Poly3;
    for d in 2..6 {
        assert_eq!(fib3(d, d), PresentedPoly::z(t));
        let expect = PresentedPoly::y(t)
            .mul(&PresentedPoly::z(t))
            .sub(&PresentedPoly::x(t).mul(&fib3(d - 1, d)));
        assert_eq!(fib3(d + 1, d), expect);
    }
    assert_eq!(
        fib3(4, 2),
        PresentedPoly::parse(t, "z^2 - x*z - x^2").unwrap()
    );
}

#[test]
fn fib2_recursion_matches_closed_form() {
    for k in 0..=30 {
        assert_eq!(fib2(k), fib2_closed(k), "k = {k}");
    }
}

#[test]
fn fib3_is_z_free_below_d() {
    for d in 2..=6 {
        for k in 0..d {
            assert_eq!(fib3(k, d), fib2(k).retag(RingTag::Poly3).unwrap());
        }
    }
}

#[test]
fn highest_order_term_is_monic() {
    for d in 2..=5 {
        for k in 0..=4 * d {
            let (m, l) = (k / d, k % d);
            let f = fib3(k, d);
            let order = MonomialOrder {
                m: m as u32,
                l: l as u32,
            };
            assert_eq!(f.order(), Some(order), "d={d} k={k}");
            let lead = f.leading_coefficients();
            assert_eq!(lead.len(), 1);
            assert_eq!(lead.get(&0), Some(&1));
        }
    }
}

#[test]
fn fib_identities() {
    for d in 2..=5 {
        for m in 1..=4 {
            assert!(poly_divides(d, m), "d={d} m={m}");
            for i in 1..d {
                assert!(fib_identity_check(i, m, d), "i={i} m={m} d={d}");
                assert!(fib_product_identity(i, m, d), "i={i} m={m} d={d}");
                assert_eq!(fib_identity_literal(i, m, d), i == 1, "i={i} m={m} d={d}");
            }
        }
    }
    let t = RingTag::Poly3;
    assert_eq!(fib3(3, 2), PresentedPoly::parse(t, "y*z - x*y").unwrap());
}

#[test]
fn binomial_relation_behind_the_ideal() {
    for d in 2..=4u32 {
        let ctx = QuiverContext::infinite(QSpec::root_of_unity(d, 1).unwrap()).unwrap();
        for m in 1..=3usize {
            let tail = b(0, m * d as usize - 1);
            for l in 0..=4u32 {
                let lhs = gr_mul(&b(0, 1).pow(l, &ctx).unwrap(), &tail, &ctx).unwrap();
                let mut rhs = GreenElement::zero();
                let mut c: i64 = 1;
                for j in 0..=l as i64 {
                    rhs.add_term(v(j, m * d as usize - 1), c);
                    c = c * (l as i64 - j) / (j + 1);
                }
                assert_eq!(lhs, rhs, "d={d} m={m} l={l}");
            }
        }
    }
}

#[test]
fn presentation_examples() {
    let q1 = QuiverContext::cyclic(4, QSpec::One).unwrap();
    assert_eq!(to_poly(&b(0, 0), &q1), PresentedPoly::one(RingTag::Poly2));
    assert_eq!(
        to_poly(&b(2, 3), &q1),
        PresentedPoly::parse(RingTag::Poly2, "x^2*y^3 - 2*x^3*y").unwrap()
    );
    assert_eq!(
        from_poly(&PresentedPoly::parse(RingTag::Poly2, "x^4").unwrap(), &q1).unwrap(),
        b(0, 0)
    );
    let y2 = PresentedPoly::parse(RingTag::Poly2, "y^2").unwrap();
    assert_eq!(from_poly(&y2, &q1).unwrap(), b(0, 2).add(&b(1, 0)));
    assert_eq!(
        from_poly(&y2, &q1).unwrap(),
        gr_mul(&b(0, 1), &b(0, 1), &q1).unwrap()
    );
    for d in [2u32, 3, 4, 6] {
        for ctx in [
            QuiverContext::cyclic(d * 2, QSpec::root_of_unity(d, 1).unwrap()).unwrap(),
            QuiverContext::infinite(QSpec::root_of_unity(d, 1).unwrap()).unwrap(),
        ] {
            let tag = ring_tag(&ctx);
            assert_eq!(
                to_poly(&b(1, d as usize), &ctx),
                PresentedPoly::x(tag).mul(&PresentedPoly::z(tag))
            );
            let gen = PresentedPoly::y(tag)
                .sub(&PresentedPoly::x(tag))
                .sub(&PresentedPoly::one(tag))
                .mul(&basis_poly(v(0, d as usize - 1), &ctx));
            assert!(from_poly(&gen, &ctx).unwrap().is_zero());
            assert!(evaluate(&gen, &ctx).unwrap().is_zero());
        }
    }
    let q1 = QuiverContext::cyclic(2, QSpec::One).unwrap();
    let wrong = PresentedPoly::z(RingTag::Poly3);
    assert!(from_poly(&wrong, &q1).is_err());
}

#[test]
fn verify_presentation_reports_pass() {
    for ctx in contexts() {
        let battery: Vec<GreenElement> = (0..6)
            .map(|k| build(&[(k, k as usize, 1), (k - 1, 2 * k as usize, -2)], &ctx))
            .collect();
        let report = verify_presentation(&ctx, &battery).unwrap();
        assert!(report.all_passed(), "{ctx:?}\n{report}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in element(), bb in element(), c in element(), pick in 0usize..7) {
        let ctx = contexts().swap_remove(pick);
        let (a, bb, c) = (build(&a, &ctx), build(&bb, &ctx), build(&c, &ctx));
        let mul = |x: &GreenElement, y: &GreenElement| gr_mul(x, y, &ctx).unwrap();
        prop_assert_eq!(mul(&a, &bb), mul(&bb, &a));
        prop_assert_eq!(mul(&mul(&a, &bb), &c), mul(&a, &mul(&bb, &c)));
        prop_assert_eq!(mul(&GreenElement::one(), &a), a.clone());
        prop_assert_eq!(mul(&a, &bb.add(&c)), mul(&a, &bb).add(&mul(&a, &c)));
    }

    #[test]
    fn basis_correspondence(a in element(), bb in element(), pick in 0usize..7) {
        let ctx = contexts().swap_remove(pick);
        let (a, bb) = (build(&a, &ctx), build(&bb, &ctx));
        let (pa, pb) = (to_poly(&a, &ctx), to_poly(&bb, &ctx));
        prop_assert_eq!(from_poly(&pa, &ctx).unwrap(), a.clone());
        prop_assert_eq!(evaluate(&pa, &ctx).unwrap(), a.clone());
        let product = gr_mul(&a, &bb, &ctx).unwrap();
        prop_assert_eq!(from_poly(&pa.mul(&pb), &ctx).unwrap(), product.clone());
        prop_assert_eq!(from_poly(&to_poly(&product, &ctx), &ctx).unwrap(), product);
    }

    #[test]
    fn reduction_is_identity_modulo_ideal(
        terms in prop::collection::vec((-3i64..4, 0u32..7, 0u32..3, -3i64..4), 0..6),
        pick in 0usize..7,
    ) {
        let ctx = contexts().swap_remove(pick);
        let p = poly(&terms, ring_tag(&ctx));
        let reduced = from_poly(&p, &ctx).unwrap();
        let back = to_poly(&reduced, &ctx);
        prop_assert!(from_poly(&back.sub(&p), &ctx).unwrap().is_zero());
        prop_assert_eq!(evaluate(&p, &ctx).unwrap(), reduced);
    }
}
