//! Generalized Fibonacci polynomials.

use alloc::vec::Vec;

use super::poly::{Monomial, PresentedPoly, RingTag};

/// `f_0 = 1`, `f_1 = y`, `f_k = y f_{k-1} - x f_{k-2}` in `Z[x,y]`.
pub fn fib2(k: usize) -> PresentedPoly {
    fib2_table(RingTag::Poly2, k).pop().expect("nonempty table")
}

/// `f_k = Σ_i (-1)^i C(k-i, i) x^i y^{k-2i}`.
pub fn fib2_closed(k: usize) -> PresentedPoly {
    let mut out = PresentedPoly::zero(RingTag::Poly2);
    for i in 0..=k / 2 {
        let c = binomial(k - i, i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_term(Monomial::new(i as i64, (k - 2 * i) as u32, 0), sign * c);
    }
    out
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

/// `[f_0, …, f_k]` of the two-variable family, in the ring `tag`.
pub(crate) fn fib2_table(tag: RingTag, k: usize) -> Vec<PresentedPoly> {
    let x = PresentedPoly::x(tag);
    let y = PresentedPoly::y(tag);
    let mut out: Vec<PresentedPoly> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let next = match j {
            0 => PresentedPoly::one(tag),
            1 => y.clone(),
            _ => y.mul(&out[j - 1]).sub(&x.mul(&out[j - 2])),
        };
        out.push(next);
    }
    out
}

/// `f_k(x,y,z)` for order `d ≥ 2` in `Z[x,y,z]`.
pub fn fib3(k: usize, d: usize) -> PresentedPoly {
    fib3_table(RingTag::Poly3, k, d)
        .pop()
        .expect("nonempty table")
}

/// `[f_0, …, f_k]` of the three-variable family:
/// `f_k` agrees with the two-variable family for `k < d`, `f_d = z`,
/// `f_k = y f_{k-1} - x f_{k-2}` when `d ∤ k`, and
/// `f_{(m+1)d} = z f_{md} - x f_{(m+1)d-2} - Σ_{i=2}^{d-1} x^i f_{md-1} - x^d f_{(m-1)d}`.
pub(crate) fn fib3_table(tag: RingTag, k: usize, d: usize) -> Vec<PresentedPoly> {
    assert!(d >= 2, "order must be at least 2");
    let x = PresentedPoly::x(tag);
    let y = PresentedPoly::y(tag);
    let z = PresentedPoly::z(tag);
    let mut out: Vec<PresentedPoly> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let next = if j == 0 {
            PresentedPoly::one(tag)
        } else if j == 1 && d > 1 {
            y.clone()
        } else if j == d {
            z.clone()
        } else if j % d != 0 {
            y.mul(&out[j - 1]).sub(&x.mul(&out[j - 2]))
        } else {
            let md = j - d;
            let mut p = z.mul(&out[md]).sub(&x.mul(&out[j - 2]));
            for i in 2..d {
                p = p.sub(&out[md - 1].mul_monomial(Monomial::new(i as i64, 0, 0), 1));
            }
            p.sub(&out[md - d].mul_monomial(Monomial::new(d as i64, 0, 0), 1))
        };
        out.push(next);
    }
    out
}
