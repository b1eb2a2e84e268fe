//! The Green ring: integer combinations of classes `[V(i,l)]` multiplied by
//! tensor product, and its polynomial presentations.

mod fib;
mod poly;
mod presentation;

use alloc::collections::BTreeMap;
use core::fmt;

pub use fib::{fib2, fib2_closed, fib3};
pub use poly::{Monomial, MonomialOrder, PresentedPoly, RingTag};
pub use presentation::{
    basis_poly, evaluate, fib_identity_check, fib_identity_literal, fib_product_identity,
    from_poly, poly_divides, ring_tag, to_poly, verify_presentation,
};

use crate::clebsch_gordan::decompose_closed;
use crate::comodule::Indecomposable;
use crate::error::Result;
use crate::oracle::Decomposition;
use crate::quiver::QuiverContext;

/// A finitely supported integer combination of classes `[V(i,l)]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GreenElement {
    terms: BTreeMap<Indecomposable, i64>,
}

impl GreenElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `[V(0,0)]`.
    pub fn one() -> Self {
        Self::basis(Indecomposable::new(0, 0))
    }

    pub fn basis(v: Indecomposable) -> Self {
        Self::term(v, 1)
    }

    pub fn term(v: Indecomposable, c: i64) -> Self {
        let mut g = Self::zero();
        g.add_term(v, c);
        g
    }

    pub fn add_term(&mut self, v: Indecomposable, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(v).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&v);
        }
    }

    pub fn coeff(&self, v: Indecomposable) -> i64 {
        self.terms.get(&v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Indecomposable, i64)> + '_ {
        self.terms.iter().map(|(v, c)| (*v, *c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.add_term(v, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (v, c) in self.iter() {
            out.add_term(v, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    /// Reduce every vertex into the context's vertex set.
    pub fn normalized(&self, ctx: &QuiverContext) -> Self {
        let mut out = Self::zero();
        for (v, c) in self.iter() {
            out.add_term(v.normalized(ctx), c);
        }
        out
    }

    pub fn pow(&self, k: u32, ctx: &QuiverContext) -> Result<Self> {
        let mut acc = GreenElement::one();
        for _ in 0..k {
            acc = gr_mul(&acc, self, ctx)?;
        }
        Ok(acc)
    }
}

impl From<&Decomposition> for GreenElement {
    fn from(d: &Decomposition) -> Self {
        let mut g = GreenElement::zero();
        for (v, m) in d.iter() {
            g.add_term(v, i64::try_from(m).expect("multiplicity fits in i64"));
        }
        g
    }
}

impl FromIterator<(Indecomposable, i64)> for GreenElement {
    fn from_iter<I: IntoIterator<Item = (Indecomposable, i64)>>(iter: I) -> Self {
        let mut g = GreenElement::zero();
        for (v, c) in iter {
            g.add_term(v, c);
        }
        g
    }
}

impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (v, c)) in self.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c.abs()) {
                (0, 1) if c < 0 => write!(f, "-[{v}]")?,
                (0, 1) => write!(f, "[{v}]")?,
                (0, a) => write!(f, "{}{a}[{v}]", if c < 0 { "-" } else { "" })?,
                (_, 1) => write!(f, " {sign} [{v}]")?,
                (_, a) => write!(f, " {sign} {a}[{v}]")?,
            }
        }
        Ok(())
    }
}

/// Product in the Green ring: the bilinear extension of the closed-form
/// tensor decomposition.
pub fn gr_mul(a: &GreenElement, b: &GreenElement, ctx: &QuiverContext) -> Result<GreenElement> {
    let mut out = GreenElement::zero();
    for (u, c) in a.iter() {
        for (v, e) in b.iter() {
            let coeff = c.checked_mul(e).expect("coefficient overflow");
            for (w, m) in decompose_closed(u, v, ctx)?.iter() {
                out.add_term(
                    w,
                    coeff.checked_mul(m as i64).expect("coefficient overflow"),
                );
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QSpec;
    use alloc::string::ToString;

    fn v(i: i64, l: usize) -> GreenElement {
        GreenElement::basis(Indecomposable::new(i, l))
    }

    #[test]
    fn products() {
        let ctx = QuiverContext::cyclic(2, QSpec::root_of_unity(2, 1).unwrap()).unwrap();
        assert_eq!(
            gr_mul(&GreenElement::one(), &v(1, 3), &ctx).unwrap(),
            v(1, 3)
        );
        assert_eq!(
            gr_mul(&v(0, 1), &v(0, 1), &ctx).unwrap(),
            v(0, 1).add(&v(1, 1))
        );
        assert_eq!(gr_mul(&v(1, 0), &v(0, 1), &ctx).unwrap(), v(1, 1));
        let x = v(1, 0).scale(-2).add(&v(0, 2));
        assert_eq!(x.to_string(), "[V(0,2)] - 2[V(1,0)]");
    }
}
