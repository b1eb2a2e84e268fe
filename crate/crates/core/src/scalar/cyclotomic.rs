//! Cyclotomic fields `Q(ζ_N) = Q[x] / Φ_N(x)`.
//!
//! Elements are stored as coefficient vectors of length `deg Φ_N` with
//! respect to the power basis `1, ζ, …, ζ^{φ(N)-1}`. Every value is kept
//! fully reduced modulo `Φ_N`, so equality is coefficient-wise.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// The field `Q(ζ_N)` together with its defining polynomial `Φ_N`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of `Φ_N`, lowest degree first. Monic.
    modulus: Vec<BigInt>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::InvalidQ("cyclotomic order must be positive".into()));
        }
        Ok(Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduce an arbitrary polynomial in `ζ` to canonical form.
    pub(crate) fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let deg = self.degree();
        if coeffs.len() > deg {
            for top in (deg..coeffs.len()).rev() {
                if coeffs[top].is_zero() {
                    continue;
                }
                let lead = core::mem::take(&mut coeffs[top]);
                let base = top - deg;
                for (j, c) in self.modulus[..deg].iter().enumerate() {
                    if !c.is_zero() {
                        coeffs[base + j] -= &lead * Rational::from_integer(c.clone());
                    }
                }
            }
        }
        coeffs.resize(deg, Rational::zero());
        coeffs
    }

    /// Coefficient vector of `ζ_N^k` (any integer `k`).
    pub(crate) fn zeta_pow_coeffs(&self, k: i64) -> Vec<Rational> {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        self.reduce(coeffs)
    }
}

/// `Φ_n`, computed as `(x^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_exact_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of `Q(ζ_N)` in canonical (reduced) form.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn new(field: Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        let coeffs = field.reduce(coeffs);
        Cyclotomic { field, coeffs }
    }

    pub(crate) fn from_reduced(field: Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        Cyclotomic { field, coeffs }
    }

    pub fn constant(field: Arc<CyclotomicField>, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = c;
        Cyclotomic { field, coeffs }
    }

    pub fn zeta_pow(field: Arc<CyclotomicField>, k: i64) -> Self {
        let coeffs = field.zeta_pow_coeffs(k);
        Cyclotomic { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order == other.field.order {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_reduced(self.field.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::from_reduced(self.field.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_reduced(
            self.field.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    pub fn add_rational(&self, c: &Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        Self::from_reduced(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let deg = self.field.degree();
        if deg == 1 {
            return Ok(Self::from_reduced(
                self.field.clone(),
                vec![&self.coeffs[0] * &other.coeffs[0]],
            ));
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_reduced(
            self.field.clone(),
            self.field.reduce(prod),
        ))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_rational() {
            return Ok(Self::constant(self.field.clone(), c.recip()));
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::new(self.field.clone(), inv))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "z{}^{k}", self.field.order)?,
                _ => write!(f, "{abs}*z{}^{k}", self.field.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = den[dd].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
            match b.get(k) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` in `Q[x]`, if `gcd(a, m) = 1`.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.into_iter().map(|x| x * &c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), [-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), [1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(3)), [1, 1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), [1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), [1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), [1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
        assert!(ints(&cyclotomic_polynomial(105)).contains(&-2));
    }

    #[test]
    fn zeta_powers_wrap() {
        let f = CyclotomicField::new(6).unwrap();
        let z = Cyclotomic::zeta_pow(f.clone(), 1);
        let mut acc = Cyclotomic::constant(f.clone(), Rational::one());
        for _ in 0..6 {
            acc = acc.mul(&z).unwrap();
        }
        assert_eq!(acc, Cyclotomic::constant(f.clone(), Rational::one()));
        assert_eq!(
            Cyclotomic::zeta_pow(f.clone(), -1),
            Cyclotomic::zeta_pow(f, 5)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CyclotomicField::new(5).unwrap();
        let a = Cyclotomic::new(
            f.clone(),
            vec![
                Rational::from_integer(2.into()),
                Rational::new(1.into(), 3.into()),
                Rational::zero(),
                Rational::from_integer((-7).into()),
            ],
        );
        let prod = a.mul(&a.inverse().unwrap()).unwrap();
        assert_eq!(prod, Cyclotomic::constant(f, Rational::one()));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = Cyclotomic::zeta_pow(CyclotomicField::new(3).unwrap(), 1);
        let b = Cyclotomic::zeta_pow(CyclotomicField::new(4).unwrap(), 1);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = CyclotomicField::new(3).unwrap();
        let zero = Cyclotomic::constant(f, Rational::zero());
        assert_eq!(zero.inverse(), Err(Error::DivisionByZero));
    }
}
