//! Exact scalars: rationals and elements of cyclotomic fields, plus the
//! q-combinatorics (q-integers, Gaussian binomials) built on them.

mod cyclotomic;
mod qcomb;
mod qspec;
mod rational;

use alloc::sync::Arc;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use qcomb::{
    q_binomial, q_binomial_row, q_binomial_vanishes, q_factorial, q_int, QBinomialTable,
};
pub use qspec::QSpec;

use crate::error::{Error, Result};

/// Arbitrary-precision rational.
pub use rational::Rational;

/// The field a computation lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarField {
    Rationals,
    Cyclotomic(Arc<CyclotomicField>),
}

impl ScalarField {
    pub fn cyclotomic(order: u32) -> Result<Self> {
        Ok(ScalarField::Cyclotomic(CyclotomicField::new(order)?))
    }

    pub fn zero(&self) -> ScalarValue {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> ScalarValue {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> ScalarValue {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, r: Rational) -> ScalarValue {
        match self {
            ScalarField::Rationals => ScalarValue::Rational(r),
            ScalarField::Cyclotomic(f) => {
                ScalarValue::Cyclotomic(Cyclotomic::constant(f.clone(), r))
            }
        }
    }

    /// `ζ_N^k` for the field's own `N`. Only meaningful for cyclotomic fields.
    pub fn zeta_pow(&self, k: i64) -> Option<ScalarValue> {
        match self {
            ScalarField::Rationals => None,
            ScalarField::Cyclotomic(f) => {
                Some(ScalarValue::Cyclotomic(Cyclotomic::zeta_pow(f.clone(), k)))
            }
        }
    }

    /// Order `N` of the cyclotomic field, `None` for `Q`.
    pub fn cyclotomic_order(&self) -> Option<u32> {
        match self {
            ScalarField::Rationals => None,
            ScalarField::Cyclotomic(f) => Some(f.order()),
        }
    }
}

/// An exact scalar: a rational number or an element of `Q(ζ_N)`.
///
/// Arithmetic between two cyclotomic values requires the same `N`; the
/// operator impls panic otherwise (use the `checked_*` methods to get an
/// error instead). A rational operand is embedded as a constant.
#[derive(Clone)]
pub enum ScalarValue {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
}

impl ScalarValue {
    pub fn zero() -> Self {
        ScalarValue::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        ScalarValue::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        ScalarValue::Rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ScalarValue::Rational(r) => r.is_zero(),
            ScalarValue::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ScalarValue::Rational(r) => r.is_one(),
            ScalarValue::Cyclotomic(c) => c.as_rational().is_some_and(One::is_one),
        }
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ScalarValue::Rational(r) => Some(r),
            ScalarValue::Cyclotomic(c) => c.as_rational(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        use ScalarValue::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Cyclotomic(a), Cyclotomic(b)) => Cyclotomic(a.add(b)?),
            (Cyclotomic(a), Rational(b)) | (Rational(b), Cyclotomic(a)) => {
                Cyclotomic(a.add_rational(b))
            }
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        use ScalarValue::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a - b),
            (Cyclotomic(a), Cyclotomic(b)) => Cyclotomic(a.sub(b)?),
            (Cyclotomic(a), Rational(b)) => Cyclotomic(a.add_rational(&-b)),
            (Rational(a), Cyclotomic(b)) => Cyclotomic(b.neg().add_rational(a)),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        use ScalarValue::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Cyclotomic(a), Cyclotomic(b)) => Cyclotomic(a.mul(b)?),
            (Cyclotomic(a), Rational(b)) | (Rational(b), Cyclotomic(a)) => Cyclotomic(a.scale(b)),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        match self {
            ScalarValue::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            ScalarValue::Rational(r) => Ok(ScalarValue::Rational(r.recip())),
            ScalarValue::Cyclotomic(c) => Ok(ScalarValue::Cyclotomic(c.inverse()?)),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = match self {
            ScalarValue::Rational(_) => ScalarValue::one(),
            ScalarValue::Cyclotomic(c) => {
                ScalarValue::Cyclotomic(Cyclotomic::constant(c.field().clone(), Rational::one()))
            }
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl PartialEq for ScalarValue {
    fn eq(&self, other: &Self) -> bool {
        use ScalarValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a == b,
            (Cyclotomic(a), Cyclotomic(b)) => a == b,
            (Rational(a), Cyclotomic(b)) | (Cyclotomic(b), Rational(a)) => {
                b.as_rational() == Some(a)
            }
        }
    }
}

impl Eq for ScalarValue {}

impl fmt::Debug for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarValue::Rational(r) => write!(f, "{r}"),
            ScalarValue::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

impl From<Rational> for ScalarValue {
    fn from(r: Rational) -> Self {
        ScalarValue::Rational(r)
    }
}

impl From<i64> for ScalarValue {
    fn from(n: i64) -> Self {
        ScalarValue::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a ScalarValue> for &'a ScalarValue {
            type Output = ScalarValue;
            fn $method(self, rhs: &'a ScalarValue) -> ScalarValue {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<ScalarValue> for ScalarValue {
            type Output = ScalarValue;
            fn $method(self, rhs: ScalarValue) -> ScalarValue {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
        impl<'a> $tr<&'a ScalarValue> for ScalarValue {
            type Output = ScalarValue;
            fn $method(self, rhs: &'a ScalarValue) -> ScalarValue {
                (&self).$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &ScalarValue {
    type Output = ScalarValue;
    fn neg(self) -> ScalarValue {
        match self {
            ScalarValue::Rational(r) => ScalarValue::Rational(-r),
            ScalarValue::Cyclotomic(c) => ScalarValue::Cyclotomic(c.neg()),
        }
    }
}

impl Neg for ScalarValue {
    type Output = ScalarValue;
    fn neg(self) -> ScalarValue {
        -&self
    }
}
