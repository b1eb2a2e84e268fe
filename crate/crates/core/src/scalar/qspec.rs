use alloc::format;
use core::fmt;

use num_integer::Integer;

use super::{Rational, ScalarField, ScalarValue};
use crate::error::{Error, Result};

/// The Hopf-structure parameter `q`, classified by multiplicative order.
///
/// `RootOfUnity { order: N, exponent: k }` denotes `ζ_N^k` with `1 ≤ k < N`,
/// whose multiplicative order is `d = N / gcd(N, k) ≥ 2`. The rational value
/// `-1` is always encoded as `RootOfUnity { order: 2, exponent: 1 }`, so
/// `GenericRational` is never a root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSpec {
    One,
    RootOfUnity { order: u32, exponent: u32 },
    GenericRational(Rational),
}

impl QSpec {
    pub fn root_of_unity(order: u32, exponent: u32) -> Result<Self> {
        if order < 2 || exponent == 0 || exponent >= order {
            return Err(Error::InvalidQ(format!(
                "zeta:{order}:{exponent} needs 1 <= k < N (use q = 1 for the trivial root)"
            )));
        }
        Ok(QSpec::RootOfUnity { order, exponent })
    }

    pub fn from_rational(r: Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidQ("q must be nonzero".into()));
        }
        if r.is_one() {
            Ok(QSpec::One)
        } else if r.abs().is_one() {
            Ok(QSpec::RootOfUnity {
                order: 2,
                exponent: 1,
            })
        } else {
            Ok(QSpec::GenericRational(r))
        }
    }

    /// Multiplicative order `d` of `q`; `None` when `q` is not a root of unity.
    pub fn multiplicative_order(&self) -> Option<u32> {
        match self {
            QSpec::One => Some(1),
            QSpec::RootOfUnity { order, exponent } => Some(order / order.gcd(exponent)),
            QSpec::GenericRational(_) => None,
        }
    }

    /// `q` written as `ζ_d^k'` with `gcd(d, k') = 1`.
    pub fn primitive_form(&self) -> Option<(u32, u32)> {
        match self {
            QSpec::RootOfUnity { order, exponent } => {
                let g = order.gcd(exponent);
                Some((order / g, exponent / g))
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, QSpec::One)
    }

    /// The concrete value of `q` inside `field`.
    ///
    /// A root of unity of order `d` can only be placed in `Q(ζ_A)` for `d | A`.
    pub fn value_in(&self, field: &ScalarField) -> Result<ScalarValue> {
        match self {
            QSpec::One => Ok(field.one()),
            QSpec::GenericRational(r) => Ok(field.from_rational(r.clone())),
            QSpec::RootOfUnity { .. } => {
                let (d, k) = self.primitive_form().expect("root of unity");
                match field.cyclotomic_order() {
                    Some(a) if a % d == 0 => Ok(field
                        .zeta_pow(i64::from(k) * i64::from(a / d))
                        .expect("cyclotomic")),
                    _ => Err(Error::InvalidQ(format!(
                        "{self} does not live in the requested scalar field"
                    ))),
                }
            }
        }
    }
}

impl fmt::Display for QSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpec::One => write!(f, "1"),
            QSpec::RootOfUnity { order, exponent } => write!(f, "zeta:{order}:{exponent}"),
            QSpec::GenericRational(r) => write!(f, "{r}"),
        }
    }
}
