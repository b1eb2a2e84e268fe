//! Integer polynomials in `x`, `y`, `z` (with `x` possibly inverted).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// The four coefficient rings used by the presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    /// `Z[x,y]`
    Poly2,
    /// `Z[x,y,z]`
    Poly3,
    /// `Z[x,x⁻¹,y]`
    Laurent2,
    /// `Z[x,x⁻¹,y,z]`
    Laurent3,
}

impl RingTag {
    pub fn has_z(self) -> bool {
        matches!(self, RingTag::Poly3 | RingTag::Laurent3)
    }

    pub fn is_laurent(self) -> bool {
        matches!(self, RingTag::Laurent2 | RingTag::Laurent3)
    }

    pub fn name(self) -> &'static str {
        match self {
            RingTag::Poly2 => "Z[x,y]",
            RingTag::Poly3 => "Z[x,y,z]",
            RingTag::Laurent2 => "Z[x,x^-1,y]",
            RingTag::Laurent3 => "Z[x,x^-1,y,z]",
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `ord(x^i y^l z^m) = (m, l)`, compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialOrder {
    pub m: u32,
    pub l: u32,
}

/// `x^x · y^y · z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: i64,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub fn new(x: i64, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder {
            m: self.z,
            l: self.y,
        }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x.checked_add(other.x).expect("exponent overflow"),
            y: self.y.checked_add(other.y).expect("exponent overflow"),
            z: self.z.checked_add(other.z).expect("exponent overflow"),
        }
    }
}

/// Monomials sort by `(m, l)` and then by the power of `x`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.z, self.y, self.x).cmp(&(other.z, other.y, other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with `i64` coefficients in one of the [`RingTag`] rings.
/// Zero coefficients are never stored. Overflowing coefficients panic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedPoly {
    tag: RingTag,
    terms: BTreeMap<Monomial, i64>,
}

impl PresentedPoly {
    pub fn zero(tag: RingTag) -> Self {
        PresentedPoly {
            tag,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(tag: RingTag, c: i64) -> Self {
        Self::term(tag, c, Monomial::ONE)
    }

    pub fn one(tag: RingTag) -> Self {
        Self::constant(tag, 1)
    }

    /// `c · mono`. Panics if the monomial does not belong to the ring.
    pub fn term(tag: RingTag, c: i64, mono: Monomial) -> Self {
        assert!(
            tag.is_laurent() || mono.x >= 0,
            "negative power of x in {tag}"
        );
        assert!(tag.has_z() || mono.z == 0, "z does not occur in {tag}");
        let mut p = Self::zero(tag);
        p.add_term(mono, c);
        p
    }

    pub fn x(tag: RingTag) -> Self {
        Self::term(tag, 1, Monomial::new(1, 0, 0))
    }

    pub fn y(tag: RingTag) -> Self {
        Self::term(tag, 1, Monomial::new(0, 1, 0))
    }

    pub fn z(tag: RingTag) -> Self {
        Self::term(tag, 1, Monomial::new(0, 0, 1))
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    /// The same polynomial viewed in a larger ring.
    pub fn retag(mut self, tag: RingTag) -> Result<Self> {
        let fits = self
            .terms
            .keys()
            .all(|m| (tag.is_laurent() || m.x >= 0) && (tag.has_z() || m.z == 0));
        if !fits {
            return Err(Error::RingTagMismatch {
                expected: tag.name(),
                found: self.tag.name(),
            });
        }
        self.tag = tag;
        Ok(self)
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

    pub fn coeff(&self, mono: Monomial) -> i64 {
        self.terms.get(&mono).copied().unwrap_or(0)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn add_term(&mut self, mono: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&mono);
        }
    }

    fn check_tag(&self, other: &Self) {
        assert_eq!(self.tag, other.tag, "ring mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_tag(other);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.tag);
        for (m, c) in self.terms() {
            out.add_term(m, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_tag(other);
        let mut out = Self::zero(self.tag);
        for (a, c) in self.terms() {
            for (b, e) in other.terms() {
                out.add_term(a.mul(b), c.checked_mul(e).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: Monomial, c: i64) -> Self {
        let mut out = Self::zero(self.tag);
        for (a, e) in self.terms() {
            out.add_term(a.mul(mono), e.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.tag), |acc, _| acc.mul(self))
    }

    /// Apply `x^n = 1`, leaving every `x`-exponent in `0..n`.
    pub fn reduce_x_mod(&self, n: u32) -> Self {
        let mut out = Self::zero(self.tag);
        for (m, c) in self.terms() {
            out.add_term(
                Monomial {
                    x: m.x.rem_euclid(i64::from(n)),
                    ..m
                },
                c,
            );
        }
        out
    }

    /// Order of the highest-order term.
    pub fn order(&self) -> Option<MonomialOrder> {
        self.terms.keys().next_back().map(Monomial::order)
    }

    /// The coefficient `h(x)` of the highest `y^l z^m`, as `x`-exponent → coefficient.
    pub fn leading_coefficients(&self) -> BTreeMap<i64, i64> {
        let Some(top) = self.order() else {
            return BTreeMap::new();
        };
        self.terms
            .iter()
            .rev()
            .take_while(|(m, _)| m.order() == top)
            .map(|(m, c)| (m.x, *c))
            .collect()
    }

    /// Largest `l + d·m` over all monomials.
    pub fn weight(&self, d: u32) -> u64 {
        self.terms
            .keys()
            .map(|m| u64::from(m.y) + u64::from(d) * u64::from(m.z))
            .max()
            .unwrap_or(0)
    }

    /// Parse text like `"3*x^2*y - x^-1*z^2 + 1"`.
    pub fn parse(tag: RingTag, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("cannot parse polynomial {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Self::zero(tag);
        let mut pieces = alloc::vec::Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'+') => (1, &piece[1..]),
                Some(b'-') => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff: i64 = sign;
            let mut mono = Monomial::ONE;
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "x" => mono.x += exp,
                    "y" | "z" => {
                        let e = u32::try_from(exp).map_err(|_| bad("negative power"))?;
                        if base == "y" {
                            mono.y += e;
                        } else {
                            mono.z += e;
                        }
                    }
                    digits => {
                        if factor.contains('^') {
                            return Err(bad("power of a constant"));
                        }
                        let v: i64 = digits.parse().map_err(|_| bad("bad factor"))?;
                        coeff = coeff.checked_mul(v).ok_or_else(|| bad("overflow"))?;
                    }
                }
            }
            if (!tag.is_laurent() && mono.x < 0) || (!tag.has_z() && mono.z > 0) {
                return Err(Error::RingTagMismatch {
                    expected: tag.name(),
                    found: if mono.z > 0 {
                        "a ring with z"
                    } else {
                        "a Laurent ring"
                    },
                });
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

/// Terms from highest to lowest order, each as `c*x^i*y^l*z^m`
/// (`z` omitted in rings without it).
impl fmt::Display for PresentedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let body = if self.tag.has_z() {
                format!("{}*x^{}*y^{}*z^{}", c.abs(), m.x, m.y, m.z)
            } else {
                format!("{}*x^{}*y^{}", c.abs(), m.x, m.y)
            };
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                let lead = if c < 0 { "-" } else { "" };
                write!(f, "{lead}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for RingTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z[x,y]" | "poly2" => Ok(RingTag::Poly2),
            "Z[x,y,z]" | "poly3" => Ok(RingTag::Poly3),
            "Z[x,x^-1,y]" | "laurent2" => Ok(RingTag::Laurent2),
            "Z[x,x^-1,y,z]" | "laurent3" => Ok(RingTag::Laurent3),
            other => Err(Error::Parse(format!("unknown ring {other:?}"))),
        }
    }
}
