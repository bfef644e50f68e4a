//! Exact rational exponents.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// A point on a cuspidal line, measured in units of the line's twist.
///
/// Always kept in lowest terms with a positive denominator, so derived
/// equality and hashing agree with numeric equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent(Ratio<i64>);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Ratio::new_raw(0, 1));
    pub const ONE: Exponent = Exponent(Ratio::new_raw(1, 1));
    pub const HALF: Exponent = Exponent(Ratio::new_raw(1, 2));

    /// Builds `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Exponent(Ratio::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        Exponent(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `Some(n)` when the value is the integer `n`.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn floor(&self) -> Exponent {
        Exponent(self.0.floor())
    }

    /// Fractional part in `[0, 1)`: the coset of the point modulo the integers.
    pub fn fract(&self) -> Exponent {
        *self - self.floor()
    }

    pub fn abs(&self) -> Exponent {
        Exponent(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent::int(n)
    }
}

impl From<Ratio<i64>> for Exponent {
    fn from(r: Ratio<i64>) -> Self {
        Exponent(r)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Add<i64> for Exponent {
    type Output = Exponent;
    fn add(self, rhs: i64) -> Exponent {
        Exponent(self.0 + rhs)
    }
}

impl Sub<i64> for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: i64) -> Exponent {
        Exponent(self.0 - rhs)
    }
}

impl AddAssign for Exponent {
    fn add_assign(&mut self, rhs: Exponent) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Exponent {
    fn sub_assign(&mut self, rhs: Exponent) {
        self.0 -= rhs.0;
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p` or `p/q` with an optional leading sign on `p`.
///
/// Non-canonical input such as `2/4` or `3/-6` is accepted and reduced.
impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_at(s, 0)
    }
}

pub(crate) fn parse_at(s: &str, offset: usize) -> Result<Exponent, Error> {
    let t = s.trim();
    let lead = offset + (s.len() - s.trim_start().len());
    if t.is_empty() {
        return Err(Error::parse(lead, "expected a rational number"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let numer: i64 = num
        .parse()
        .map_err(|_| Error::parse(lead, format!("bad integer `{num}`")))?;
    let denom: i64 = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(lead + num.len() + 1, format!("bad integer `{d}`")))?,
        None => 1,
    };
    if denom == 0 {
        return Err(Error::parse(lead + num.len() + 1, "zero denominator"));
    }
    Ok(Exponent::new(numer, denom))
}

impl serde::Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
