//! Integer combinations of multisegment monomials.
//!
//! Monomials multiply by multiset union, so this is the polynomial ring over
//! the integers whose variables are segments. Coefficient arithmetic is
//! checked; the operator impls panic on overflow and the `try_*` methods
//! report it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::multiseg::Multisegment;
use crate::poset::is_leq;
use crate::segment::Segment;
use crate::text::Cursor;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    terms: BTreeMap<Multisegment, i64>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Multisegment::unit(), 1)
    }

    pub fn monomial(m: Multisegment, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(m, coeff);
        }
        RingElement { terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Multisegment, i64)>) -> Result<Self> {
        let mut out = RingElement::zero();
        for (m, c) in terms {
            out.add_term(m, c)?;
        }
        Ok(out)
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

    /// Monomials with their coefficients in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Multisegment) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    fn add_term(&mut self, m: Multisegment, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::Overflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn try_neg(&self) -> Result<RingElement> {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| c.checked_neg().map(|n| (m.clone(), n)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(RingElement { terms })
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.add_term(a.union(b), c)?;
            }
        }
        Ok(out)
    }

    pub fn try_scale(&self, k: i64) -> Result<RingElement> {
        RingElement::from_terms(
            self.terms
                .iter()
                .map(|(m, &c)| c.checked_mul(k).map(|p| (m.clone(), p)).ok_or(Error::Overflow))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Applies a monomial map that is injective, so no terms merge.
    fn map_monomials(&self, f: impl Fn(&Multisegment) -> Multisegment) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(m, &c)| (f(m), c)).collect(),
        }
    }

    /// Shifts every segment of every monomial by `q`.
    pub fn twist(&self, q: Exponent) -> RingElement {
        self.map_monomials(|m| m.shifted(q))
    }

    /// Applies `[b, e] ↦ [-e, -b]` to every segment.
    pub fn reflect(&self) -> RingElement {
        self.map_monomials(Multisegment::reflected)
    }

    /// Polynomial degree: the largest thickness among monomials.
    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(Multisegment::thickness)
            .max()
            .ok_or(Error::ZeroElement)
    }

    /// The monomial strictly above every other monomial, with its coefficient.
    pub fn dominant_monomial(&self) -> Result<(Multisegment, i64)> {
        let mut it = self.terms.iter();
        let (first, &c0) = it.next().ok_or(Error::ZeroElement)?;
        // A dominant monomial is above everything, so it is in particular
        // the unique maximal element; find a maximal one first.
        let mut best = (first, c0);
        for (m, &c) in it {
            if comparable_leq(best.0, m) {
                best = (m, c);
            }
        }
        for m in self.terms.keys() {
            if m != best.0 && !comparable_leq(m, best.0) {
                return Err(Error::NoDominantMonomial(best.0.to_string(), m.to_string()));
            }
        }
        Ok((best.0.clone(), best.1))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring element serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Order on monomials: supports must agree before the poset search runs.
fn comparable_leq(a: &Multisegment, b: &Multisegment) -> bool {
    a.degree_of_support() == b.degree_of_support() && a.support() == b.support() && is_leq(a, b)
}

impl From<Multisegment> for RingElement {
    fn from(m: Multisegment) -> Self {
        RingElement::monomial(m, 1)
    }
}

impl From<Segment> for RingElement {
    fn from(s: Segment) -> Self {
        RingElement::monomial(s.into(), 1)
    }
}

macro_rules! checked_op {
    ($tr:ident, $f:ident, $try:ident) => {
        impl $tr<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $f(self, rhs: &RingElement) -> RingElement {
                self.$try(rhs).expect("ring coefficient overflow")
            }
        }
        impl $tr for RingElement {
            type Output = RingElement;
            fn $f(self, rhs: RingElement) -> RingElement {
                (&self).$f(&rhs)
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.try_neg().expect("ring coefficient overflow")
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// `1·(0..0)+(1..1) - 2·(0..1)`; the zero element prints as `0`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{}·{}", c.unsigned_abs(), m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let terms = cur.ring_terms()?;
        cur.finish()?;
        RingElement::from_terms(terms.into_iter().map(|(c, segs)| (Multisegment::new(segs), c)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: i64,
    segments: Vec<Segment>,
}

impl Serialize for RingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, &c)| TermJson {
                coeff: c,
                segments: m.segments().to_vec(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        RingElement::from_terms(
            terms
                .into_iter()
                .map(|t| (Multisegment::new(t.segments), t.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}
