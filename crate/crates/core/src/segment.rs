//! Segments on cuspidal lines.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::text::Cursor;

/// Label of a cuspidal line. Segments on different lines never interact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line(Arc<str>);

impl Line {
    pub const DEFAULT_NAME: &'static str = "rho";

    pub fn new(name: &str) -> Self {
        Line(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_default(&self) -> bool {
        &*self.0 == Self::DEFAULT_NAME
    }

    pub(crate) fn is_valid_name(name: &str) -> bool {
        !name.is_empty()
            && name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
    }
}

impl Default for Line {
    fn default() -> Self {
        thread_local! {
            static RHO: Line = Line(Arc::from(Line::DEFAULT_NAME));
        }
        RHO.with(Line::clone)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// A lattice point on a line.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point {
    pub line: Line,
    pub x: Exponent,
}

impl Point {
    pub fn new(line: Line, x: Exponent) -> Self {
        Point { line, x }
    }

    pub fn on_default(x: Exponent) -> Self {
        Point {
            line: Line::default(),
            x,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line.is_default() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{}:{}", self.line, self.x)
        }
    }
}

/// The segment `{begin, begin + 1, ..., end}` on a line.
///
/// Field order gives the canonical ordering: by line, then begin, then end.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "SegmentJson", try_from = "SegmentJson")]
pub struct Segment {
    line: Line,
    begin: Exponent,
    end: Exponent,
}

impl Segment {
    /// Segment on the default line. `end - begin` must be a non-negative integer.
    pub fn new(begin: Exponent, end: Exponent) -> Result<Self> {
        Self::on_line(Line::default(), begin, end)
    }

    pub fn on_line(line: Line, begin: Exponent, end: Exponent) -> Result<Self> {
        let diff = end - begin;
        if !diff.is_integer() || diff < Exponent::ZERO {
            return Err(Error::Precondition(format!(
                "segment ({begin}..{end}): end - begin must be a non-negative integer"
            )));
        }
        Ok(Segment { line, begin, end })
    }

    /// Integer-endpoint segment on the default line. Panics if `end < begin`.
    pub fn int(begin: i64, end: i64) -> Self {
        Self::new(begin.into(), end.into()).expect("end < begin")
    }

    pub(crate) fn raw(line: Line, begin: Exponent, end: Exponent) -> Self {
        debug_assert!((end - begin).is_integer() && end >= begin);
        Segment { line, begin, end }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn begin(&self) -> Exponent {
        self.begin
    }

    pub fn end(&self) -> Exponent {
        self.end
    }

    /// Number of points, always at least 1.
    pub fn len(&self) -> usize {
        ((self.end - self.begin).numer() + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(begin + end) / 2`.
    pub fn center(&self) -> Exponent {
        Exponent::from((self.begin + self.end).as_ratio() / 2)
    }

    pub fn points(&self) -> impl Iterator<Item = Exponent> + '_ {
        (0..self.len() as i64).map(move |i| self.begin + i)
    }

    /// True when both segments sit on one line and one integer coset, so
    /// that their points can coincide.
    pub fn same_coset(&self, other: &Segment) -> bool {
        self.line == other.line && (self.begin - other.begin).is_integer()
    }

    pub fn contains_point(&self, line: &Line, x: Exponent) -> bool {
        &self.line == line
            && (x - self.begin).is_integer()
            && self.begin <= x
            && x <= self.end
    }

    /// Set inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Segment) -> bool {
        self.same_coset(other) && self.begin <= other.begin && other.end <= self.end
    }

    /// Neither segment contains the other and their union is a segment.
    pub fn is_linked(&self, other: &Segment) -> bool {
        if !self.same_coset(other) || self.contains(other) || other.contains(self) {
            return false;
        }
        let (lo, hi) = if self.begin < other.begin {
            (self, other)
        } else {
            (other, self)
        };
        hi.begin <= lo.end + 1
    }

    /// Union of two linked segments, or of any two on one coset whose union
    /// has no gap.
    pub fn union(&self, other: &Segment) -> Option<Segment> {
        if !self.same_coset(other) {
            return None;
        }
        let (lo, hi) = if self.begin <= other.begin {
            (self, other)
        } else {
            (other, self)
        };
        (hi.begin <= lo.end + 1).then(|| {
            Segment::raw(self.line.clone(), lo.begin, lo.end.max(hi.end))
        })
    }

    /// Intersection, `None` when empty.
    pub fn intersection(&self, other: &Segment) -> Option<Segment> {
        if !self.same_coset(other) {
            return None;
        }
        let b = self.begin.max(other.begin);
        let e = self.end.min(other.end);
        (b <= e).then(|| Segment::raw(self.line.clone(), b, e))
    }

    /// Shift every point by `q`.
    pub fn shifted(&self, q: Exponent) -> Segment {
        Segment::raw(self.line.clone(), self.begin + q, self.end + q)
    }

    /// `[b, e] ↦ [-e, -b]`.
    pub fn reflected(&self) -> Segment {
        Segment::raw(self.line.clone(), -self.end, -self.begin)
    }

    /// Drops the last point; `None` when nothing is left.
    pub fn minus(&self) -> Option<Segment> {
        (self.end > self.begin).then(|| Segment::raw(self.line.clone(), self.begin, self.end - 1))
    }
}

/// The segment `{a - m + 1, ..., a}` of length `m` ending at `a`; `None`
/// (the unit) when `m = 0`.
pub fn seg_from_end(line: &Line, a: Exponent, m: u64) -> Option<Segment> {
    (m > 0).then(|| Segment::raw(line.clone(), a - (m as i64 - 1), a))
}

/// The segment `{a, ..., a + m - 1}` of length `m` beginning at `a`; `None`
/// (the unit) when `m = 0`.
pub fn seg_from_begin(line: &Line, a: Exponent, m: u64) -> Option<Segment> {
    (m > 0).then(|| Segment::raw(line.clone(), a, a + (m as i64 - 1)))
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.line.is_default() {
            write!(f, "{}:", self.line)?;
        }
        write!(f, "({}..{})", self.begin, self.end)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let seg = cur.segment()?;
        cur.finish()?;
        Ok(seg)
    }
}

#[derive(Serialize, Deserialize)]
struct SegmentJson {
    line: String,
    b: Exponent,
    e: Exponent,
}

impl From<Segment> for SegmentJson {
    fn from(s: Segment) -> Self {
        SegmentJson {
            line: s.line.to_string(),
            b: s.begin,
            e: s.end,
        }
    }
}

impl TryFrom<SegmentJson> for Segment {
    type Error = Error;

    fn try_from(j: SegmentJson) -> Result<Self> {
        if !Line::is_valid_name(&j.line) {
            return Err(Error::Json(format!("bad line label `{}`", j.line)));
        }
        Segment::on_line(Line::new(&j.line), j.b, j.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Segment {
        t.parse().unwrap()
    }

    #[test]
    fn constructors() {
        let rho = Line::default();
        assert_eq!(seg_from_end(&rho, 1.into(), 2), Some(s("(0..1)")));
        assert_eq!(seg_from_end(&rho, 0.into(), 0), None);
        assert_eq!(seg_from_end(&rho, Exponent::HALF, 2), Some(s("(-1/2..1/2)")));
        assert_eq!(seg_from_begin(&rho, 0.into(), 3), Some(s("(0..2)")));
        assert_eq!(seg_from_begin(&rho, -Exponent::HALF, 2), Some(s("(-1/2..1/2)")));
        assert_eq!(seg_from_begin(&rho, 5.into(), 0), None);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(Segment::new(1.into(), 0.into()).is_err());
        assert!(Segment::new(0.into(), Exponent::HALF).is_err());
        assert!("(1..0)".parse::<Segment>().is_err());
    }

    #[test]
    fn linkage() {
        assert!(s("(0..0)").is_linked(&s("(1..1)")));
        assert!(!s("(0..2)").is_linked(&s("(1..1)")));
        assert!(!s("(0..0)").is_linked(&s("(2..2)")));
        assert!(s("(-1..0)").is_linked(&s("(0..1)")));
        assert!(!s("(0..0)").is_linked(&s("(0..0)")));
        // different coset or line
        assert!(!s("(0..0)").is_linked(&s("(1/2..1/2)")));
        assert!(!s("(0..0)").is_linked(&s("sigma:(1..1)")));
    }

    #[test]
    fn set_operations() {
        let a = s("(-1..0)");
        let b = s("(0..1)");
        assert_eq!(a.union(&b), Some(s("(-1..1)")));
        assert_eq!(a.intersection(&b), Some(s("(0..0)")));
        assert_eq!(s("(0..0)").intersection(&s("(1..1)")), None);
        assert_eq!(s("(0..0)").union(&s("(2..2)")), None);
        assert_eq!(s("(0..2)").minus(), Some(s("(0..1)")));
        assert_eq!(s("(3..3)").minus(), None);
        assert_eq!(s("(0..1)").reflected(), s("(-1..0)"));
        assert_eq!(s("(0..1)").shifted(Exponent::HALF), s("(1/2..3/2)"));
        assert_eq!(s("(1..3)").center(), Exponent::int(2));
        assert_eq!(s("(0..1)").center(), Exponent::HALF);
        assert_eq!(s("(0..3)").len(), 4);
    }

    #[test]
    fn text_and_json() {
        assert_eq!(s(" ( -2/4 .. 1/2 ) ").to_string(), "(-1/2..1/2)");
        assert_eq!(s("sigma:(0..1)").to_string(), "sigma:(0..1)");
        assert_eq!(s("rho:(0..1)").to_string(), "(0..1)");
        let j = serde_json::to_string(&s("(-1/2..1/2)")).unwrap();
        assert_eq!(j, r#"{"line":"rho","b":"-1/2","e":"1/2"}"#);
        let back: Segment = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s("(-1/2..1/2)"));
        assert!(serde_json::from_str::<Segment>(r#"{"line":"rho","b":"1","e":"0"}"#).is_err());
    }
}
