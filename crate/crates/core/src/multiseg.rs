//! Multisegments, their statistics and canonical representations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::segment::{Line, Point, Segment};
use crate::text::Cursor;

/// A finite multiset of points, kept as a sorted count map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointMultiset(BTreeMap<Point, usize>);

impl PointMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Point) {
        *self.0.entry(p).or_insert(0) += 1;
    }

    pub fn count(&self, p: &Point) -> usize {
        self.0.get(p).copied().unwrap_or(0)
    }

    /// Total number of points, with multiplicity.
    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ⊆ other` as multisets.
    pub fn is_submultiset_of(&self, other: &PointMultiset) -> bool {
        self.0.iter().all(|(p, &c)| other.count(p) >= c)
    }

    /// Distinct points with their multiplicities, in order.
    pub fn iter(&self) -> impl Iterator<Item = (&Point, usize)> {
        self.0.iter().map(|(p, &c)| (p, c))
    }

    /// Every point repeated by its multiplicity, in order.
    pub fn to_vec(&self) -> Vec<Point> {
        self.iter()
            .flat_map(|(p, c)| std::iter::repeat_n(p.clone(), c))
            .collect()
    }

    /// True when all points fit in a run of `k` consecutive lattice points on
    /// one line.
    pub fn fits_window(&self, k: usize) -> bool {
        let mut it = self.0.keys();
        let Some(first) = it.next() else {
            return true;
        };
        let last = self.0.keys().next_back().unwrap();
        self.0
            .keys()
            .all(|p| p.line == first.line && (p.x - first.x).is_integer())
            && (last.x - first.x) < Exponent::int(k as i64)
    }
}

impl FromIterator<Point> for PointMultiset {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        let mut m = PointMultiset::new();
        for p in iter {
            m.insert(p);
        }
        m
    }
}

impl fmt::Display for PointMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.to_vec() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PointMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// The statistics of a multisegment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    /// Longest segment length, 0 for the empty multisegment.
    pub maxlength: usize,
    /// Number of segments.
    pub thickness: usize,
    pub beginnings: PointMultiset,
    pub endings: PointMultiset,
    pub support: PointMultiset,
}

/// A finite multiset of segments in canonical (sorted) order.
///
/// The empty multisegment is the unit monomial and prints as `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "MultisegmentJson", from = "MultisegmentJson")]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort_unstable();
        Multisegment { segments }
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn is_unit(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<Segment> {
        self.segments
    }

    pub fn thickness(&self) -> usize {
        self.segments.len()
    }

    pub fn maxlength(&self) -> usize {
        self.segments.iter().map(Segment::len).max().unwrap_or(0)
    }

    pub fn beginnings(&self) -> PointMultiset {
        self.segments
            .iter()
            .map(|s| Point::new(s.line().clone(), s.begin()))
            .collect()
    }

    pub fn endings(&self) -> PointMultiset {
        self.segments
            .iter()
            .map(|s| Point::new(s.line().clone(), s.end()))
            .collect()
    }

    pub fn support(&self) -> PointMultiset {
        self.segments
            .iter()
            .flat_map(|s| s.points().map(|x| Point::new(s.line().clone(), x)))
            .collect()
    }

    /// Number of points in the support, with multiplicity.
    pub fn degree_of_support(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            maxlength: self.maxlength(),
            thickness: self.thickness(),
            beginnings: self.beginnings(),
            endings: self.endings(),
            support: self.support(),
        }
    }

    /// Multiset union; this is the monomial product.
    pub fn union(&self, other: &Multisegment) -> Multisegment {
        let mut segs = Vec::with_capacity(self.segments.len() + other.segments.len());
        segs.extend_from_slice(&self.segments);
        segs.extend_from_slice(&other.segments);
        Multisegment::new(segs)
    }

    pub fn shifted(&self, q: Exponent) -> Multisegment {
        // a uniform shift preserves the sort order
        Multisegment {
            segments: self.segments.iter().map(|s| s.shifted(q)).collect(),
        }
    }

    pub fn reflected(&self) -> Multisegment {
        Multisegment::new(self.segments.iter().map(Segment::reflected).collect())
    }

    /// Splits into independent blocks keyed by line and integer coset.
    /// Segments from different blocks are never linked.
    pub fn components(&self) -> BTreeMap<(Line, Exponent), Multisegment> {
        let mut out: BTreeMap<(Line, Exponent), Vec<Segment>> = BTreeMap::new();
        for s in &self.segments {
            out.entry((s.line().clone(), s.begin().fract()))
                .or_default()
                .push(s.clone());
        }
        out.into_iter()
            .map(|(k, v)| (k, Multisegment { segments: v }))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multisegment serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

impl From<Segment> for Multisegment {
    fn from(s: Segment) -> Self {
        Multisegment { segments: vec![s] }
    }
}

impl From<Option<Segment>> for Multisegment {
    fn from(s: Option<Segment>) -> Self {
        Multisegment {
            segments: s.into_iter().collect(),
        }
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let segs = cur.multisegment()?;
        cur.finish()?;
        Ok(Multisegment::new(segs))
    }
}

#[derive(Serialize, Deserialize)]
struct MultisegmentJson {
    segments: Vec<Segment>,
}

impl From<Multisegment> for MultisegmentJson {
    fn from(m: Multisegment) -> Self {
        MultisegmentJson {
            segments: m.segments,
        }
    }
}

impl From<MultisegmentJson> for Multisegment {
    fn from(j: MultisegmentJson) -> Self {
        Multisegment::new(j.segments)
    }
}
