//! Elementary operations and the partial order they generate.
//!
//! `N ≤ M` when `N` is reached from `M` by finitely many elementary
//! operations, each replacing a linked pair `S1, S2` by `S1 ∪ S2, S1 ∩ S2`.
//! Along such a step the sum of squared segment lengths strictly grows,
//! which gives a topological order on any finite piece of the poset.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::exponent::Exponent;
use crate::multiseg::{Multisegment, PointMultiset};
use crate::segment::{Line, Point, Segment};

/// Applies the elementary operation to segments `i` and `j` of `m`, which
/// must be linked.
fn elementary(m: &Multisegment, i: usize, j: usize) -> Multisegment {
    let segs = m.segments();
    let (a, b) = (&segs[i], &segs[j]);
    let mut out = Vec::with_capacity(segs.len());
    out.extend(
        segs.iter()
            .enumerate()
            .filter(|&(n, _)| n != i && n != j)
            .map(|(_, s)| s.clone()),
    );
    out.push(a.union(b).expect("linked segments have a segment union"));
    out.extend(a.intersection(b));
    Multisegment::new(out)
}

/// Every multisegment obtained from `m` by a single elementary operation.
pub fn successors_down(m: &Multisegment) -> BTreeSet<Multisegment> {
    let segs = m.segments();
    let mut out = BTreeSet::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            // equal neighbours in canonical order repeat the same pairs
            if j > i + 1 && segs[j] == segs[j - 1] {
                continue;
            }
            if segs[i].is_linked(&segs[j]) {
                out.insert(elementary(m, i, j));
            }
        }
    }
    out
}

/// Sum of squared segment lengths; strictly increases along elementary
/// operations.
pub fn potential(m: &Multisegment) -> u64 {
    m.segments().iter().map(|s| (s.len() * s.len()) as u64).sum()
}

/// Decides `lower ≤ upper`.
///
/// Searches downward from `upper`, discarding any node that has already lost
/// a beginning or ending of `lower`, has fewer segments than `lower`, or has
/// a longer segment than `lower`: none of these can recover further down.
pub fn is_leq(lower: &Multisegment, upper: &Multisegment) -> bool {
    if lower == upper {
        return true;
    }
    if lower.degree_of_support() != upper.degree_of_support() || lower.support() != upper.support()
    {
        return false;
    }
    let target_b = lower.beginnings();
    let target_e = lower.endings();
    let (target_t, target_m, target_pot) = (lower.thickness(), lower.maxlength(), potential(lower));
    let viable = |x: &Multisegment| {
        x.thickness() >= target_t
            && x.maxlength() <= target_m
            && potential(x) < target_pot
            && target_b.is_submultiset_of(&x.beginnings())
            && target_e.is_submultiset_of(&x.endings())
    };
    if !viable(upper) {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([upper.clone()]);
    seen.insert(upper.clone());
    while let Some(x) = queue.pop_front() {
        for y in successors_down(&x) {
            if &y == lower {
                return true;
            }
            if !seen.contains(&y) && viable(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    false
}

/// All `N ≤ m`, including `m` itself.
pub fn downset(m: &Multisegment) -> BTreeSet<Multisegment> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([m.clone()]);
    seen.insert(m.clone());
    while let Some(x) = queue.pop_front() {
        for y in successors_down(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every multisegment whose support is exactly `points`, each once, in
/// canonical order.
pub fn enumerate_with_support(points: &[Point]) -> Vec<Multisegment> {
    let mut blocks: BTreeMap<(Line, Exponent), BTreeMap<Exponent, usize>> = BTreeMap::new();
    for p in points {
        *blocks
            .entry((p.line.clone(), p.x.fract()))
            .or_default()
            .entry(p.x)
            .or_insert(0) += 1;
    }
    let mut partial: Vec<Vec<Segment>> = vec![Vec::new()];
    for ((line, _), counts) in blocks {
        let mut block_out = Vec::new();
        let mut counts = counts;
        let mut acc = Vec::new();
        enumerate_block(&line, &mut counts, &mut acc, &mut block_out);
        partial = partial
            .iter()
            .flat_map(|p| {
                block_out.iter().map(move |b: &Vec<Segment>| {
                    let mut v = p.clone();
                    v.extend_from_slice(b);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<Multisegment> = partial.into_iter().map(Multisegment::new).collect();
    out.sort();
    out
}

/// Recursively peels off the segment through the leftmost remaining point.
/// Segments sharing a beginning are chosen with non-decreasing ends, so each
/// multiset is produced once.
fn enumerate_block(
    line: &Line,
    counts: &mut BTreeMap<Exponent, usize>,
    acc: &mut Vec<Segment>,
    out: &mut Vec<Vec<Segment>>,
) {
    let Some(p) = counts.iter().find(|(_, &c)| c > 0).map(|(&x, _)| x) else {
        out.push(acc.clone());
        return;
    };
    let min_end = match acc.last() {
        Some(s) if s.begin() == p => s.end(),
        _ => p,
    };
    let mut e = p;
    while counts.get(&e).copied().unwrap_or(0) > 0 {
        if e >= min_end {
            let mut x = p;
            while x <= e {
                *counts.get_mut(&x).unwrap() -= 1;
                x = x + 1;
            }
            acc.push(Segment::raw(line.clone(), p, e));
            enumerate_block(line, counts, acc, out);
            acc.pop();
            let mut x = p;
            while x <= e {
                *counts.get_mut(&x).unwrap() += 1;
                x = x + 1;
            }
        }
        e = e + 1;
    }
}

/// The finite poset of all multisegments with a fixed support.
///
/// Stores the one-step successor lists and the full strict-below relation as
/// bitsets.
#[derive(Clone, Debug)]
pub struct Poset {
    nodes: Vec<Multisegment>,
    index: HashMap<Multisegment, usize>,
    succ: Vec<Vec<usize>>,
    below: Vec<Vec<u64>>,
}

impl Poset {
    pub fn with_support(points: &[Point]) -> Self {
        Self::from_nodes(enumerate_with_support(points))
    }

    /// Builds the order on a downward-closed set of multisegments, such as an
    /// enumeration by support or a [`downset`].
    pub fn from_nodes(nodes: Vec<Multisegment>) -> Self {
        let n = nodes.len();
        let index: HashMap<Multisegment, usize> =
            nodes.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let succ: Vec<Vec<usize>> = nodes
            .iter()
            .map(|m| {
                successors_down(m)
                    .iter()
                    .map(|s| *index.get(s).expect("node set is downward closed"))
                    .collect()
            })
            .collect();
        let words = n.div_ceil(64);
        let mut below = vec![vec![0u64; words]; n];
        let mut order: Vec<usize> = (0..n).collect();
        // smallest elements (largest potential) first
        order.sort_by_key(|&i| std::cmp::Reverse(potential(&nodes[i])));
        for &i in &order {
            let mut acc = vec![0u64; words];
            for &s in &succ[i] {
                acc[s / 64] |= 1 << (s % 64);
                for (a, b) in acc.iter_mut().zip(&below[s]) {
                    *a |= *b;
                }
            }
            below[i] = acc;
        }
        Poset {
            nodes,
            index,
            succ,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Multisegment] {
        &self.nodes
    }

    pub fn index_of(&self, m: &Multisegment) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Indices reached from node `i` by one elementary operation.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    /// `nodes[j] < nodes[i]`.
    pub fn is_strictly_below(&self, j: usize, i: usize) -> bool {
        self.below[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn leq(&self, j: usize, i: usize) -> bool {
        i == j || self.is_strictly_below(j, i)
    }

    /// Covering pairs `(upper, lower)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for &s in &self.succ[i] {
                let skipped = self.succ[i]
                    .iter()
                    .any(|&t| t != s && self.is_strictly_below(s, t));
                if !skipped {
                    edges.push((i, s));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn hasse(&self) -> Hasse {
        Hasse {
            nodes: self.nodes.clone(),
            edges: self.covers(),
        }
    }
}

/// Hasse diagram: edges run from the larger to the smaller element of each
/// covering pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hasse {
    pub nodes: Vec<Multisegment>,
    pub edges: Vec<(usize, usize)>,
}

impl Hasse {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (i, m) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{m}\"];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Hasse diagram of all multisegments with the given support.
pub fn hasse(points: &[Point]) -> Hasse {
    Poset::with_support(points).hasse()
}

/// [`enumerate_with_support`] for a support held as a [`PointMultiset`].
pub fn enumerate_multiset(points: &PointMultiset) -> Vec<Multisegment> {
    enumerate_with_support(&points.to_vec())
}
