//! The Moeglin–Waldspurger algorithm for the dual multisegment.
//!
//! Each round takes the greatest ending `e`, then a chain of shortest
//! segments `δ0, δ1, ...` with endings `e, e-1, ...`, each not contained in
//! its predecessor. The round emits `{e-r, ..., e}` and shortens every `δi`
//! by its last point. Lines and integer cosets are processed independently.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::exponent::Exponent;
use crate::multiseg::Multisegment;
use crate::segment::{Line, Point, Segment};

/// Tie-break among eligible shortest segments.
///
/// `candidates` holds positions into the current working list; all of them
/// have the same ending and the same length.
pub trait Chooser {
    fn choose(&mut self, candidates: &[usize]) -> usize;
}

/// Picks the first candidate in canonical order.
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstChoice;

impl Chooser for FirstChoice {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        candidates[0]
    }
}

/// Picks uniformly at random from a seeded generator.
#[derive(Clone, Debug)]
pub struct RandomChoice(StdRng);

impl RandomChoice {
    pub fn seeded(seed: u64) -> Self {
        RandomChoice(StdRng::seed_from_u64(seed))
    }
}

impl Chooser for RandomChoice {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        candidates[self.0.random_range(0..candidates.len())]
    }
}

impl<F: FnMut(&[usize]) -> usize> Chooser for F {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        self(candidates)
    }
}

/// One extraction round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    /// The segment of the dual emitted by this round.
    pub emitted: Segment,
    /// The chain `δ0, δ1, ...` as it stood before shortening.
    pub chain: Vec<Segment>,
    /// Positions of the chain in the working list, which is kept in
    /// canonical order at the start of each round.
    pub consumed: Vec<usize>,
    /// Working multisegment at the start of the round.
    #[serde(serialize_with = "crate::mwa::ser_display")]
    pub before: Multisegment,
}

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Full extraction log for one run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub rounds: Vec<Round>,
}

impl Trace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// The dual multisegment `M#` under the default tie-break.
pub fn mwa_dual(m: &Multisegment) -> Multisegment {
    mwa_dual_with_choices(m, &mut FirstChoice)
}

/// The dual multisegment with a caller-supplied tie-break.
pub fn mwa_dual_with_choices(m: &Multisegment, chooser: &mut impl Chooser) -> Multisegment {
    run(m, chooser, None)
}

/// The dual together with the per-round extraction log.
pub fn mwa_dual_traced(m: &Multisegment) -> (Multisegment, Trace) {
    let mut trace = Trace::default();
    let dual = run(m, &mut FirstChoice, Some(&mut trace));
    (dual, trace)
}

fn run(m: &Multisegment, chooser: &mut impl Chooser, mut trace: Option<&mut Trace>) -> Multisegment {
    let mut out = Vec::with_capacity(m.degree_of_support());
    for (_, block) in m.components() {
        let mut work: Vec<Segment> = block.into_segments();
        while !work.is_empty() {
            work.sort_unstable();
            let round = extract_round(&work, chooser);
            if let Some(t) = trace.as_deref_mut() {
                t.rounds.push(Round {
                    emitted: round.emitted.clone(),
                    chain: round.consumed.iter().map(|&i| work[i].clone()).collect(),
                    consumed: round.consumed.clone(),
                    before: Multisegment::new(work.clone()),
                });
            }
            let mut next = Vec::with_capacity(work.len());
            for (i, s) in work.into_iter().enumerate() {
                if round.consumed.contains(&i) {
                    next.extend(s.minus());
                } else {
                    next.push(s);
                }
            }
            work = next;
            out.push(round.emitted);
        }
    }
    Multisegment::new(out)
}

struct Extracted {
    emitted: Segment,
    consumed: Vec<usize>,
}

/// One round on a single-coset working list in canonical order.
fn extract_round(work: &[Segment], chooser: &mut impl Chooser) -> Extracted {
    let e = work.iter().map(Segment::end).max().expect("non-empty");
    let line: Line = work[0].line().clone();
    let mut consumed = Vec::new();
    // δ0: any segment ending at e; later links must begin strictly before
    // their predecessor (not included in it, with ending one less).
    let mut target = e;
    let mut bound: Option<Exponent> = None;
    loop {
        // shortest eligible = largest beginning
        let best = work
            .iter()
            .enumerate()
            .filter(|(_, s)| s.end() == target && bound.is_none_or(|b| s.begin() < b))
            .map(|(_, s)| s.begin())
            .max();
        let Some(b) = best else { break };
        let candidates: Vec<usize> = work
            .iter()
            .enumerate()
            .filter(|(_, s)| s.end() == target && s.begin() == b)
            .map(|(i, _)| i)
            .collect();
        let pick = chooser.choose(&candidates);
        debug_assert!(candidates.contains(&pick), "chooser returned a non-candidate");
        consumed.push(pick);
        bound = Some(b);
        target = target - 1;
    }
    let r = consumed.len() as i64 - 1;
    Extracted {
        emitted: Segment::raw(line, e - r, e),
        consumed,
    }
}

/// Outcome of a property (P) check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PCheck {
    /// Precondition holds and `m(M#) ≤ k`.
    Holds,
    /// Precondition holds but `m(M#) > k`.
    Fails { dual_maxlength: usize },
    /// The endings of `M` do not fit in any run of `k` consecutive points.
    PreconditionUnmet,
}

/// Property (P): endings inside a length-`k` window force `m(M#) ≤ k`.
pub fn check_p(m: &Multisegment, k: usize) -> PCheck {
    if !m.endings().fits_window(k) {
        return PCheck::PreconditionUnmet;
    }
    let ml = mwa_dual(m).maxlength();
    if ml <= k {
        PCheck::Holds
    } else {
        PCheck::Fails { dual_maxlength: ml }
    }
}

/// Property (P'): `m(M#) ≤ t(M)`.
pub fn check_p_prime(m: &Multisegment) -> bool {
    mwa_dual(m).maxlength() <= m.thickness()
}

/// Checks that every emitted segment ending at the greatest ending of its
/// block consists only of points that are endings of the input.
///
/// Returns the offending round index, if any.
pub fn check_endings_only(m: &Multisegment) -> Option<usize> {
    let endings = m.endings();
    let (_, trace) = mwa_dual_traced(m);
    let mut idx = 0;
    for (_, block) in m.components() {
        let emax = block.segments().iter().map(Segment::end).max();
        let n = block.degree_of_support();
        let mut used = 0;
        while used < n {
            let r = &trace.rounds[idx];
            used += r.chain.len();
            if Some(r.emitted.end()) == emax {
                let ok = r
                    .emitted
                    .points()
                    .all(|x| endings.count(&Point::new(r.emitted.line().clone(), x)) > 0);
                if !ok {
                    return Some(idx);
                }
            }
            idx += 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(t: &str) -> Multisegment {
        t.parse().unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(mwa_dual(&ms("(0..2)")), ms("(0..0)+(1..1)+(2..2)"));
        assert_eq!(mwa_dual(&ms("(-1..-1)+(0..0)+(1..1)")), ms("(-1..1)"));
        assert_eq!(mwa_dual(&ms("(-1..0)+(0..1)")), ms("(-1..0)+(0..1)"));
        assert_eq!(mwa_dual(&Multisegment::unit()), Multisegment::unit());
    }

    #[test]
    fn repeated_segment_hand_run() {
        // e=1: δ0=(0..1), nothing ends at 0 -> (1..1); M- = (0..0)+(0..1)
        // e=1: δ0=(0..1), (0..0) ⊆ δ0 -> (1..1); M- = (0..0)+(0..0)
        // then (0..0) twice
        let m = ms("(0..1)+(0..1)");
        let expected = ms("(0..0)+(0..0)+(1..1)+(1..1)");
        assert_eq!(mwa_dual(&m), expected);
        for seed in 0..20 {
            assert_eq!(mwa_dual_with_choices(&m, &mut RandomChoice::seeded(seed)), expected);
        }
        let mut last = |c: &[usize]| *c.last().unwrap();
        assert_eq!(mwa_dual_with_choices(&m, &mut last), expected);
    }

    #[test]
    fn cosets_are_independent() {
        let m = ms("(0..2)+(1/2..1/2)+sigma:(0..0)+sigma:(1..1)");
        assert_eq!(
            mwa_dual(&m),
            ms("(0..0)+(1..1)+(2..2)+(1/2..1/2)+sigma:(0..1)")
        );
    }

    #[test]
    fn trace_records_rounds() {
        let (d, t) = mwa_dual_traced(&ms("(-1..-1)+(0..0)+(1..1)"));
        assert_eq!(d, ms("(-1..1)"));
        assert_eq!(t.rounds.len(), 1);
        assert_eq!(t.rounds[0].consumed, vec![2, 1, 0]);
        assert_eq!(
            t.to_json(),
            r#"{"rounds":[{"emitted":{"line":"rho","b":"-1","e":"1"},"chain":[{"line":"rho","b":"1","e":"1"},{"line":"rho","b":"0","e":"0"},{"line":"rho","b":"-1","e":"-1"}],"consumed":[2,1,0],"before":"(-1..-1)+(0..0)+(1..1)"}]}"#
        );
    }

    #[test]
    fn property_p_examples() {
        assert_eq!(check_p(&ms("(-1..0)+(0..1)"), 2), PCheck::Holds);
        assert_eq!(check_p(&ms("(0..0)"), 1), PCheck::Holds);
        assert_eq!(check_p(&ms("(0..2)"), 1), PCheck::Holds);
        assert_eq!(check_p(&ms("(0..0)+(2..2)"), 2), PCheck::PreconditionUnmet);
    }

    #[test]
    fn property_p_prime_examples() {
        assert!(check_p_prime(&ms("(0..2)")));
        assert!(check_p_prime(&ms("(-1..-1)+(0..0)+(1..1)")));
        assert_eq!(mwa_dual(&ms("(-1..-1)+(0..0)+(1..1)")).maxlength(), 3);
        assert!(check_p_prime(&Multisegment::unit()));
    }

    #[test]
    fn endings_only_examples() {
        for t in ["(0..2)", "(-1..0)+(0..1)", "(0..1)+(0..1)+(1..3)", "(0..0)+(1..2)+(2..2)"] {
            assert_eq!(check_endings_only(&ms(t)), None, "{t}");
        }
    }
}
