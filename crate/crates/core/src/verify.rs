//! Exhaustive corpora and the named verifier suites.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::exponent::Exponent;
use crate::multiseg::Multisegment;
use crate::mwa::{check_endings_only, mwa_dual, mwa_dual_with_choices, RandomChoice};
use crate::poset::{enumerate_with_support, potential, Poset};
use crate::report::{Status, VerificationReport};
use crate::ring::RingElement;
use crate::segment::Point;
use crate::speh::{
    dodgson_check, leading_check, theorem_a_check, theorem_i_core, theorem_ii_core,
    DEFAULT_BUDGET,
};

/// Every support on the integer points `0..points` with each multiplicity
/// in `0..=max_mult`, as point lists.
pub fn bounded_supports(points: usize, max_mult: usize) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    let mut mult = vec![0usize; points];
    loop {
        out.push(
            mult.iter()
                .enumerate()
                .flat_map(|(x, &c)| {
                    std::iter::repeat_n(Point::on_default(Exponent::int(x as i64)), c)
                })
                .collect(),
        );
        // odometer
        let mut i = 0;
        while i < points && mult[i] == max_mult {
            mult[i] = 0;
            i += 1;
        }
        if i == points {
            break;
        }
        mult[i] += 1;
    }
    out
}

/// Supports on consecutive points `0, 1, ...` with every multiplicity
/// positive and total size at most `max_size`.
pub fn interval_supports(max_size: usize) -> Vec<Vec<Point>> {
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for c in 1..=left {
            cur.push(c);
            rec(left - c, cur, out);
            cur.pop();
        }
    }
    let mut comps = Vec::new();
    rec(max_size, &mut Vec::new(), &mut comps);
    comps
        .into_iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .flat_map(|(x, &n)| {
                    std::iter::repeat_n(Point::on_default(Exponent::int(x as i64)), n)
                })
                .collect()
        })
        .collect()
}

/// All multisegments over [`bounded_supports`].
pub fn corpus(points: usize, max_mult: usize) -> Vec<Multisegment> {
    bounded_supports(points, max_mult)
        .par_iter()
        .flat_map_iter(|s| enumerate_with_support(s))
        .collect()
}

/// Text and JSON forms both read back to the same value.
pub fn roundtrip_ok(m: &Multisegment) -> bool {
    m.to_string().parse::<Multisegment>().as_ref() == Ok(m)
        && Multisegment::from_json(&m.to_json()).as_ref() == Ok(m)
}

pub fn ring_roundtrip_ok(x: &RingElement) -> bool {
    x.to_string().parse::<RingElement>().as_ref() == Ok(x)
        && RingElement::from_json(&x.to_json()).as_ref() == Ok(x)
}

/// Runs `check` on every instance in parallel and folds the outcomes into
/// one report; the counterexample kept is the first in corpus order.
fn sweep<T: Sync>(
    mut rep: VerificationReport,
    items: &[T],
    check: impl Fn(&T) -> Option<(String, String, String)> + Sync,
) -> VerificationReport {
    let failures: Vec<(usize, (String, String, String))> = items
        .par_iter()
        .enumerate()
        .filter_map(|(i, t)| check(t).map(|f| (i, f)))
        .collect();
    rep.checked = items.len() as u64;
    if let Some((_, (a, b, c))) = failures.into_iter().min_by_key(|(i, _)| *i) {
        rep.fail(a, b, c);
    }
    rep
}

/// `mwa_dual ∘ mwa_dual = id` on the corpus.
pub fn involution_sweep(corpus: &[Multisegment]) -> VerificationReport {
    sweep(VerificationReport::new("involution"), corpus, |m| {
        let back = mwa_dual(&mwa_dual(m));
        (&back != m).then(|| (m.to_string(), m.to_string(), back.to_string()))
    })
}

/// Property (P) at the tightest window, plus the endings-only observation.
pub fn p_sweep(corpus: &[Multisegment]) -> VerificationReport {
    sweep(VerificationReport::new("P"), corpus, |m| {
        let ends = m.endings();
        if let Some(k) = (0..=m.degree_of_support()).find(|&k| ends.fits_window(k)) {
            let ml = mwa_dual(m).maxlength();
            if ml > k {
                return Some((m.to_string(), format!("dual maxlength <= {k}"), ml.to_string()));
            }
        }
        check_endings_only(m).map(|round| {
            (
                m.to_string(),
                "segments at the top ending built from endings".into(),
                format!("round {round}"),
            )
        })
    })
}

/// Property (P'): `m(M#) ≤ t(M)`.
pub fn p_prime_sweep(corpus: &[Multisegment]) -> VerificationReport {
    sweep(VerificationReport::new("Pprime"), corpus, |m| {
        let ml = mwa_dual(m).maxlength();
        (ml > m.thickness()).then(|| {
            (
                m.to_string(),
                format!("dual maxlength <= {}", m.thickness()),
                ml.to_string(),
            )
        })
    })
}

/// `policies` seeded random tie-breaks agree with the default.
pub fn tie_break_sweep(corpus: &[Multisegment], policies: u64) -> VerificationReport {
    let rep = VerificationReport::new("tie-break").param("policies", policies);
    sweep(rep, corpus, |m| {
        let d = mwa_dual(m);
        (0..policies).find_map(|seed| {
            let r = mwa_dual_with_choices(m, &mut RandomChoice::seeded(seed));
            (r != d).then(|| (format!("{m} seed {seed}"), d.to_string(), r.to_string()))
        })
    })
}

/// `M ≤ M'` implies `mwa_dual(M') ≤ mwa_dual(M)` on every poset of the
/// given supports.
pub fn order_reversal_sweep(supports: &[Vec<Point>]) -> VerificationReport {
    let per_support: Vec<(VerificationReport, u64)> = supports
        .par_iter()
        .map(|s| {
            let mut rep = VerificationReport::new("order-reversal");
            let mut violations = 0;
            let poset = Poset::with_support(s);
            let duals: Vec<usize> = poset
                .nodes()
                .iter()
                .map(|m| poset.index_of(&mwa_dual(m)).expect("duality preserves support"))
                .collect();
            for i in 0..poset.len() {
                for j in 0..poset.len() {
                    if !poset.is_strictly_below(j, i) {
                        continue;
                    }
                    rep.checked += 1;
                    let (di, dj) = (duals[i], duals[j]);
                    if !poset.leq(di, dj) {
                        violations += 1;
                        let nodes = poset.nodes();
                        let actual = if poset.leq(dj, di) {
                            format!("{} < {} (order kept)", nodes[dj], nodes[di])
                        } else {
                            "duals incomparable".to_string()
                        };
                        rep.fail(
                            format!("{} < {}", nodes[j], nodes[i]),
                            format!("{} <= {}", nodes[di], nodes[dj]),
                            actual,
                        );
                    }
                }
            }
            (rep, violations)
        })
        .collect();
    let violations: u64 = per_support.iter().map(|(_, v)| v).sum();
    let rep = merge("order-reversal", per_support.into_iter().map(|(r, _)| r).collect());
    let detail = format!("{violations} of {} comparable pairs violate", rep.checked);
    rep.with_detail(detail)
}

/// Along every elementary operation: maxlength weakly grows, thickness
/// weakly drops, beginnings and endings weakly shrink, support is kept.
pub fn monotonicity_sweep(supports: &[Vec<Point>]) -> VerificationReport {
    let per_support: Vec<VerificationReport> = supports
        .par_iter()
        .map(|s| {
            let mut rep = VerificationReport::new("monotonicity");
            let poset = Poset::with_support(s);
            for i in 0..poset.len() {
                let hi = &poset.nodes()[i];
                for &j in poset.successors(i) {
                    let lo = &poset.nodes()[j];
                    rep.checked += 1;
                    let ok = lo.maxlength() >= hi.maxlength()
                        && lo.thickness() <= hi.thickness()
                        && lo.beginnings().is_submultiset_of(&hi.beginnings())
                        && lo.endings().is_submultiset_of(&hi.endings())
                        && lo.support() == hi.support()
                        && potential(lo) > potential(hi);
                    if !ok {
                        rep.fail(format!("{hi} -> {lo}"), "monotone statistics", "violated");
                    }
                }
            }
            rep
        })
        .collect();
    merge("monotonicity", per_support)
}

fn merge(suite: &str, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut rep = VerificationReport::new(suite);
    for p in parts {
        rep.checked += p.checked;
        if let Some(c) = p.counterexample {
            rep.fail(c.input, c.expected, c.actual);
        }
    }
    rep
}

/// Names accepted by [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Involution,
    P,
    PPrime,
    TieBreak,
    OrderReversal,
    Monotonicity,
    TheoremA,
    TheoremI,
    TheoremII,
    Dodgson,
    Leading,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Involution,
        Suite::P,
        Suite::PPrime,
        Suite::TieBreak,
        Suite::OrderReversal,
        Suite::Monotonicity,
        Suite::TheoremA,
        Suite::TheoremI,
        Suite::TheoremII,
        Suite::Dodgson,
        Suite::Leading,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Involution => "involution",
            Suite::P => "P",
            Suite::PPrime => "Pprime",
            Suite::TieBreak => "tie-break",
            Suite::OrderReversal => "order-reversal",
            Suite::Monotonicity => "monotonicity",
            Suite::TheoremA => "theorem-a",
            Suite::TheoremI => "theorem-i",
            Suite::TheoremII => "theorem-ii",
            Suite::Dodgson => "dodgson",
            Suite::Leading => "leading",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Bounds for a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub max_l: usize,
    pub max_k: usize,
    /// Distinct points `0..points` for corpus suites.
    pub points: usize,
    /// Largest multiplicity per point for corpus suites.
    pub mult: usize,
    /// Largest support size for the monotonicity suite.
    pub max_support: usize,
    pub budget: usize,
    pub policies: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_l: 4,
            max_k: 4,
            points: 4,
            mult: 2,
            max_support: 8,
            budget: DEFAULT_BUDGET,
            policies: 100,
        }
    }
}

/// Runs a suite; `(l, k)` suites give one report per pair in parameter
/// order, corpus suites give a single aggregate report.
pub fn run_suite(suite: Suite, p: &SuiteParams) -> Vec<VerificationReport> {
    let pairs: Vec<(usize, usize)> = (1..=p.max_l)
        .flat_map(|l| (1..=p.max_k).map(move |k| (l, k)))
        .collect();
    let per_pair = |f: &(dyn Fn(usize, usize) -> VerificationReport + Sync)| -> Vec<VerificationReport> {
        pairs.par_iter().map(|&(l, k)| f(l, k)).collect()
    };
    match suite {
        Suite::Involution | Suite::P | Suite::PPrime | Suite::TieBreak => {
            let c = corpus(p.points, p.mult);
            let rep = match suite {
                Suite::Involution => involution_sweep(&c),
                Suite::P => p_sweep(&c),
                Suite::PPrime => p_prime_sweep(&c),
                _ => tie_break_sweep(&c, p.policies),
            };
            vec![rep.param("points", p.points).param("mult", p.mult)]
        }
        Suite::OrderReversal => {
            let rep = order_reversal_sweep(&bounded_supports(p.points, p.mult));
            vec![rep.param("points", p.points).param("mult", p.mult)]
        }
        Suite::Monotonicity => {
            let rep = monotonicity_sweep(&interval_supports(p.max_support));
            vec![rep.param("max_support", p.max_support)]
        }
        Suite::TheoremA => per_pair(&theorem_a_check),
        Suite::TheoremI => per_pair(&|l, k| theorem_i_core(l, k, p.budget)),
        Suite::TheoremII => {
            let pairs: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(_, k)| k >= 2).collect();
            pairs
                .par_iter()
                .map(|&(l, k)| theorem_ii_core(l, k, p.budget))
                .collect()
        }
        Suite::Dodgson => per_pair(&dodgson_check),
        Suite::Leading => per_pair(&leading_check),
    }
}

/// Process exit code for a batch of reports: 1 on any failure, 1 on any
/// skip when `strict`, else 0.
pub fn exit_code(reports: &[VerificationReport], strict: bool) -> i32 {
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    let skipped = reports.iter().any(|r| r.status == Status::Skipped);
    if failed || (strict && skipped) {
        1
    } else {
        0
    }
}
