//! Exit criteria. Each test prints one `criterion N: PASS|FAIL` line; run
//! with `cargo test --test acceptance -- --nocapture --test-threads 1` to
//! see them in order.

use std::process::Command;
use std::time::{Duration, Instant};

use spehlab::poset::{downset, Poset};
use spehlab::speh::{
    char_f, dodgson_check, leading_check, rect, theorem_a_check, theorem_i_core,
    theorem_ii_core, DEFAULT_BUDGET,
};
use spehlab::verify::{
    bounded_supports, corpus, interval_supports, involution_sweep, monotonicity_sweep,
    order_reversal_sweep, p_prime_sweep, p_sweep, ring_roundtrip_ok, roundtrip_ok,
    tie_break_sweep,
};
use spehlab::{Multisegment, RingElement, Status, VerificationReport};

fn report(n: u32, what: &str, ok: bool, elapsed: Duration, extra: &str) {
    println!(
        "criterion {n}: {} - {what} [{:.2?}] {extra}",
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
}

fn describe(reps: &[&VerificationReport]) -> String {
    reps.iter()
        .filter(|r| !r.passed())
        .map(|r| r.summary_line())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Criterion 1 corpus: supports in {0,1,2,3}, multiplicity at most 2.
fn corpus1() -> Vec<Multisegment> {
    corpus(4, 2)
}

#[test]
fn criterion_01_involution() {
    let t = Instant::now();
    let c = corpus1();
    let rep = involution_sweep(&c);
    let el = t.elapsed();
    let ok = rep.passed() && el < Duration::from_secs(60) && c.len() == 405;
    report(1, "MWA is an involution", ok, el, &format!("{} instances {}", c.len(), describe(&[&rep])));
    assert!(ok);
}

#[test]
fn criterion_02_properties_p_and_p_prime() {
    let t = Instant::now();
    let c = corpus1();
    let p = p_sweep(&c);
    let pp = p_prime_sweep(&c);
    let ok = p.passed() && pp.passed();
    report(2, "properties (P) and (P')", ok, t.elapsed(), &describe(&[&p, &pp]));
    assert!(ok);
}

#[test]
fn criterion_03_monotonicity() {
    let t = Instant::now();
    let rep = monotonicity_sweep(&interval_supports(8));
    let ok = rep.passed() && rep.checked > 0;
    report(3, "statistics monotone along elementary operations", ok, t.elapsed(),
        &format!("{} edges {}", rep.checked, describe(&[&rep])));
    assert!(ok);
}

#[test]
fn criterion_04_order_reversal() {
    let t = Instant::now();
    let rep = order_reversal_sweep(&bounded_supports(3, 2));
    let ok = rep.passed() && rep.checked > 0;
    report(4, "duality reverses the order", ok, t.elapsed(),
        &format!("{} pairs {}", rep.checked, describe(&[&rep])));
    assert!(ok);
}

#[test]
fn criterion_05_theorem_a() {
    let t = Instant::now();
    let reps: Vec<VerificationReport> = (1..=6)
        .flat_map(|l| (1..=6).map(move |k| theorem_a_check(l, k)))
        .collect();
    let el = t.elapsed();
    let ok = reps.iter().all(VerificationReport::passed) && el < Duration::from_secs(1);
    report(5, "dual of rect(l,k) is rect(k,l), 1 <= l,k <= 6", ok, el,
        &describe(&reps.iter().collect::<Vec<_>>()));
    assert!(ok);
}

#[test]
fn criterion_06_character_pins() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for l in 1..=6 {
        if char_f(l, 1) != RingElement::from(rect(l, 1)) {
            failures.push(format!("F({l},1)"));
        }
    }
    let f12: RingElement = "1·(-1/2..-1/2)+(1/2..1/2) - 1·(-1/2..1/2)".parse().unwrap();
    let f22: RingElement = "1·(-1..0)+(0..1) - 1·(-1..1)+(0..0)".parse().unwrap();
    if char_f(1, 2) != f12 {
        failures.push("F(1,2)".into());
    }
    if char_f(2, 2) != f22 {
        failures.push("F(2,2)".into());
    }
    for l in 1..=4 {
        for k in 1..=4 {
            let f = char_f(l, k);
            if f.dominant_monomial() != Ok((rect(l, k), 1)) || !leading_check(l, k).passed() {
                failures.push(format!("dominant F({l},{k})"));
            }
            if f.degree() != Ok(k) {
                failures.push(format!("degree F({l},{k})"));
            }
        }
    }
    let ok = failures.is_empty();
    report(6, "character formula pins, leading term and degree", ok, t.elapsed(), &failures.join(", "));
    assert!(ok);
}

#[test]
fn criterion_07_dodgson() {
    let t = Instant::now();
    let reps: Vec<VerificationReport> = (1..=4)
        .flat_map(|l| (1..=4).map(move |k| dodgson_check(l, k)))
        .collect();
    let el = t.elapsed();
    let ok = reps.iter().all(VerificationReport::passed) && el < Duration::from_secs(30);
    report(7, "condensation identity for F, 1 <= l,k <= 4", ok, el,
        &describe(&reps.iter().collect::<Vec<_>>()));
    assert!(ok);
}

#[test]
fn criterion_08_theorem_cores() {
    let t = Instant::now();
    let mut reps = Vec::new();
    for l in 1..=8usize {
        for k in 1..=8usize {
            if 2 * l * k <= 16 {
                reps.push(theorem_i_core(l, k, DEFAULT_BUDGET));
                if k >= 2 {
                    reps.push(theorem_ii_core(l, k, DEFAULT_BUDGET));
                }
            }
        }
    }
    let el = t.elapsed();
    let skipped = reps.iter().filter(|r| r.status == Status::Skipped).count();
    let ok = reps.iter().all(VerificationReport::passed)
        && skipped == 0
        && el < Duration::from_secs(600);
    let checked: u64 = reps.iter().map(|r| r.checked).sum();
    report(8, "lemma cores for (i) and (ii)", ok, el,
        &format!("{} reports, {checked} instances, {skipped} skipped {}", reps.len(),
            describe(&reps.iter().collect::<Vec<_>>())));
    assert!(ok);
}

#[test]
fn criterion_09_tie_break_independence() {
    let t = Instant::now();
    let rep = tie_break_sweep(&corpus1(), 100);
    let ok = rep.passed();
    report(9, "100 random tie-break policies agree", ok, t.elapsed(), &describe(&[&rep]));
    assert!(ok);
}

/// Everything criteria 1-8 emit: the corpora, every poset node, every
/// downset used by the lemma cores, and every character and product.
fn emitted() -> (Vec<Multisegment>, Vec<RingElement>) {
    let mut ms = corpus1();
    ms.extend(ms.iter().map(spehlab::mwa_dual).collect::<Vec<_>>());
    for s in interval_supports(8).iter().chain(&bounded_supports(3, 2)) {
        ms.extend(Poset::with_support(s).nodes().iter().cloned());
    }
    for l in 1..=8usize {
        for k in 1..=8usize {
            if 2 * l * k <= 16 {
                ms.extend(downset(&rect(l, k).union(&rect(l, k))));
                ms.extend(downset(&rect(k, l).union(&rect(k, l))));
                if k >= 2 {
                    ms.extend(downset(&rect(l, k - 1).union(&rect(l, k + 1))));
                    ms.extend(downset(&rect(k - 1, l).union(&rect(k + 1, l))));
                }
            }
        }
    }
    for l in 1..=6 {
        for k in 1..=6 {
            ms.push(rect(l, k));
        }
    }
    let mut rs = Vec::new();
    for l in 0..=5 {
        for k in 0..=5 {
            rs.push(char_f(l, k));
        }
    }
    for l in 1..=4 {
        for k in 1..=4 {
            let (a, b) = spehlab::speh::dodgson_sides(l, k);
            rs.push(a);
            rs.push(b);
        }
    }
    (ms, rs)
}

fn cli(args: &[&str]) -> (Vec<u8>, Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_spehlab"))
        .args(args)
        .env_remove("SPEHLAB_BUDGET")
        .output()
        .expect("binary runs");
    (out.stdout, out.stderr, out.status.code())
}

#[test]
fn criterion_10_round_trips_and_determinism() {
    let t = Instant::now();
    let (ms, rs) = emitted();
    let bad_ms: Vec<String> = ms.iter().filter(|m| !roundtrip_ok(m)).map(ToString::to_string).collect();
    let bad_rs: Vec<String> = rs.iter().filter(|r| !ring_roundtrip_ok(r)).map(ToString::to_string).collect();
    let invocations: [&[&str]; 8] = [
        &["dual", "(0..2)+(1/2..3/2)+(-1..0)"],
        &["dual", "--trace", "(-1..0)+(0..1)+(0..0)"],
        &["char", "--l", "3", "--k", "3"],
        &["--json", "char", "--l", "2", "--k", "3"],
        &["hasse", "-1,0,0,1,2"],
        &["enumerate", "0,0,1,1,2"],
        &["verify", "--suite", "dodgson", "--max-l", "3", "--max-k", "3"],
        &["verify", "--suite", "theorem-ii", "--max-l", "2", "--max-k", "3"],
    ];
    let nondeterministic: Vec<String> = invocations
        .iter()
        .filter(|args| cli(args) != cli(args))
        .map(|args| args.join(" "))
        .collect();
    let ok = bad_ms.is_empty() && bad_rs.is_empty() && nondeterministic.is_empty();
    report(10, "parse/format round trips and deterministic CLI output", ok, t.elapsed(),
        &format!("{} multisegments, {} ring elements; bad: {bad_ms:?} {bad_rs:?} {nondeterministic:?}",
            ms.len(), rs.len()));
    assert!(ok);
}
