//! Command-line front end. The binary only forwards `std::env::args` here.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::multiseg::Multisegment;
use crate::mwa::{mwa_dual, mwa_dual_traced};
use crate::poset::{enumerate_with_support, hasse, is_leq};
use crate::report::Status;
use crate::speh::{bar_u, char_f, dodgson_sides, DEFAULT_BUDGET};
use crate::text::parse_points;
use crate::verify::{exit_code, run_suite, Suite, SuiteParams};

#[derive(Parser, Debug)]
#[command(name = "spehlab", version, about = "Exact multisegment combinatorics")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Treat budget-skipped checks as failures.
    #[arg(long, global = true)]
    strict: bool,
    /// Largest support (in points) the lemma checks will enumerate.
    #[arg(long, global = true, env = "SPEHLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dual multisegment by the Moeglin-Waldspurger algorithm.
    Dual {
        multisegment: String,
        /// Emit the per-round extraction log as JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Expand the character F(l, k).
    Char {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
    },
    /// Rectangle multisegment with k rows of length l.
    Speh {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        /// Row spacing 1/s.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        s: u64,
    },
    /// Decide LOWER <= UPPER.
    Leq { lower: String, upper: String },
    /// List every multisegment with the given support, e.g. `-1,0,0,1`.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Hasse diagram of the multisegments with the given support, as DOT.
    Hasse {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Expand both sides of the condensation identity for F(l, k).
    Dodgson {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verifier suite and print a JSON report array.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_l: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Distinct points for corpus suites.
        #[arg(long, default_value_t = 4)]
        points: usize,
        /// Largest multiplicity per point for corpus suites.
        #[arg(long, default_value_t = 2)]
        mult: usize,
        /// Largest support for the monotonicity suite.
        #[arg(long, default_value_t = 8)]
        max_support: usize,
        /// Random tie-break policies for the tie-break suite.
        #[arg(long, default_value_t = 100)]
        policies: u64,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: 2,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn parse_ms(s: &str) -> Result<Multisegment, Error> {
    s.parse()
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    let out = match &cli.cmd {
        Cmd::Dual { multisegment, trace } => {
            let m = parse_ms(multisegment)?;
            if *trace {
                let (d, t) = mwa_dual_traced(&m);
                let v = json!({ "input": m.to_string(), "dual": d.to_string(), "rounds": t.rounds });
                Outcome::ok(format!("{v}\n"))
            } else {
                let d = mwa_dual(&m);
                Outcome::ok(if json { format!("{}\n", d.to_json()) } else { format!("{d}\n") })
            }
        }
        Cmd::Char { l, k } => {
            let f = char_f(*l, *k);
            Outcome::ok(if json { format!("{}\n", f.to_json()) } else { format!("{f}\n") })
        }
        Cmd::Speh { l, k, s } => {
            let m = bar_u(*l, *k, *s as usize);
            Outcome::ok(if json { format!("{}\n", m.to_json()) } else { format!("{m}\n") })
        }
        Cmd::Leq { lower, upper } => {
            let (a, b) = (parse_ms(lower)?, parse_ms(upper)?);
            let r = is_leq(&a, &b);
            Outcome::ok(if json {
                format!(
                    "{}\n",
                    json!({ "lower": a.to_string(), "upper": b.to_string(), "leq": r })
                )
            } else {
                format!("{r}\n")
            })
        }
        Cmd::Enumerate { points } => {
            let all = enumerate_with_support(&parse_points(points)?);
            Outcome::ok(if json {
                format!("{}\n", serde_json::to_string(&all).expect("serializes"))
            } else {
                all.iter().fold(String::new(), |mut s, m| {
                    writeln!(s, "{m}").unwrap();
                    s
                })
            })
        }
        Cmd::Hasse { points } => {
            let h = hasse(&parse_points(points)?);
            Outcome::ok(if json {
                let nodes: Vec<String> = h.nodes.iter().map(ToString::to_string).collect();
                format!("{}\n", json!({ "nodes": nodes, "edges": h.edges }))
            } else {
                h.to_dot()
            })
        }
        Cmd::Dodgson { l, k } => {
            if *l == 0 || *k == 0 {
                return Err(Error::Precondition("dodgson needs l >= 1 and k >= 1".into()));
            }
            let (lhs, rhs) = dodgson_sides(*l, *k);
            let pass = lhs == rhs;
            let stdout = if json {
                format!(
                    "{}\n",
                    json!({ "l": l, "k": k, "pass": pass, "lhs": lhs, "rhs": rhs })
                )
            } else {
                format!(
                    "lhs: {lhs}\nrhs: {rhs}\n{}\n",
                    if pass { "pass" } else { "FAIL" }
                )
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: if pass { 0 } else { 1 },
            }
        }
        Cmd::Verify {
            suite,
            max_l,
            max_k,
            points,
            mult,
            max_support,
            policies,
        } => {
            let params = SuiteParams {
                max_l: *max_l,
                max_k: *max_k,
                points: *points,
                mult: *mult,
                max_support: *max_support,
                budget: cli.budget,
                policies: *policies,
            };
            let reports = run_suite(*suite, &params);
            let mut stderr = String::new();
            for r in &reports {
                writeln!(stderr, "{}", r.summary_line()).unwrap();
            }
            let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
            if skipped > 0 {
                writeln!(stderr, "{skipped} check(s) skipped by budget {}", cli.budget).unwrap();
            }
            Outcome {
                stdout: format!(
                    "{}\n",
                    serde_json::to_string_pretty(&reports).expect("serializes")
                ),
                stderr,
                code: exit_code(&reports, cli.strict),
            }
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("spehlab").chain(args.iter().copied()))
    }

    #[test]
    fn dual_examples() {
        assert_eq!(go(&["dual", "(0..2)"]).stdout, "(0..0)+(1..1)+(2..2)\n");
        assert_eq!(go(&["dual", "(-1..0)+(0..1)"]).stdout, "(-1..0)+(0..1)\n");
        assert_eq!(go(&["dual", "1"]).stdout, "1\n");
    }

    #[test]
    fn parse_errors_exit_2() {
        let o = go(&["dual", "(0..x)"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("byte 4"), "{}", o.stderr);
        assert_eq!(go(&["hasse", "0,a"]).code, 2);
        assert_eq!(go(&["verify", "--suite", "bogus"]).code, 2);
        assert_eq!(go(&["nonsense"]).code, 2);
    }

    #[test]
    fn hasse_examples() {
        let o = go(&["hasse", "0,1"]);
        assert_eq!(o.stdout.matches("label=").count(), 2);
        assert_eq!(o.stdout.matches("->").count(), 1);
        let o = go(&["hasse", "0,0"]);
        assert_eq!(o.stdout.matches("label=").count(), 1);
        assert_eq!(o.stdout.matches("->").count(), 0);
        let o = go(&["hasse", "-1,0,1"]);
        assert_eq!(o.stdout.matches("label=").count(), 4);
        assert_eq!(o.stdout.matches("->").count(), 4);
    }

    #[test]
    fn verify_exit_codes() {
        let o = go(&["verify", "--suite", "theorem-a", "--max-l", "6", "--max-k", "6"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 36);
        let o = go(&["verify", "--suite", "theorem-i", "--max-l", "3", "--max-k", "4", "--budget", "8"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("\"skipped\""));
        let o = go(&["--strict", "verify", "--suite", "theorem-i", "--max-l", "3", "--max-k", "4", "--budget", "8"]);
        assert_eq!(o.code, 1);
    }

    #[test]
    fn other_commands() {
        assert_eq!(
            go(&["char", "--l", "1", "--k", "2"]).stdout,
            "1·(-1/2..-1/2)+(1/2..1/2) - 1·(-1/2..1/2)\n"
        );
        assert_eq!(go(&["speh", "--l", "1", "--k", "2", "--s", "2"]).stdout, "(-1/4..-1/4)+(1/4..1/4)\n");
        assert_eq!(go(&["speh", "--l", "1", "--k", "2", "--s", "0"]).code, 2);
        assert_eq!(go(&["leq", "(0..1)", "(0..0)+(1..1)"]).stdout, "true\n");
        assert_eq!(go(&["leq", "(0..0)+(1..1)", "(0..1)"]).stdout, "false\n");
        assert_eq!(go(&["enumerate", "-1,0,1"]).stdout.lines().count(), 4);
        let o = go(&["dodgson", "--l", "2", "--k", "2"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.ends_with("pass\n"));
        assert_eq!(go(&["dodgson", "--l", "0", "--k", "2"]).code, 2);
    }

    #[test]
    fn trace_is_json() {
        let o = go(&["dual", "--trace", "(0..1)+(1..1)"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["dual"], "(0..0)+(1..1)+(1..1)");
        assert_eq!(v["rounds"].as_array().unwrap().len(), 3);
    }
}
