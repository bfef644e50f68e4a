//! Runs every verifier suite with default bounds and prints one line per
//! report.

use spehlab::verify::{run_suite, Suite, SuiteParams};

fn main() {
    let params = SuiteParams::default();
    for suite in Suite::ALL {
        for rep in run_suite(suite, &params) {
            println!("{}", rep.summary_line());
        }
    }
}
