//! Checks the condensation identity
//! `F(l,k)(-1/2)·F(l,k)(1/2) = F(l,k-1)·F(l,k+1) + F(l-1,k)·F(l+1,k)`
//! by exact expansion over a grid of `(l, k)`.

use std::time::Instant;

use spehlab::speh::dodgson_check;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let t = Instant::now();
    let mut failures = 0;
    for l in 1..=max {
        for k in 1..=max {
            let rep = dodgson_check(l, k);
            println!("{} {}", rep.summary_line(), rep.detail.as_deref().unwrap_or(""));
            failures += usize::from(!rep.passed());
        }
    }
    println!("{failures} failures in {:.2?}", t.elapsed());
}
