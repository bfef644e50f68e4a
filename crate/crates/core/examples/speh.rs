//! Rectangle multisegments and the determinantal character F(l, k).
//!
//!     cargo run --example speh -- 3 2

use spehlab::speh::{bar_u, char_f, leading_check, rect};
use spehlab::mwa_dual;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer"));
    let l = args.next().unwrap_or(2);
    let k = args.next().unwrap_or(3);

    let r = rect(l, k);
    println!("rect({l},{k})      = {r}");
    println!("dual           = {}", mwa_dual(&r));
    println!("rect({k},{l})      = {}", rect(k, l));
    println!("spacing 1/2    = {}", bar_u(l, k, 2));

    let f = char_f(l, k);
    println!("F({l},{k}) has {} terms, degree {}", f.len(), f.degree().unwrap());
    for (m, c) in f.terms() {
        println!("  {c:+} · {m}");
    }
    println!("{}", leading_check(l, k).summary_line());
}
