//! Dual multisegments by the Moeglin-Waldspurger algorithm, with the
//! per-round extraction log.
//!
//!     cargo run --example dual -- "(0..2)+(1..3)"

use spehlab::{mwa_dual, mwa_dual_traced, Multisegment};

fn main() -> Result<(), spehlab::Error> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "(0..2)+(1..3)+(1..1)".into());
    let m: Multisegment = input.parse()?;
    let (dual, trace) = mwa_dual_traced(&m);

    println!("M        = {m}");
    for (i, r) in trace.rounds.iter().enumerate() {
        let chain: Vec<String> = r.chain.iter().map(ToString::to_string).collect();
        println!("round {i}: from {} take {} -> {}", r.before, chain.join(", "), r.emitted);
    }
    println!("M#       = {dual}");
    println!("(M#)#    = {}", mwa_dual(&dual));
    println!(
        "m(M#) = {} <= t(M) = {}",
        dual.maxlength(),
        m.thickness()
    );
    Ok(())
}
