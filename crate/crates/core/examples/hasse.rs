//! Enumerate every multisegment with a given support and print the Hasse
//! diagram of the elementary-operation order as Graphviz DOT.
//!
//!     cargo run --example hasse -- -1,0,0,1 | dot -Tsvg > poset.svg

use spehlab::{parse_points, Poset};

fn main() -> Result<(), spehlab::Error> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "-1,0,0,1".into());
    let points = parse_points(&spec)?;
    let poset = Poset::with_support(&points);
    eprintln!("{} multisegments with support {{{spec}}}", poset.len());
    for (i, m) in poset.nodes().iter().enumerate() {
        let below: Vec<String> = poset
            .successors(i)
            .iter()
            .map(|&j| poset.nodes()[j].to_string())
            .collect();
        eprintln!("  {m} -> [{}]", below.join(", "));
    }
    print!("{}", poset.hasse().to_dot());
    Ok(())
}
