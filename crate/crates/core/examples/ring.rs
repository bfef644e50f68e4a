//! Arithmetic with integer combinations of multisegment monomials.

use spehlab::{Exponent, Multisegment, RingElement};

fn mono(s: &str) -> RingElement {
    RingElement::from(s.parse::<Multisegment>().unwrap())
}

fn main() {
    let x = mono("(0..0)+(1..1)") - mono("(0..1)");
    let y = mono("(2..2)") + mono("(1..2)");
    let p = &x * &y;
    println!("x       = {x}");
    println!("y       = {y}");
    println!("x*y     = {p}");
    println!("deg     = {} + {} = {}", x.degree().unwrap(), y.degree().unwrap(), p.degree().unwrap());
    println!("x(1/2)  = {}", x.twist(Exponent::HALF));
    println!("refl(x) = {}", x.reflect());
    match x.dominant_monomial() {
        Ok((m, c)) => println!("dominant monomial of x: {c}·{m}"),
        Err(e) => println!("x: {e}"),
    }
    match p.dominant_monomial() {
        Ok((m, c)) => println!("dominant monomial of x*y: {c}·{m}"),
        Err(e) => println!("x*y: {e}"),
    }
    println!("json    = {}", x.to_json());
}
