//! Ideal membership in J(d1, d2) and in powers of a linear ideal.
//!
//! `cargo run --release --example membership`

use haiman::ideal::{member_j, member_linear_power, IdealSpec};
use haiman::poly::{Poly, Var};

fn main() {
    let (a, b, c, d) = (Poly::var(Var::A), Poly::var(Var::B), Poly::var(Var::C), Poly::var(Var::D));
    let det = &(&a * &d) - &(&b * &c);
    let spec = IdealSpec::new(1, 1).unwrap();
    println!("ad - bc in J(1,1): {}", member_j(&det, spec).unwrap());
    println!("ad in J(1,1): {}", member_j(&(&a * &d), spec).unwrap());
    let l1 = &a - &c;
    let l2 = &b - &d;
    let sq = &(&l1 * &l2) + &(&l1 * &l1);
    println!("(a-c)(b-d) + (a-c)^2 in (a-c, b-d)^2: {}", member_linear_power(&sq, &l1, &l2, 2).unwrap());
    println!("a - c in (a-c, b-d)^2: {}", member_linear_power(&l1, &l1, &l2, 2).unwrap());
}
