//! The fundamental-domain polytope and the area/dinv bijection with the
//! generators.
//!
//! `cargo run --release --example fundamental_domain`

use haiman::domain::{full_bijection_check, phi, polytope_vertices, subdiagrams, zonotope_check, PolytopeSpec};

fn main() {
    let spec = PolytopeSpec::three(3, 5).unwrap();
    for (sigma, p) in polytope_vertices(&spec).unwrap() {
        println!("p_{sigma} = {p}");
    }
    let z = zonotope_check(&spec).unwrap();
    println!("zonotope check passed: {}", z.passed());

    for mu in subdiagrams(1, 1).unwrap() {
        println!("μ = {:?} -> φ = {}", mu.rows(), phi(&mu, 1, 1));
    }
    let r = full_bijection_check(3, 5).unwrap();
    println!("(3,5): {} diagrams, {} generators, passed = {}", r.subdiagrams, r.generators, r.passed());
}
