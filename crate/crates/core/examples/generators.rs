//! List the generators of J(d1, d2) and confirm they span the ideal in low
//! degrees.
//!
//! `cargo run --release --example generators -- 2 3`

use haiman::ideal::{check_generation, expected_generator_count, generator_list, member_j, IdealSpec};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (d1, d2) = match args[..] {
        [a, b] => (a, b),
        _ => (1, 2),
    };
    let spec = IdealSpec::new(d1, d2).expect("d1 <= d2");
    let gens = generator_list(spec);
    println!("J({d1},{d2}): {} generators (expected {})", gens.len(), expected_generator_count(spec));
    for g in &gens {
        let inside = member_j(&g.value, spec).unwrap();
        println!("  {:<8} deg {:?}  in J: {inside}  {}", g.label(), g.bidegree, g.value);
    }
    let report = check_generation(spec, d1 + d2 + 3);
    println!("span up to total degree {}: {} slices, passed = {}", report.cutoff, report.slices_checked, report.passed());
}
