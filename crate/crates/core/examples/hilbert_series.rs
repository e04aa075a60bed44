//! Hilbert series of J(d1, d2) by three routes: the closed form, the
//! explicit basis, and linear algebra on each graded slice.
//!
//! `cargo run --release --example hilbert_series`

use haiman::ideal::{hilbert_closed, hilbert_from_basis, hilbert_oracle, IdealSpec};
use haiman::poly::Window;

fn main() {
    let spec = IdealSpec::new(1, 2).unwrap();
    let closed = hilbert_closed(spec);
    println!("closed form: {}", closed.reduced());
    let w = Window::square(7, 7);
    let expanded = closed.expand(w).unwrap();
    let basis = hilbert_from_basis(spec, w);
    let oracle = hilbert_oracle(spec, w);
    println!("coefficients for q, t < 8 (rows q, columns t):");
    for x in 0..=7 {
        let row: Vec<String> = (0..=7).map(|y| format!("{:>3}", expanded.coeff(x, y))).collect();
        println!("  {}", row.join(""));
    }
    println!("basis agrees: {}", basis.disagreements(&oracle).is_empty());
    println!("closed form agrees: {}", expanded.disagreements(&oracle).is_empty());
}
