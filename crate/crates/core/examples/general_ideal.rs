//! Graded dimensions of the general-n ideal, next to the coefficients of
//! the tableaux series H.
//!
//! `cargo run --release --example general_ideal`

use haiman::catalan::hilbert_h;
use haiman::ideal::{graded_dim_oracle_general, GeneralIdealSpec};
use haiman::poly::Window;

fn main() {
    let d = vec![0, 1, 1, 1];
    let spec = GeneralIdealSpec::new(d.clone()).unwrap();
    let h = hilbert_h(&d).unwrap().expand(Window::square(4, 4)).unwrap();
    println!("(x, y): oracle dim / H coefficient for d = {d:?}");
    for x in 0..=4u32 {
        for y in 0..=4 - x {
            let dim = graded_dim_oracle_general(&spec, (x, y));
            println!("  ({x}, {y}): {dim} / {}", h.coeff(x as i32, y as i32));
        }
    }
}
