//! Generalized q,t-Catalan numbers from the tableaux sum, compared with the
//! explicit three-strand formula.
//!
//! `cargo run --release --example catalan`

use haiman::catalan::{catalan_f, catalan_f3_explicit, check_d3_independence, hilbert_h};

fn main() {
    for (d1, d2) in [(1, 1), (1, 2), (2, 3)] {
        let f = catalan_f(&[d1, d2, d2]).unwrap();
        let explicit = catalan_f3_explicit(d1, d2).unwrap();
        println!("F({d1},{d2},{d2}) = {f}");
        println!("  matches explicit formula: {}", f == explicit);
    }
    println!("F(1,1,1,1) = {}", catalan_f(&[1, 1, 1, 1]).unwrap());
    println!("H(0,1,1) = {}", hilbert_h(&[0, 1, 1]).unwrap());
    let r = check_d3_independence(1, 2, &[2, 3, 4, 5]).unwrap();
    println!("F(1,2,d3) constant in d3: {}", r.constant);
}
