//! Unwind the two-strand twist recursion for `P(β_{d1,d2})` under both
//! sign conventions.
//!
//! `cargo run --release --example braid_recursion`

use haiman::link::{alpha_recursion_holds, compare_with_ideal, hhh_closed, RecursionState, SignConvention};
use haiman::poly::RExpr;

fn main() {
    let base = RExpr::qt(0, 1);
    for conv in [SignConvention::RecursionConsistent, SignConvention::AsPrinted] {
        println!("{conv}:");
        println!("  α recursion at d1 = 1 holds: {}", alpha_recursion_holds(1, conv));
        let state = RecursionState::new(2, 3, conv);
        let unwound = state.finish(&base);
        println!("  P(β_{{2,5}}) with P(β_{{2,2}}) = t: {}", unwound.reduced());
        println!("  agrees with closed form: {}", unwound.eq_value(&hhh_closed(2, 3, &base, conv)));
    }
    let r = compare_with_ideal(1, &[1, 2, 3]);
    for e in &r.residuals {
        println!("d2 = {}: residual {} ({} grading matches)", e.d2, e.residual, e.matches.len());
    }
}
