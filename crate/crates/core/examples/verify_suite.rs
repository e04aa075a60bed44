//! Run every check family at its default range and print one line each.
//!
//! `cargo run --release --example verify_suite`

use haiman::verify::{run_check, Manifest};

fn main() {
    let manifest = Manifest::default_suite();
    let mut failed = false;
    for entry in &manifest.checks {
        let r = run_check(entry);
        println!("{}", r.summary_line());
        for f in r.failures.iter().take(3) {
            println!("    {f}");
        }
        for n in &r.notes {
            println!("    note: {n}");
        }
        failed |= r.gating_failure();
    }
    std::process::exit(i32::from(failed));
}
