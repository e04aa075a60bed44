//! One line per acceptance criterion. Gating criteria fail the test; the
//! exploratory ones are printed only.
//!
//! `cargo test --release -p haiman --test acceptance -- --nocapture`

use std::time::{Duration, Instant};

use haiman::ideal::{generator_list, IdealSpec};
use haiman::verify::{run_check, CheckEntry, CheckName, CheckResult};

struct Line {
    id: &'static str,
    title: &'static str,
    gating: bool,
    passed: bool,
    elapsed: Duration,
    detail: Vec<String>,
}

fn run(names: &[(CheckName, u32, u32)], budget: Option<Duration>) -> (bool, Duration, Vec<String>) {
    let start = Instant::now();
    let results: Vec<CheckResult> = names
        .iter()
        .map(|&(name, a, b)| {
            run_check(&CheckEntry {
                name,
                d1_max: Some(a),
                d2_max: Some(b),
            })
        })
        .collect();
    let elapsed = start.elapsed();
    let mut detail: Vec<String> = results
        .iter()
        .flat_map(|r| r.failures.iter().take(3).chain(&r.notes).cloned())
        .collect();
    let mut passed = results.iter().all(|r| r.passed);
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push(format!("took {:.2} s, budget {:.0} s", elapsed.as_secs_f64(), b.as_secs_f64()));
        }
    }
    (passed, elapsed, detail)
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

/// Criterion 1 against the literal polynomials, independent of the
/// library's own copy.
fn j11_literal() -> (bool, Duration, Vec<String>) {
    let start = Instant::now();
    let want = [
        "a^2*c - a*c^2",
        "b^2*d - b*d^2",
        "a*b*c - a*c*d",
        "a*b*d - a*d^2",
        "a*d - b*c",
    ];
    let got: Vec<String> = generator_list(IdealSpec::new(1, 1).unwrap())
        .iter()
        .map(|g| g.value.to_string())
        .collect();
    let (mut passed, _, mut detail) = run(&[(CheckName::J11Generators, 1, 1)], None);
    if got != want {
        passed = false;
        detail.push(format!("got {got:?}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        passed = false;
        detail.push("over 1 s".into());
    }
    (passed, elapsed, detail)
}

#[test]
fn acceptance() {
    use CheckName::*;
    let mut lines = Vec::new();
    let mut push = |id, title, gating, (passed, elapsed, detail): (bool, Duration, Vec<String>)| {
        lines.push(Line {
            id,
            title,
            gating,
            passed,
            elapsed,
            detail,
        });
    };
    push("1", "J(1,1) generators verbatim", true, j11_literal());
    push("2", "generator count, membership, trapezoid fill, d1<=d2<=5", true, run(&[(Generators, 5, 5)], secs(10)));
    push("3", "oracle = basis = closed form, d1<=3, d2<=5", true, run(&[(HilbertTriple, 3, 5)], secs(300)));
    push("4", "generation up to total degree d1+d2+4, d1<=2, d2<=4", true, run(&[(Generation, 2, 4)], None));
    push("5", "J(1,1)^d1 J(0,1)^(d2-d1) factorizations and spans", true, run(&[(J111, 2, 4)], None));
    push("6", "F tableaux = explicit = trapezoid = generator degrees; n=2 brackets", true, run(&[(Catalan, 4, 6)], secs(30)));
    push("7", "H(d1,d2,d2) = closed form / ((1-q)(1-t)), d1<=3, d2<=5", true, run(&[(HilbertH, 3, 5)], secs(30)));
    push("7-literal", "H(d1,d1,d2) reading of the same identity", false, run(&[(HilbertHLiteral, 3, 5)], None));
    push("8", "fundamental domain, area/dinv bijection, zonotope, d1<=5, d2<=8", true, run(&[(Domain, 5, 8)], secs(30)));
    push("9", "α recursion, as_printed sign fails at d1=1, closed = iterated, k<=6", true, run(&[(Link, 6, 6)], secs(5)));
    push("9-compare", "comparison with the ideal's Hilbert series", false, run(&[(CompareWithIdeal, 2, 4)], None));
    push("10", "conjecture probes: d3-independence, n=4 positivity, n=4 oracle vs H", false, run(&[(Conjectures, 2, 3)], None));

    let mut gating_failures = 0;
    for l in &lines {
        let status = match (l.passed, l.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "INFO",
        };
        let tag = if l.gating { "" } else { " (non-gating)" };
        println!("criterion {:<10} {status}{tag}  {}  [{:.2} s]", l.id, l.title, l.elapsed.as_secs_f64());
        for d in &l.detail {
            println!("    {d}");
        }
        if l.gating && !l.passed {
            gating_failures += 1;
        }
    }
    assert_eq!(gating_failures, 0, "{gating_failures} gating criteria failed");
}
