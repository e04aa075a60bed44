//! Batch verification: a manifest of check families with parameter ranges,
//! and one function per family returning a [`CheckResult`].
//!
//! Exploratory checks are reported but never make a run fail.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalan::{catalan_f, catalan_f3_explicit, check_d3_independence, hilbert_h};
use crate::domain::{
    full_bijection_check, lambda_and_line, polytope_vertices, trapezoid_points, zonotope_check,
    LatticePoint, PolytopeSpec,
};
use crate::ideal::{
    graded_dim_oracle_general, generator_list, hilbert_closed, hilbert_from_basis, hilbert_oracle,
    member_j, GeneralIdealSpec, IdealSpec,
};
use crate::link::{alpha_recursion_holds, alpha_series, a_term, compare_with_ideal, hhh_closed, hhh_step, SignConvention};
use crate::poly::{inv_product, qt_bracket, Mono, Poly, RExpr, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    J11Generators,
    Generators,
    HilbertTriple,
    Generation,
    J111,
    Catalan,
    HilbertH,
    HilbertHLiteral,
    Domain,
    Link,
    Conjectures,
    CompareWithIdeal,
}

impl CheckName {
    pub const ALL: [CheckName; 12] = [
        CheckName::J11Generators,
        CheckName::Generators,
        CheckName::HilbertTriple,
        CheckName::Generation,
        CheckName::J111,
        CheckName::Catalan,
        CheckName::HilbertH,
        CheckName::HilbertHLiteral,
        CheckName::Domain,
        CheckName::Link,
        CheckName::Conjectures,
        CheckName::CompareWithIdeal,
    ];

    pub fn exploratory(self) -> bool {
        matches!(
            self,
            CheckName::HilbertHLiteral | CheckName::Conjectures | CheckName::CompareWithIdeal
        )
    }

    /// Default `(d1_max, d2_max)`.
    pub fn default_range(self) -> (u32, u32) {
        match self {
            CheckName::J11Generators => (1, 1),
            CheckName::Generators => (5, 5),
            CheckName::HilbertTriple => (3, 5),
            CheckName::Generation | CheckName::J111 => (2, 4),
            CheckName::Catalan => (4, 6),
            CheckName::HilbertH | CheckName::HilbertHLiteral => (3, 5),
            CheckName::Domain => (5, 8),
            CheckName::Link => (6, 6),
            CheckName::Conjectures => (2, 3),
            CheckName::CompareWithIdeal => (2, 4),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::J11Generators => "j11_generators",
            CheckName::Generators => "generators",
            CheckName::HilbertTriple => "hilbert_triple",
            CheckName::Generation => "generation",
            CheckName::J111 => "j111",
            CheckName::Catalan => "catalan",
            CheckName::HilbertH => "hilbert_h",
            CheckName::HilbertHLiteral => "hilbert_h_literal",
            CheckName::Domain => "domain",
            CheckName::Link => "link",
            CheckName::Conjectures => "conjectures",
            CheckName::CompareWithIdeal => "compare_with_ideal",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub name: CheckName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2_max: Option<u32>,
}

impl CheckEntry {
    pub fn range(&self) -> (u32, u32) {
        let (a, b) = self.name.default_range();
        (self.d1_max.unwrap_or(a), self.d2_max.unwrap_or(b))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub checks: Vec<CheckEntry>,
}

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("malformed manifest: {0}")]
    Parse(#[from] toml::de::Error),
}

impl Manifest {
    pub fn from_toml(s: &str) -> Result<Manifest, ManifestError> {
        Ok(toml::from_str(s)?)
    }

    /// Every check family at its default range.
    pub fn default_suite() -> Manifest {
        Manifest {
            checks: CheckName::ALL
                .iter()
                .map(|&name| CheckEntry {
                    name,
                    d1_max: None,
                    d2_max: None,
                })
                .collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: CheckName,
    pub exploratory: bool,
    pub passed: bool,
    pub d1_max: u32,
    pub d2_max: u32,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl CheckResult {
    /// Whether this result makes a run fail.
    pub fn gating_failure(&self) -> bool {
        !self.passed && !self.exploratory
    }

    /// One line such as `PASS generators (21 cases, 0.4 s)`.
    pub fn summary_line(&self) -> String {
        let status = match (self.passed, self.exploratory) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "INFO",
        };
        let tag = if self.exploratory { " [exploratory]" } else { "" };
        format!(
            "{status} {}{tag} ({} cases, {:.2} s)",
            self.name,
            self.cases,
            self.elapsed_ms / 1000.0
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub results: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| !r.gating_failure())
    }
}

/// Pairs `0 <= d1 <= d2` with `d1 <= d1_max`, `d2 <= d2_max`.
pub fn pairs(d1_max: u32, d2_max: u32) -> Vec<(u32, u32)> {
    (0..=d2_max)
        .flat_map(|d2| (0..=d1_max.min(d2)).map(move |d1| (d1, d2)))
        .collect()
}

fn spec(d1: u32, d2: u32) -> IdealSpec {
    IdealSpec::new(d1, d2).expect("pairs are ordered")
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, items: Vec<(bool, String)>) {
        for (ok, s) in items {
            self.case(ok, || s);
        }
    }
}

fn finish(name: CheckName, (d1_max, d2_max): (u32, u32), start: Instant, t: Tally) -> CheckResult {
    CheckResult {
        name,
        exploratory: name.exploratory(),
        passed: t.failures.is_empty(),
        d1_max,
        d2_max,
        cases: t.cases,
        failures: t.failures,
        notes: t.notes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// The generators of `J(1,1)` in canonical term order.
pub const J11_EXPECTED: [(&str, &str); 5] = [
    ("A_{1,0}", "a^2*c - a*c^2"),
    ("B_{1,0}", "b^2*d - b*d^2"),
    ("C_{1,0}", "a*b*c - a*c*d"),
    ("D_0", "a*b*d - a*d^2"),
    ("D_1", "a*d - b*c"),
];

fn check_j11() -> Tally {
    let mut t = Tally::new();
    let got: Vec<(String, String)> = generator_list(spec(1, 1))
        .into_iter()
        .map(|g| (g.label(), g.value.to_string()))
        .collect();
    t.case(got.len() == 5, || format!("expected 5 generators, got {}", got.len()));
    for (label, value) in J11_EXPECTED {
        let found = got.iter().any(|(l, v)| l == label && v == value);
        t.case(found, || format!("{label} = {value} not produced; got {got:?}"));
    }
    t
}

fn point(x: i32, y: i32) -> LatticePoint {
    LatticePoint(vec![x as i64, y as i64])
}

fn check_generators(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    let results: Vec<Vec<(bool, String)>> = pairs(d1_max, d2_max)
        .par_iter()
        .map(|&(d1, d2)| {
            let mut out = Vec::new();
            let gens = generator_list(spec(d1, d2));
            let want: u32 = (0..=d1).map(|j| 2 * d1 + d2 + 1 - 3 * j).sum();
            out.push((gens.len() == want as usize, format!("({d1},{d2}): {} generators, want {want}", gens.len())));
            let bad: Vec<String> = gens
                .iter()
                .filter(|g| !member_j(&g.value, spec(d1, d2)).unwrap_or(false))
                .map(|g| g.label())
                .collect();
            out.push((bad.is_empty(), format!("({d1},{d2}): not in J: {bad:?}")));
            let degs: BTreeSet<LatticePoint> = gens.iter().map(|g| point(g.bidegree.0, g.bidegree.1)).collect();
            out.push((degs.len() == gens.len(), format!("({d1},{d2}): repeated bidegrees")));
            let trap: BTreeSet<LatticePoint> = trapezoid_points(d1, d2).unwrap().points.into_iter().collect();
            out.push((degs == trap, format!("({d1},{d2}): bidegrees do not fill the trapezoid")));
            out
        })
        .collect();
    results.into_iter().for_each(|r| t.merge(r));
    t
}

/// Window with `n` values of each degree, `0..n`.
fn square(n: u32) -> Window {
    Window::square(n as i32 - 1, n as i32 - 1)
}

fn check_hilbert_triple(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let s = spec(d1, d2);
        let w = square(2 * d1 + d2 + 4);
        let oracle = hilbert_oracle(s, w);
        let basis = hilbert_from_basis(s, w);
        let closed = hilbert_closed(s).expand(w).expect("polynomial denominators");
        let d = basis.disagreements(&oracle);
        t.case(d.is_empty(), || format!("({d1},{d2}): basis vs oracle differ at {d:?}"));
        let d = closed.disagreements(&oracle);
        t.case(d.is_empty(), || format!("({d1},{d2}): closed form vs oracle differ at {d:?}"));
    }
    t
}

fn check_generation(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let r = crate::ideal::check_generation(spec(d1, d2), d1 + d2 + 4);
        t.case(r.passed(), || format!("({d1},{d2}): {:?}", r.failures));
    }
    t
}

fn check_j111(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let r = crate::ideal::check_j111(spec(d1, d2), d1 + d2 + 4);
        t.case(r.factorization_failures.is_empty(), || {
            format!("({d1},{d2}): factorizations fail for {:?}", r.factorization_failures)
        });
        t.case(r.span.passed(), || format!("({d1},{d2}): span differs at {:?}", r.span.failures));
    }
    t
}

fn bidegree_poly(d1: u32, d2: u32) -> Poly {
    generator_list(spec(d1, d2))
        .iter()
        .map(|g| Poly::mono(Mono::qt(g.bidegree.0, g.bidegree.1)))
        .sum()
}

fn check_catalan(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let f = catalan_f(&[d1, d2, d2]);
        let explicit = catalan_f3_explicit(d1, d2).expect("ordered pair");
        let trap = trapezoid_points(d1, d2).expect("ordered pair").polynomial;
        let gens = bidegree_poly(d1, d2);
        let ok = matches!(&f, Ok(p) if *p == explicit) && trap == explicit && gens == explicit;
        t.case(ok, || format!("({d1},{d2}): F = {f:?}, explicit = {explicit}, trapezoid = {trap}, generators = {gens}"));
        let f2 = catalan_f(&[d1, d2]);
        let want = qt_bracket(d1 + 1);
        t.case(matches!(&f2, Ok(p) if *p == want), || format!("n=2 ({d1},{d2}): F = {f2:?}, want {want}"));
    }
    t
}

fn closed_over_qt(d1: u32, d2: u32) -> RExpr {
    hilbert_closed(spec(d1, d2)).mul(&inv_product(&[(1, 0), (0, 1)]))
}

fn check_hilbert_h(d1_max: u32, d2_max: u32, literal: bool) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let d = if literal { [d1, d1, d2] } else { [d1, d2, d2] };
        let h = hilbert_h(&d).expect("n = 3 is within the guard");
        let ok = h.eq_value(&closed_over_qt(d1, d2));
        t.case(ok, || format!("H{d:?} differs from the closed form of J({d1},{d2}) over (1-q)(1-t)"));
    }
    if literal {
        t.notes.push("H ignores the last entry of its vector, so this reading can only match when d1 = d2".into());
    }
    t
}

fn check_domain(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    let results: Vec<Vec<(bool, String)>> = pairs(d1_max, d2_max)
        .par_iter()
        .map(|&(d1, d2)| {
            let mut out = Vec::new();
            let r = full_bijection_check(d1, d2).expect("ordered pair");
            out.push((r.passed(), format!("({d1},{d2}): {r:?}")));
            let sizes = [r.half_hexagon, r.subdiagrams, r.trapezoid, r.generators];
            out.push((sizes.iter().all(|&s| s == r.generators), format!("({d1},{d2}): stage sizes {sizes:?}")));
            let z = zonotope_check(&PolytopeSpec::three(d1, d2).expect("ordered pair")).expect("n = 3");
            out.push((z.passed(), format!("({d1},{d2}): zonotope {z:?}")));
            let l = lambda_and_line(d1, d2).expect("ordered pair");
            out.push((l.matches, format!("({d1},{d2}): λ scan {:?}", l.boxes_below)));
            out
        })
        .collect();
    results.into_iter().for_each(|r| t.merge(r));
    // Vertices at n = 4 over ascending vectors with entries up to 3.
    for a in 0..=3u32 {
        for b in a..=3 {
            for c in b..=3 {
                for d in c..=3 {
                    let s = PolytopeSpec::new(vec![a, b, c, d]).expect("ascending");
                    let level = s.hyperplane_level();
                    let ok = polytope_vertices(&s)
                        .expect("n = 4")
                        .iter()
                        .all(|(_, p)| p.sum() == level);
                    t.case(ok, || format!("n=4 {:?}: vertex off the hyperplane", [a, b, c, d]));
                }
            }
        }
    }
    t
}

fn check_link(d1_max: u32, k_max: u32) -> Tally {
    use SignConvention::*;
    let mut t = Tally::new();
    for d1 in 0..=d1_max {
        t.case(alpha_recursion_holds(d1, RecursionConsistent), || {
            format!("d1={d1}: α recursion fails under recursion_consistent")
        });
        let closed = a_term(d1, RecursionConsistent).mul_mono(&Mono::qt(0, 1));
        t.case(alpha_series(d1, RecursionConsistent).eq_value(&closed), || {
            format!("d1={d1}: iterated α differs from t·A")
        });
    }
    t.case(!alpha_recursion_holds(1, AsPrinted), || "as_printed unexpectedly satisfies the α recursion at d1=1".into());
    let base = RExpr::qt(2, 1).mul(&inv_product(&[(0, 1)])).add(&RExpr::qt(0, 3));
    for conv in [RecursionConsistent, AsPrinted] {
        for d1 in 0..=d1_max.min(4) {
            let mut iter = base.clone();
            for k in 0..=k_max {
                if k > 0 {
                    iter = hhh_step(d1, &iter, conv);
                }
                t.case(hhh_closed(d1, k, &base, conv).eq_value(&iter), || {
                    format!("{conv} d1={d1} k={k}: closed form differs from iterated steps")
                });
            }
        }
    }
    t
}

fn check_conjectures(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for (d1, d2) in pairs(d1_max, d2_max) {
        let d3s: Vec<u32> = (d2..=d2 + 2).collect();
        let r = check_d3_independence(d1, d2, &d3s);
        t.case(matches!(&r, Ok(r) if r.constant), || format!("({d1},{d2}): F varies with d3: {r:?}"));
    }
    let mut n4 = 0;
    for a in 0..=2u32 {
        for b in a..=2 {
            for c in b..=2 {
                for d in c..=2 {
                    let f = catalan_f(&[a, b, c, d]);
                    let ok = matches!(&f, Ok(p) if p.terms().all(|(_, c)| c > &num_traits::Zero::zero()));
                    t.case(ok, || format!("F{:?} = {f:?} is not a polynomial with nonnegative coefficients", [a, b, c, d]));
                    n4 += 1;
                }
            }
        }
    }
    t.notes.push(format!("{n4} vectors at n=4 probed for positivity"));
    for d in [vec![0, 0, 1, 1], vec![0, 1, 1, 1], vec![1, 1, 1, 1]] {
        let g = GeneralIdealSpec::new(d.clone()).expect("ascending");
        let series = hilbert_h(&d).expect("n = 4").expand(Window::square(5, 5)).expect("polynomial denominators");
        let mut bad = Vec::new();
        for x in 0..=5u32 {
            for y in 0..=5 - x {
                let dim = graded_dim_oracle_general(&g, (x, y));
                if series.coeff(x as i32, y as i32) != crate::poly::int(dim as i64) {
                    bad.push((x, y));
                }
            }
        }
        t.case(bad.is_empty(), || format!("H{d:?} vs oracle differ at {bad:?}"));
    }
    t
}

fn check_compare(d1_max: u32, d2_max: u32) -> Tally {
    let mut t = Tally::new();
    for d1 in 0..=d1_max.min(d2_max) {
        let d2s: Vec<u32> = (d1.max(1)..=d2_max).collect();
        let r = compare_with_ideal(d1, &d2s);
        let matched = r.residuals.iter().filter(|e| !e.matches.is_empty()).count();
        t.notes.push(format!(
            "d1={d1}: {matched}/{} residuals match A(d1) up to grading; d2-independent: {}",
            r.residuals.len(),
            r.d2_independent
        ));
        t.case(matched == r.residuals.len(), || format!("d1={d1}: residuals without a grading match"));
    }
    t
}

/// Run one manifest entry.
pub fn run_check(entry: &CheckEntry) -> CheckResult {
    let range = entry.range();
    let (a, b) = range;
    let start = Instant::now();
    let tally = match entry.name {
        CheckName::J11Generators => check_j11(),
        CheckName::Generators => check_generators(a, b),
        CheckName::HilbertTriple => check_hilbert_triple(a, b),
        CheckName::Generation => check_generation(a, b),
        CheckName::J111 => check_j111(a, b),
        CheckName::Catalan => check_catalan(a, b),
        CheckName::HilbertH => check_hilbert_h(a, b, false),
        CheckName::HilbertHLiteral => check_hilbert_h(a, b, true),
        CheckName::Domain => check_domain(a, b),
        CheckName::Link => check_link(a, b),
        CheckName::Conjectures => check_conjectures(a, b),
        CheckName::CompareWithIdeal => check_compare(a, b),
    };
    finish(entry.name, range, start, tally)
}

/// Run a manifest; checks run one after another, each parallel inside.
pub fn run_manifest(manifest: &Manifest) -> VerifyReport {
    let mut warnings = Vec::new();
    if manifest.checks.is_empty() {
        warnings.push("manifest lists no checks; nothing was verified".to_string());
    }
    VerifyReport {
        results: manifest.checks.iter().map(run_check).collect(),
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parsing() {
        let m = Manifest::from_toml("[[checks]]\nname = \"generators\"\nd1_max = 1\n").unwrap();
        assert_eq!(m.checks[0].range(), (1, 5));
        assert!(Manifest::from_toml("[[checks]]\nname = \"nope\"\n").is_err());
        assert!(Manifest::from_toml("bogus = 1\n").is_err());
        let d = Manifest::default_suite();
        assert_eq!(Manifest::from_toml(&d.to_toml()).unwrap(), d);
    }

    #[test]
    fn empty_manifest_passes_with_warning() {
        let r = run_manifest(&Manifest::from_toml("").unwrap());
        assert!(r.passed());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn small_checks() {
        for name in [CheckName::J11Generators, CheckName::Generators, CheckName::Catalan, CheckName::Domain] {
            let r = run_check(&CheckEntry {
                name,
                d1_max: Some(1),
                d2_max: Some(2),
            });
            assert!(r.passed, "{r:?}");
        }
    }
}
