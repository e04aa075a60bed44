use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Value};

use crate::catalan::{catalan_f, hilbert_h};
use crate::domain::{
    area, dinv, full_bijection_check, lambda_and_line, phi, phi_case, polytope_vertices, subdiagrams,
    trapezoid_points, zonotope_check, PolytopeSpec,
};
use crate::ideal::{check_generation, generator_list, hilbert_closed, hilbert_from_basis, hilbert_oracle, IdealSpec};
use crate::link::{a_term, alpha_series, compare_with_ideal, RecursionState};
use crate::poly::{RExpr, TruncSeries, Window};
use crate::verify::{run_manifest, Manifest};

use super::{Command, Document, DomainView, GlobalArgs, HilbertMode, Outcome, Pair, UsageError, WindowArg};

/// Largest `d2` accepted by `gens`.
const GENS_MAX_D2: u32 = 12;

fn ok(doc: Document) -> Result<Outcome, UsageError> {
    Ok(Outcome {
        doc,
        passed: true,
        warnings: Vec::new(),
    })
}

fn spec(p: &Pair) -> Result<IdealSpec, UsageError> {
    Ok(IdealSpec::new(p.d1, p.d2)?)
}

fn timed<T>(doc_timings: &mut BTreeMap<String, f64>, on: bool, key: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let v = f();
    if on {
        doc_timings.insert(key.to_string(), start.elapsed().as_secs_f64() * 1000.0);
    }
    v
}

pub(super) fn dispatch(cmd: &Command, g: &GlobalArgs) -> Result<Outcome, UsageError> {
    match cmd {
        Command::Gens { pair, cutoff } => gens(pair, *cutoff, g),
        Command::Hilbert { pair, mode, all, window } => hilbert(pair, *mode, *all, *window, g),
        Command::Catalan { d, series } => catalan(d, *series, g),
        Command::Hhh {
            d1,
            k,
            sign_convention,
            compare,
        } => hhh(*d1, *k, *sign_convention, compare, g),
        Command::Domain { view, d1, d2, d } => domain(*view, *d1, *d2, d, g),
        Command::Verify { manifest, print_default } => verify(manifest.as_deref(), *print_default),
    }
}

fn gens(pair: &Pair, cutoff: Option<u32>, g: &GlobalArgs) -> Result<Outcome, UsageError> {
    let s = spec(pair)?;
    if s.d2 > GENS_MAX_D2 {
        return Err(UsageError(format!("gens supports d2 <= {GENS_MAX_D2}, got {}", s.d2)));
    }
    let mut doc = Document::new("gens", &["family", "i", "j", "qdeg", "tdeg", "polynomial"]);
    doc.param("d1", s.d1);
    doc.param("d2", s.d2);
    let list = timed(&mut doc.timings, g.timings, "generators", || generator_list(s));
    for gen in &list {
        doc.row(vec![
            json!(gen.family.to_string()),
            json!(gen.i),
            json!(gen.j),
            json!(gen.bidegree.0),
            json!(gen.bidegree.1),
            json!(gen.value.to_string()),
        ]);
    }
    let mut passed = true;
    if let Some(c) = cutoff {
        doc.param("cutoff", c);
        let r = timed(&mut doc.timings, g.timings, "generation_check", || check_generation(s, c));
        doc.param("generation_passed", r.passed());
        passed = r.passed();
    }
    Ok(Outcome {
        doc,
        passed,
        warnings: Vec::new(),
    })
}

fn window_for(s: IdealSpec, w: Option<WindowArg>) -> Result<Window, UsageError> {
    let limit = 2 * s.d1 + s.d2 + 8;
    let w = w.unwrap_or(WindowArg {
        q: 2 * s.d1 + s.d2 + 4,
        t: 2 * s.d1 + s.d2 + 4,
    });
    if w.q > limit || w.t > limit {
        return Err(UsageError(format!("window {}x{} exceeds {limit}x{limit}", w.q, w.t)));
    }
    Ok(Window::square(w.q as i32 - 1, w.t as i32 - 1))
}

fn coefficient_rows(doc: &mut Document, s: &TruncSeries) {
    for ((x, y), c) in s.iter() {
        doc.row(vec![json!(x), json!(y), json!(c.to_string())]);
    }
}

fn hilbert(pair: &Pair, mode: HilbertMode, all: bool, window: Option<WindowArg>, g: &GlobalArgs) -> Result<Outcome, UsageError> {
    let s = spec(pair)?;
    let expand = |e: RExpr, w: Window| e.expand(w).map_err(UsageError::from);
    if all {
        let w = window_for(s, window)?;
        let mut doc = Document::new("hilbert", &["q", "t", "closed", "basis", "oracle", "agree"]);
        doc.param("d1", s.d1);
        doc.param("d2", s.d2);
        doc.param("mode", "all");
        doc.param("window", format!("{}x{}", w.qmax + 1, w.tmax + 1));
        let closed = timed(&mut doc.timings, g.timings, "closed", || expand(hilbert_closed(s), w))?;
        let basis = timed(&mut doc.timings, g.timings, "basis", || hilbert_from_basis(s, w));
        let oracle = timed(&mut doc.timings, g.timings, "oracle", || hilbert_oracle(s, w));
        let mut passed = true;
        for (x, y) in w.points() {
            let (a, b, c) = (closed.coeff(x, y), basis.coeff(x, y), oracle.coeff(x, y));
            let agree = a == b && b == c;
            passed &= agree;
            if num_traits::Zero::is_zero(&a) && agree {
                continue;
            }
            doc.row(vec![json!(x), json!(y), json!(a.to_string()), json!(b.to_string()), json!(c.to_string()), json!(agree)]);
        }
        doc.param("equal", passed);
        return Ok(Outcome {
            doc,
            passed,
            warnings: Vec::new(),
        });
    }
    let mode_name = match mode {
        HilbertMode::Closed => "closed",
        HilbertMode::Basis => "basis",
        HilbertMode::Oracle => "oracle",
    };
    if mode == HilbertMode::Closed && window.is_none() {
        let mut doc = Document::new("hilbert", &["expression"]);
        doc.param("d1", s.d1);
        doc.param("d2", s.d2);
        doc.param("mode", mode_name);
        let e = timed(&mut doc.timings, g.timings, "closed", || hilbert_closed(s).reduced());
        doc.row(vec![json!(e.to_string())]);
        return ok(doc);
    }
    let w = window_for(s, window)?;
    let mut doc = Document::new("hilbert", &["q", "t", "coefficient"]);
    doc.param("d1", s.d1);
    doc.param("d2", s.d2);
    doc.param("mode", mode_name);
    doc.param("window", format!("{}x{}", w.qmax + 1, w.tmax + 1));
    let series = timed(&mut doc.timings, g.timings, mode_name, || match mode {
        HilbertMode::Closed => expand(hilbert_closed(s), w),
        HilbertMode::Basis => Ok(hilbert_from_basis(s, w)),
        HilbertMode::Oracle => Ok(hilbert_oracle(s, w)),
    })?;
    coefficient_rows(&mut doc, &series);
    ok(doc)
}

fn catalan(d: &[u32], series: bool, g: &GlobalArgs) -> Result<Outcome, UsageError> {
    if d.windows(2).any(|w| w[0] > w[1]) {
        return Err(UsageError(format!("degree vector {d:?} is not ascending")));
    }
    let d_json: Vec<Value> = d.iter().map(|&x| json!(x)).collect();
    if series {
        let mut doc = Document::new("catalan", &["expression"]);
        doc.param("d", d_json);
        doc.param("quantity", "H");
        let h = timed(&mut doc.timings, g.timings, "tableaux", || hilbert_h(d))?;
        doc.row(vec![json!(h.to_string())]);
        return ok(doc);
    }
    let mut doc = Document::new("catalan", &["q", "t", "coefficient"]);
    doc.param("d", d_json);
    doc.param("quantity", "F");
    let f = timed(&mut doc.timings, g.timings, "tableaux", || catalan_f(d))?;
    doc.param("polynomial", f.to_string());
    let mut terms: Vec<(i32, i32, String)> = f
        .terms()
        .map(|(m, c)| (m.exp(crate::poly::Var::Q), m.exp(crate::poly::Var::T), c.to_string()))
        .collect();
    terms.sort();
    for (x, y, c) in terms {
        doc.row(vec![json!(x), json!(y), json!(c)]);
    }
    ok(doc)
}

fn hhh(d1: u32, k: u32, conv: crate::link::SignConvention, compare: &[u32], g: &GlobalArgs) -> Result<Outcome, UsageError> {
    let mut doc = Document::new("hhh", &["quantity", "k", "value"]);
    doc.param("d1", d1);
    doc.param("k", k);
    doc.param("sign_convention", conv.to_string());
    doc.row(vec![json!("A"), json!(Value::Null), json!(a_term(d1, conv).to_string())]);
    doc.row(vec![json!("alpha"), json!(Value::Null), json!(alpha_series(d1, conv).to_string())]);
    let mut state = RecursionState::new(d1, k, conv);
    while let Some(next) = state.step() {
        state = next;
        doc.row(vec![
            json!("unwound"),
            json!(state.unwound),
            json!(format!("{} + (q/t)^{} * P(beta_{{{d1},{}}})", state.series.reduced(), state.unwound, d1 + state.extra_twists)),
        ]);
    }
    let mut warnings = Vec::new();
    if !compare.is_empty() {
        if compare.iter().any(|&d2| d2 < d1.max(1)) {
            return Err(UsageError(format!("--compare needs d2 >= max(d1, 1), got {compare:?}")));
        }
        let r = timed(&mut doc.timings, g.timings, "compare", || compare_with_ideal(d1, compare));
        for e in &r.residuals {
            doc.row(vec![json!("residual"), json!(e.d2), json!(format!("{} ({} grading matches)", e.residual, e.matches.len()))]);
        }
        doc.param("d2_independent", r.d2_independent);
        warnings.push("the comparison with the ideal is exploratory and does not affect the exit code".to_string());
    }
    Ok(Outcome {
        doc,
        passed: true,
        warnings,
    })
}

fn need_pair(d1: Option<u32>, d2: Option<u32>) -> Result<(u32, u32), UsageError> {
    match (d1, d2) {
        (Some(a), Some(b)) if a <= b => Ok((a, b)),
        (Some(a), Some(b)) => Err(UsageError(format!("need d1 <= d2, got ({a}, {b})"))),
        _ => Err(UsageError("this view needs --d1 and --d2".into())),
    }
}

fn polytope_spec(d1: Option<u32>, d2: Option<u32>, d: &[u32]) -> Result<PolytopeSpec, UsageError> {
    if !d.is_empty() {
        return Ok(PolytopeSpec::new(d.to_vec())?);
    }
    let (a, b) = need_pair(d1, d2)?;
    Ok(PolytopeSpec::three(a, b)?)
}

fn domain(view: DomainView, d1: Option<u32>, d2: Option<u32>, d: &[u32], g: &GlobalArgs) -> Result<Outcome, UsageError> {
    let _ = g;
    let mut passed = true;
    let doc = match view {
        DomainView::Vertices => {
            let s = polytope_spec(d1, d2, d)?;
            let mut doc = Document::new("domain", &["sigma", "vertex", "sum"]);
            doc.param("view", "vertices");
            doc.param("hyperplane_level", s.hyperplane_level());
            for (sigma, p) in polytope_vertices(&s)? {
                doc.row(vec![json!(sigma.to_string()), json!(p.to_string()), json!(p.sum())]);
            }
            doc
        }
        DomainView::Zonotope => {
            let s = polytope_spec(d1, d2, d)?;
            let r = zonotope_check(&s)?;
            let mut doc = Document::new("domain", &["property", "value"]);
            doc.param("view", "zonotope");
            passed = r.passed();
            let props = [
                ("distinct_vertices", json!(r.distinct_vertices)),
                ("hyperplane", json!(r.hyperplane)),
                ("decomposition", json!(r.decomposition)),
                ("reversed_rule", json!(r.reversed_rule)),
                ("endpoint_sums_in_hull", json!(r.endpoint_sums_in_hull)),
                ("vertices_are_endpoint_sums", json!(r.vertices_are_endpoint_sums)),
            ];
            for (k, v) in props {
                doc.row(vec![json!(k), v]);
            }
            for (a, b) in &r.segments {
                doc.row(vec![json!("segment"), json!(format!("[{a}, {b}]"))]);
            }
            doc
        }
        DomainView::Lambda => {
            let (a, b) = need_pair(d1, d2)?;
            let l = lambda_and_line(a, b)?;
            let mut doc = Document::new("domain", &["property", "value"]);
            doc.param("view", "lambda");
            passed = l.matches;
            doc.row(vec![json!("lambda"), json!(format!("{:?}", l.lambda.parts()))]);
            doc.row(vec![json!("line"), json!(format!("x + {}y = {} + eps", l.slope, l.rhs))]);
            doc.row(vec![json!("matches"), json!(l.matches)]);
            doc
        }
        DomainView::Diagrams => {
            let (a, b) = need_pair(d1, d2)?;
            let mut doc = Document::new("domain", &["a", "b", "mu", "area", "dinv", "case", "phi"]);
            doc.param("view", "diagrams");
            for mu in subdiagrams(a, b)? {
                let (r1, r2) = mu.rows();
                doc.row(vec![
                    json!(mu.a),
                    json!(mu.b),
                    json!(format!("({r1},{r2})")),
                    json!(area(&mu, a, b)),
                    json!(dinv(&mu, b)),
                    json!(format!("{:?}", phi_case(&mu, b))),
                    json!(phi(&mu, a, b).to_string()),
                ]);
            }
            doc
        }
        DomainView::Trapezoid => {
            let (a, b) = need_pair(d1, d2)?;
            let t = trapezoid_points(a, b)?;
            let mut doc = Document::new("domain", &["x", "y"]);
            doc.param("view", "trapezoid");
            doc.param("polynomial", t.polynomial.to_string());
            for p in &t.points {
                doc.row(vec![json!(p.0[0]), json!(p.0[1])]);
            }
            doc
        }
        DomainView::Bijection => {
            let (a, b) = need_pair(d1, d2)?;
            let r = full_bijection_check(a, b)?;
            passed = r.passed();
            let mut doc = Document::new("domain", &["property", "value"]);
            doc.param("view", "bijection");
            let v = serde_json::to_value(&r).expect("reports serialize");
            for (k, val) in v.as_object().expect("struct") {
                if k != "d1" && k != "d2" {
                    doc.row(vec![json!(k), val.clone()]);
                }
            }
            doc
        }
    };
    let mut doc = doc;
    if let Some(a) = d1 {
        doc.param("d1", a);
    }
    if let Some(b) = d2 {
        doc.param("d2", b);
    }
    if !d.is_empty() {
        doc.param("d", d.iter().map(|&x| json!(x)).collect::<Vec<_>>());
    }
    Ok(Outcome {
        doc,
        passed,
        warnings: Vec::new(),
    })
}

fn verify(path: Option<&std::path::Path>, print_default: bool) -> Result<Outcome, UsageError> {
    if print_default {
        let mut doc = Document::new("verify", &["manifest"]);
        doc.row(vec![json!(Manifest::default_suite().to_toml())]);
        return ok(doc);
    }
    let manifest = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))?;
            Manifest::from_toml(&text)?
        }
        None => Manifest::default_suite(),
    };
    let report = run_manifest(&manifest);
    let mut doc = Document::new(
        "verify",
        &["name", "exploratory", "passed", "cases", "d1_max", "d2_max", "failures", "notes"],
    );
    doc.param("manifest", path.map(|p| p.display().to_string()).unwrap_or_else(|| "default".into()));
    for r in &report.results {
        doc.row(vec![
            json!(r.name.to_string()),
            json!(r.exploratory),
            json!(r.passed),
            json!(r.cases),
            json!(r.d1_max),
            json!(r.d2_max),
            json!(r.failures.join("; ")),
            json!(r.notes.join("; ")),
        ]);
        doc.timings.insert(r.name.to_string(), r.elapsed_ms);
    }
    doc.param("passed", report.passed());
    Ok(Outcome {
        passed: report.passed(),
        doc,
        warnings: report.warnings,
    })
}
