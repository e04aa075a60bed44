use std::process::Command;

use haiman::cli::{cell_text, parse_csv, run_with, Document, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("haiman").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gens_table_lists_j11() {
    let (code, out, _) = run(&["gens", "--d1", "1", "--d2", "1"]);
    assert_eq!(code, EXIT_OK);
    for p in ["a^2*c - a*c^2", "b^2*d - b*d^2", "a*b*c - a*c*d", "a*b*d - a*d^2", "a*d - b*c"] {
        assert!(out.contains(p), "{p} missing in\n{out}");
    }
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn gens_at_d1_zero() {
    let (code, out, _) = run(&["gens", "--d1", "0", "--d2", "1", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let (_, rows) = parse_csv(&out).unwrap();
    let polys: Vec<&str> = rows.iter().map(|r| r[5].as_str()).collect();
    assert_eq!(polys, ["c", "d"]);
}

#[test]
fn json_round_trip_and_csv_agree() {
    let cases: &[&[&str]] = &[
        &["gens", "--d1", "1", "--d2", "2"],
        &["hilbert", "--d1", "1", "--d2", "1", "--mode", "oracle", "--window", "6x6"],
        &["catalan", "--d", "1,2,2"],
        &["domain", "--view", "diagrams", "--d1", "1", "--d2", "2"],
        &["hhh", "--d1", "1", "--k", "2"],
    ];
    for args in cases {
        let mut json_args = args.to_vec();
        json_args.extend(["--format", "json"]);
        let (code, json, _) = run(&json_args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        let doc: Document = serde_json::from_str(&json).unwrap();
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again, json, "{args:?}: JSON does not round-trip");

        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        let (_, csv, _) = run(&csv_args);
        let (header, rows) = parse_csv(&csv).unwrap();
        assert_eq!(rows.len(), doc.results.len());
        for (row, obj) in rows.iter().zip(&doc.results) {
            for (col, cell) in header.iter().zip(row) {
                assert_eq!(&cell_text(&obj[col]), cell, "{args:?} column {col}");
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["hilbert", "--d1", "1", "--d2", "2", "--all", "--window", "7x7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a, b);
    assert_eq!(a.0, EXIT_OK);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gens", "--d1", "2", "--d2", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["gens", "--d1", "0", "--d2", "13"]).0, EXIT_USAGE);
    assert_eq!(run(&["hilbert", "--d1", "1", "--d2", "1", "--window", "40x40"]).0, EXIT_USAGE);
    assert_eq!(run(&["hilbert", "--d1", "1", "--d2", "1", "--window", "8by8"]).0, EXIT_USAGE);
    assert_eq!(run(&["catalan", "--d", "2,1"]).0, EXIT_USAGE);
    assert_eq!(run(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(run(&["hhh", "--d1", "1", "--sign-convention", "wrong"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn hilbert_closed_at_origin() {
    let (code, out, _) = run(&["hilbert", "--d1", "0", "--d2", "0", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let (_, rows) = parse_csv(&out).unwrap();
    assert_eq!(rows[0][0], "1/((1 - t)^2*(1 - q)^2)");
}

#[test]
fn verify_manifests() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let (code, _, err) = run(&["verify", "--manifest", empty.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"));

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[[checks]]\nname = \"unknown\"\n").unwrap();
    assert_eq!(run(&["verify", "--manifest", bad.to_str().unwrap()]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--manifest", "/nonexistent/m.toml"]).0, EXIT_USAGE);

    let exploratory = dir.path().join("explore.toml");
    std::fs::write(&exploratory, "[[checks]]\nname = \"compare_with_ideal\"\nd1_max = 1\nd2_max = 2\n\n[[checks]]\nname = \"generators\"\nd1_max = 1\nd2_max = 2\n").unwrap();
    let out_path = dir.path().join("report.json");
    let (code, _, _) = run(&[
        "verify",
        "--manifest",
        exploratory.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: Document = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc.results.len(), 2);
    assert!(doc.timings.contains_key("generators"));
}

#[test]
fn exploratory_failures_do_not_fail_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.toml");
    std::fs::write(&m, "[[checks]]\nname = \"hilbert_h_literal\"\nd1_max = 1\nd2_max = 2\n").unwrap();
    let (code, out, _) = run(&["verify", "--manifest", m.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let (header, rows) = parse_csv(&out).unwrap();
    let passed = header.iter().position(|h| h == "passed").unwrap();
    assert_eq!(rows[0][passed], "false");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_haiman"))
        .args(["domain", "--view", "vertices", "--d1", "3", "--d2", "5", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("e,\"(0,3,8)\",11"), "{text}");
    let bad = Command::new(env!("CARGO_BIN_EXE_haiman")).args(["gens"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
