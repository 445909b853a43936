use std::path::Path;
use std::process::{Command, Output};

use extremal_sf::cli::{EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_PARSE};
use extremal_sf::io::parse_edge_list;
use serde_json::Value;

fn extremal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = extremal(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_extremal_both_ways() {
    let dir = tempfile::tempdir().unwrap();
    let direct = dir.path().join("direct.txt");
    let recursive = dir.path().join("recursive.txt");
    ok(&["generate", "--model", "extremal-direct", "--t", "2", "--out", path_str(&direct)]);
    ok(&["generate", "--model", "extremal-recursive", "--t", "2", "--out", path_str(&recursive)]);

    let a = std::fs::read(&direct).unwrap();
    let b = std::fs::read(&recursive).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.lines().any(|l| l == "# n=15"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 30);
}

#[test]
fn generate_ba() {
    let text = ok(&["generate", "--model", "ba", "--n", "10", "--m", "2", "--seed", "7"]);
    let g = parse_edge_list(&text).unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(g.size(), 17);
    assert!(g.is_connected());
    assert_eq!(text, ok(&["generate", "--model", "ba", "--n", "10", "--m", "2", "--seed", "7"]));
}

#[test]
fn generate_rejects_bad_params() {
    let out = extremal(&["generate", "--model", "ba", "--n", "2", "--m", "2", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    let out = extremal(&["generate", "--model", "extremal-direct"]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    let out = extremal(&["generate", "--model", "nope"]);
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
}

#[test]
fn analyze_extremal_five() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g5.txt");
    ok(&["generate", "--model", "extremal-direct", "--t", "5", "--out", path_str(&edges)]);
    let report = ok(&["analyze", path_str(&edges)]);
    let v: Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["order"], 127);
    assert_eq!(v["size"], 446);
    assert_eq!(v["diameter"]["value"], 2);
    assert_eq!(v["verdicts"]["extremal_bound_met"], true);
    let gamma = v["gamma_fit"]["gamma"].as_f64().unwrap();
    assert!((gamma - 2.2389891106948396).abs() < 1e-9, "{gamma}");
    // byte-stable
    assert_eq!(report, ok(&["analyze", path_str(&edges)]));

    // explicit window and bounded diameter
    let narrowed = ok(&[
        "analyze", path_str(&edges), "--fit-klo", "9", "--fit-khi", "126", "--exact-budget", "10",
    ]);
    let w: Value = serde_json::from_str(&narrowed).unwrap();
    assert_eq!(w["gamma_fit"]["k_range"], serde_json::json!([9, 126]));
    assert_eq!(w["diameter"]["method"], "bounded");
    assert_eq!(w["diameter"]["value"], 2);
}

#[test]
fn analyze_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k6.txt");
    let mut text = String::from("# n=6\n");
    for u in 0..6 {
        for v in u + 1..6 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    std::fs::write(&path, text).unwrap();
    let v: Value = serde_json::from_str(&ok(&["analyze", path_str(&path)])).unwrap();
    assert_eq!(v["verdicts"]["is_complete"], true);
    assert_eq!(v["verdicts"]["scale_free_plausible"], false);
    assert_eq!(v["diameter"]["value"], 1);
}

#[test]
fn analyze_reports_parse_errors_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# n=4\n0 1\n3 x\n").unwrap();
    let out = extremal(&["analyze", path_str(&path)]);
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn analyze_disconnected_is_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.txt");
    std::fs::write(&path, "0 1\n2 3\n").unwrap();
    let v: Value = serde_json::from_str(&ok(&["analyze", path_str(&path)])).unwrap();
    assert_eq!(v["connected"], false);
    assert_eq!(v["diameter"], Value::Null);
}

#[test]
fn verify_modes() {
    for (mode, t) in [("formulas", "16"), ("equivalence", "6"), ("degree-table", "14"), ("diameter", "8")] {
        let v: Value = serde_json::from_str(&ok(&["verify", "--mode", mode, "--t", t])).unwrap();
        assert_eq!(v["pass"], true, "{mode}");
        assert_eq!(v["first_failure"], Value::Null);
    }
    let v: Value =
        serde_json::from_str(&ok(&["verify", "--mode", "diameter", "--t", "8"])).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["exact"], 2);
    }
    let out = extremal(&["verify", "--mode", "equivalence", "--t", "13"]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    assert_ne!(EXIT_CHECK_FAILED, EXIT_INVALID);
}

#[test]
fn export_dot() {
    let dot = ok(&["export-dot", "--t", "0"]);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 2);
    let dot = ok(&["export-dot", "--t", "2"]);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 15);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 30);
    assert_eq!(extremal(&["export-dot", "--t", "4"]).status.code(), Some(EXIT_INVALID));
}

#[test]
fn compare_with_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(
        ok(&["compare", "--spec", path_str(&empty)]),
        "model,n,params,seed,diameter,method\n"
    );

    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"[{"model":"ba","n":512,"m":2,"seed":3},{"model":"extremal","t":6},{"model":"extremal","t":3}]"#,
    )
    .unwrap();
    let out = dir.path().join("table.csv");
    ok(&["compare", "--spec", path_str(&spec), "--out", path_str(&out)]);
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "extremal,31,t=3,,2,exact");
    assert_eq!(lines[2], "extremal,255,t=6,,2,exact");
    assert!(lines[3].starts_with("ba,512,m=2,3,"));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(
        extremal(&["compare", "--spec", path_str(&bad)]).status.code(),
        Some(EXIT_PARSE)
    );
}

#[test]
fn thread_cap_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(["verify", "--mode", "diameter", "--t", "4"])
        .env("EXTREMAL_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}
