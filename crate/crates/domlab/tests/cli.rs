//! End-to-end CLI tests against the built binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn domlab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = domlab(&["generate", "t1"], dir.path());
    assert!(out.status.success());
    fs::write(dir.path().join("t1.g6"), stdout(&out)).unwrap();

    let solve = domlab(
        &["solve", "--param", "didf", "--graph", "t1.g6", "--witness"],
        dir.path(),
    );
    assert!(solve.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    assert_eq!(json["value"], 10);
    assert_eq!(json["method"], "dp");
    assert_eq!(json["witness"].as_array().unwrap().len(), 9);

    let solve = domlab(
        &[
            "solve",
            "--param",
            "ddr",
            "--graph",
            "t1.g6",
            "--no-ones",
            "--method",
            "brute",
        ],
        dir.path(),
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    assert_eq!(json["value"], 11);
    assert_eq!(json["method"], "brute");
    assert_eq!(json["witness"], serde_json::Value::Null);
}

#[test]
fn solve_accepts_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let edges = domlab(
        &["generate", "wounded_spider", "3", "2", "--format", "edges"],
        dir.path(),
    );
    fs::write(dir.path().join("ws.txt"), stdout(&edges)).unwrap();
    let solve = domlab(
        &["solve", "--param", "gamma", "--graph", "ws.txt"],
        dir.path(),
    );
    assert!(solve.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&solve)).unwrap();
    assert_eq!(json["value"], 3);
}

#[test]
fn check_exit_codes_distinguish_valid_invalid_usage() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = domlab(&["generate", "path", "2"], dir.path());
    fs::write(dir.path().join("p2.g6"), stdout(&g6)).unwrap();
    fs::write(dir.path().join("good.csv"), "vertex,value\n0,0\n1,3\n").unwrap();
    fs::write(dir.path().join("bad.csv"), "0,0\n1,0\n").unwrap();

    let ok = domlab(
        &[
            "check",
            "--kind",
            "didf",
            "--graph",
            "p2.g6",
            "--labeling",
            "good.csv",
        ],
        dir.path(),
    );
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("valid"));

    let bad = domlab(
        &[
            "check",
            "--kind",
            "drdf",
            "--graph",
            "p2.g6",
            "--labeling",
            "bad.csv",
            "--json",
        ],
        dir.path(),
    );
    assert_eq!(bad.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(json["valid"], false);

    let usage = domlab(&["generate", "nonsense", "3"], dir.path());
    assert_eq!(usage.status.code(), Some(2));

    let usage = domlab(
        &["solve", "--param", "didf", "--graph", "p2.g6", "--no-ones"],
        dir.path(),
    );
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn normalize_keeps_the_drawing_didf_at_weight_10() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = domlab(&["generate", "t1"], dir.path());
    fs::write(dir.path().join("t1.g6"), stdout(&g6)).unwrap();
    // The drawing labeling: w_i = 2, u1 = 1, u2 = 3 in the t1 layout.
    fs::write(
        dir.path().join("f.csv"),
        "vertex,value\n0,1\n1,3\n2,0\n3,0\n4,0\n5,0\n6,2\n7,2\n8,2\n",
    )
    .unwrap();
    let out = domlab(
        &[
            "normalize",
            "--kind",
            "didf",
            "--graph",
            "t1.g6",
            "--labeling",
            "f.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    // Already in leaf normal form (interior 1 at u1 stays): identity.
    assert_eq!(
        stdout(&out),
        "vertex,value\n0,1\n1,3\n2,0\n3,0\n4,0\n5,0\n6,2\n7,2\n8,2\n"
    );
}

#[test]
fn classify_reports_structures() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = domlab(&["generate", "healthy_spider", "3"], dir.path());
    fs::write(dir.path().join("hs.g6"), stdout(&g6)).unwrap();
    let out = domlab(&["classify", "--graph", "hs.g6"], dir.path());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["wounded_spider"], serde_json::Value::Null);
    assert_eq!(json["healthy_spider"]["head"], 0);
    assert_eq!(json["order"], 7);
}

#[test]
fn enumerate_counts_and_streams() {
    let dir = tempfile::tempdir().unwrap();
    let count = domlab(&["enumerate", "--n", "7", "--count-only"], dir.path());
    assert_eq!(stdout(&count).trim(), "11");
    let stream = domlab(&["enumerate", "--n", "5"], dir.path());
    let text = stdout(&stream);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.starts_with('D')));
}

#[test]
fn verify_suites_pass_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = domlab(&["verify", "bounds", "--n-max", "8"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("[PASS] bounds"));

    let out = domlab(
        &[
            "verify",
            "lemma6",
            "--samples",
            "200",
            "--n-max",
            "9",
            "--seed",
            "1",
            "--json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn census_via_cli_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    for (jobs, name) in [("1", "a.csv"), ("4", "b.csv")] {
        let out = domlab(
            &["census", "--n-max", "8", "--out", name, "--jobs", jobs],
            dir.path(),
        );
        assert!(out.status.success());
    }
    let a = fs::read(dir.path().join("a.csv")).unwrap();
    let b = fs::read(dir.path().join("b.csv")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn trees_from_file_feeds_the_harness() {
    let dir = tempfile::tempdir().unwrap();
    let stream = domlab(&["enumerate", "--n", "6"], dir.path());
    fs::write(dir.path().join("trees.g6"), stdout(&stream)).unwrap();
    let out = domlab(
        &[
            "verify",
            "characterization",
            "--n-max",
            "6",
            "--trees-from",
            "trees.g6",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6 tree(s) checked"));
}

#[test]
fn gap_search_finds_the_smallest_gap_tree_at_order_8() {
    let dir = tempfile::tempdir().unwrap();
    let out = domlab(&["gap-search", "--n-max", "8", "--json"], dir.path());
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = json.as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["n"], 8);
    assert_eq!(records[0]["gap"], 1);

    let none = domlab(&["gap-search", "--n-max", "7"], dir.path());
    assert!(stdout(&none).contains("no gap trees"));
}
