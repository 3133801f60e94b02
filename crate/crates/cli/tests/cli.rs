use std::io::Write;
use std::process::{Command, Output};

use localelab::formats::parse_frame;
use localelab::theorems::CheckReport;
use serde_json::Value;
use tempfile::NamedTempFile;

const THREE_CHAIN: &str =
    "elements: [\"0\", \"a\", \"1\"]\ncovers: [[\"0\", \"a\"], [\"a\", \"1\"]]\n";
const SQUARE: &str =
    "elements: [\"0\", \"p\", \"q\", \"1\"]\ncovers: [[\"0\", \"p\"], [\"0\", \"q\"], [\"p\", \"1\"], [\"q\", \"1\"]]\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_localelab"))
        .args(args)
        .env_remove("LOCALELAB_CAPS")
        .output()
        .unwrap()
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_three_chain_closed_point() {
    let f = file(THREE_CHAIN);
    let path = f.path().to_str().unwrap();
    let out = run(&[
        "classify",
        "--frame",
        path,
        "--sublocale",
        "a,1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for flag in ["nowhere_dense", "maximal_nwd", "hmnd"] {
        assert_eq!(v["flags"][flag], true, "{flag}");
    }
    assert_eq!(v["members"], serde_json::json!([1, 2]));
    assert!(out.stderr.is_empty());
}

#[test]
fn classify_completes_and_warns() {
    let f = file(THREE_CHAIN);
    let out = run(&[
        "classify",
        "--frame",
        f.path().to_str().unwrap(),
        "--sublocale",
        "a",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["subject"], serde_json::json!(["a", "1"]));
}

#[test]
fn boolean_square_has_no_mnd_sublocale() {
    let f = file(SQUARE);
    let out = run(&[
        "classify",
        "--frame",
        f.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let all = json(&out);
    let all = all.as_array().unwrap();
    assert!(all.len() > 1);
    for v in all {
        assert_eq!(v["flags"]["maximal_nwd"], false);
    }
}

#[test]
fn classify_space_subset() {
    let f = file("points: 2\nopens: [[], [0], [0, 1]]\n");
    let out = run(&[
        "classify",
        "--space",
        f.path().to_str().unwrap(),
        "--sublocale",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["subsetFlags"]["maximal_nwd"], true);
    assert_eq!(v["induced"]["flags"]["maximal_nwd"], true);
}

#[test]
fn check_report_round_trips() {
    let out = run(&["check", "--id", "prop-mndcmnd", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].passed() && reports[0].hypothesis_satisfied > 0);
    let again: Vec<CheckReport> =
        serde_json::from_str(&serde_json::to_string(&reports).unwrap()).unwrap();
    assert_eq!(again, reports);
}

#[test]
fn check_is_deterministic() {
    let strip = |out: Output| {
        let mut reports: Vec<CheckReport> = serde_json::from_slice(&out.stdout).unwrap();
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
        reports
    };
    let args = [
        "check",
        "--all",
        "--max-poset",
        "2",
        "--max-points",
        "2",
        "--max-map-size",
        "2",
        "--format",
        "json",
    ];
    let first = run(&args);
    let code = first.status.code();
    let second = run(&args);
    assert_eq!(code, second.status.code());
    assert_eq!(strip(first), strip(second));
}

#[test]
fn failing_check_exits_one() {
    let out = run(&["check", "--id", "prop-mapmnd", "--max-map-size", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL prop-mapmnd"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "--id", "no-such-check"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "--all", "--max-poset", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "--frame", "/nonexistent/frame.txt"])
            .status
            .code(),
        Some(2)
    );
    let f = file(THREE_CHAIN);
    let out = run(&[
        "classify",
        "--frame",
        f.path().to_str().unwrap(),
        "--sublocale",
        "zz",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_frame_names_the_line() {
    let f = file("elements: [\"0\", \"1\"]\ncovers: [[\"0\", \"1\"]\n");
    let out = run(&["classify", "--frame", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":2") && err.contains("covers"), "{err}");
}

#[test]
fn caps_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_localelab"))
        .args(["check", "--id", "oracle-nd", "--format", "json"])
        .env("LOCALELAB_CAPS", "max-poset=2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = serde_json::from_slice(&out.stdout).unwrap();
    // one frame per poset with at most two elements
    assert_eq!(reports[0].instances, 4);

    let bad = Command::new(env!("CARGO_BIN_EXE_localelab"))
        .args(["check", "--id", "oracle-nd"])
        .env("LOCALELAB_CAPS", "max-poset")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn generated_frames_parse_back() {
    let out = run(&["generate", "--max-poset", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let frames: Vec<_> = text
        .lines()
        .map(|l| parse_frame(l, "generated").unwrap())
        .collect();
    assert_eq!(frames.len(), 9);
}

#[test]
fn report_lists_scope() {
    let out = run(&[
        "report",
        "--max-poset",
        "2",
        "--max-points",
        "2",
        "--max-map-size",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(!v["outOfScope"].as_array().unwrap().is_empty());
    assert_eq!(v["corpus"]["frames"], 4);
}
