use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn freiman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freiman"))
        .args(args)
        .env_remove("FREIMAN_CAP")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn graph_classify_square() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "c4.json",
        r#"{"n":4,"edges":[[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    let v = json(&freiman(&["graph", "classify", &f, "--no-timing"]));
    assert_eq!(v["verdict"]["freiman"], true);
    assert_eq!(v["numeric"]["mu_series"], serde_json::json!([1, 4, 9]));
    assert_eq!(v["numeric"]["h_partial"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["agreement"], true);
    assert!(v.get("timing").is_none());
    let timed = json(&freiman(&["graph", "classify", &f]));
    assert!(timed["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn edge_list_input_and_table_output() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k3.txt", "c triangle\np 3 3\n1 2\n2 3\n1 3\n");
    let out = freiman(&["graph", "classify", &f, "--format", "table", "--no-timing"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("freiman      true"), "{text}");
    assert!(text.contains("no-primitive-walks"), "{text}");
}

#[test]
fn matroid_classify_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "k4.json",
        r#"{"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let v = json(&freiman(&["matroid", "classify", &f, "--no-timing"]));
    assert_eq!(v["verdict"]["freiman"], false);
    assert_eq!(v["verdict"]["spread_formula"], 6);
    assert_eq!(v["base_count"], 16);
    assert!(v.get("h_vector").is_none());
    let v = json(&freiman(&[
        "matroid",
        "classify",
        &f,
        "--hvector",
        "--no-timing",
    ]));
    let reg = v["verdict"]["regularity"].as_u64().unwrap();
    assert!((3..=5).contains(&reg));
}

#[test]
fn ideal_analyze_reports_growth() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "i.txt", "x1*x2, x2*x3, x3*x4, x1*x4\n");
    let v = json(&freiman(&[
        "ideal",
        "analyze",
        &f,
        "--max-power",
        "3",
        "--no-timing",
    ]));
    assert_eq!(v["verdict"]["freiman"], true);
    assert_eq!(v["growth"]["mu_series"], serde_json::json!([1, 4, 9, 16]));
    assert_eq!(v["growth"]["h_partial"], serde_json::json!([1, 1, 0, 0]));
    assert_eq!(v["witness"]["weights"], serde_json::json!([1, 1, 1, 1]));
    let f = write(dir.path(), "w.json", "[[3,0],[0,1]]");
    let v = json(&freiman(&["ideal", "analyze", &f, "--no-timing"]));
    assert_eq!(v["witness"]["weights"], serde_json::json!([1, 3]));
    assert_eq!(v["witness"]["degree"], 3);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let not_antichain = write(dir.path(), "a.txt", "x1, x1*x2");
    let out = freiman(&["ideal", "analyze", &not_antichain]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("antichain"));

    let bad = write(dir.path(), "b.txt", "x1*x2,\nx2*y3");
    let out = freiman(&["ideal", "analyze", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 4"));

    let loop_edge = write(dir.path(), "l.json", r#"{"n":2,"edges":[[1,1]]}"#);
    assert_eq!(
        freiman(&["graph", "classify", &loop_edge]).status.code(),
        Some(1)
    );

    let not_qe = write(dir.path(), "q.txt", "x1^2, x1*x2, x2^3");
    let out = freiman(&["ideal", "analyze", &not_qe]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let edgeless = write(dir.path(), "e.json", r#"{"n":3,"edges":[]}"#);
    assert_eq!(
        freiman(&["graph", "classify", &edgeless]).status.code(),
        Some(2)
    );

    let k4 = write(
        dir.path(),
        "k4.txt",
        "p 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    );
    let out = freiman(&["graph", "classify", &k4, "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let out = Command::new(env!("CARGO_BIN_EXE_freiman"))
        .args(["graph", "classify", &k4])
        .env("FREIMAN_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let missing = dir.path().join("missing.json");
    assert_eq!(
        freiman(&["graph", "classify", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_dumps_reproducible_counterexamples() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("cx");
    let out = freiman(&[
        "verify",
        "--max-vertices",
        "3",
        "--max-edges",
        "3",
        "--dump-dir",
        dump.to_str().unwrap(),
        "--no-timing",
    ]);
    let v = json(&out);
    let n = v["counterexamples"].as_array().unwrap().len();
    // The cut-vertex spread formula misses the star K1,3.
    assert!(n > 0);
    let files: Vec<_> = std::fs::read_dir(&dump).unwrap().collect();
    assert_eq!(files.len(), n);
    for f in files {
        let path = f.unwrap().path();
        let out = freiman(&["matroid", "classify", path.to_str().unwrap(), "--no-timing"]);
        let r = json(&out);
        assert_ne!(
            r["verdict"]["spread_formula"],
            r["verdict"]["spread_numeric"]
        );
    }
    let strict = freiman(&[
        "verify",
        "--max-vertices",
        "3",
        "--max-edges",
        "3",
        "--strict",
    ]);
    assert_eq!(strict.status.code(), Some(5));
}
