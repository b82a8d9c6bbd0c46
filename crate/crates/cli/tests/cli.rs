use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_syncbound"));
    c.env_remove("SYNCBOUND_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn gen(dir: &TempDir, name: &str, spec: &[&str]) -> PathBuf {
    let mut args = vec!["gen"];
    args.extend_from_slice(spec);
    let o = run(&args);
    assert!(o.status.success());
    write(dir, name, &stdout(&o))
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn bound<'a>(doc: &'a Value, id: &str, kind: &str) -> &'a Value {
    doc["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["rule_id"] == id && b["kind"] == kind)
        .unwrap_or_else(|| panic!("no {id} {kind}"))
}

#[test]
fn gen_families() {
    let o = run(&["gen", "cycle", "5"]);
    assert_eq!(stdout(&o), "nodes 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    let o = run(&["gen", "product", "cycle", "4", "path", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("nodes 12\n"));
    assert_eq!(text.lines().count(), 1 + 20);
    let o = run(&["gen", "join", "empty", "3", "empty", "3"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
    let o = run(&["gen", "torus", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn spectrum_of_c5_and_k2() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", &["cycle", "5"]);
    let doc = json(&run(&["spectrum", c5.to_str().unwrap()]));
    let spec: Vec<f64> = doc["spectrum"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    let want = [0.0, 1.381966, 1.381966, 3.618034, 3.618034];
    for (a, b) in spec.iter().zip(want) {
        assert!((a - b).abs() < 1e-6);
    }
    assert_eq!(doc["format_version"], "1");
    let k2 = write(&dir, "k2.txt", "nodes 2\n0 1\n");
    let doc = json(&run(&["spectrum", k2.to_str().unwrap()]));
    assert_eq!(doc["spectrum"], serde_json::json!([0.0, 2.0]));
}

#[test]
fn parse_errors_exit_1_with_line_number() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "nodes 3\n0 1\na b\n");
    let o = run(&["spectrum", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3: invalid node id"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn disconnected_graphs() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "two.txt", "nodes 4\n0 1\n2 3\n");
    let o = run(&["spectrum", g.to_str().unwrap()]);
    assert!(o.status.success());
    let doc = json(&o);
    assert!(doc.get("eigenratio").is_none());
    assert_eq!(doc["notices"].as_array().unwrap().len(), 1);
    let o = run(&["bounds", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_c5_prism_and_bridge() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", &["cycle", "5"]);
    let doc = json(&run(&["bounds", c5.to_str().unwrap()]));
    for kind in ["lower_lambda_max", "upper_lambda2", "upper_r"] {
        assert_eq!(bound(&doc, "thm1.ii", kind)["attained"], true);
    }

    let prism = gen(&dir, "prism.txt", &["prism", "3"]);
    let doc = json(&run(&["bounds", prism.to_str().unwrap()]));
    assert_eq!(doc["lambda2"], 2.0);
    assert_eq!(doc["lambda_max"], 5.0);
    assert_eq!(bound(&doc, "thm1.i", "upper_r")["value"], 0.4);
    assert_eq!(bound(&doc, "thm1.i", "upper_r")["attained"], true);

    let mut body = String::from("nodes 8\n");
    for base in [0, 4] {
        for u in 0..4 {
            for v in (u + 1)..4 {
                body.push_str(&format!("{} {}\n", base + u, base + v));
            }
        }
    }
    body.push_str("3 4\n");
    let bridge = write(&dir, "bridge.txt", &body);
    let doc = json(&run(&["bounds", bridge.to_str().unwrap()]));
    assert_eq!(bound(&doc, "thm6.disconnected", "upper_lambda2")["value"], 1.0);
    assert_eq!(bound(&doc, "thm6.disconnected", "upper_r")["value"], 0.2);
}

#[test]
fn bounds_json_is_byte_stable_and_text_renders() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "g.txt", &["join", "path", "3", "cycle", "4"]);
    let a = run(&["bounds", g.to_str().unwrap()]);
    let b = run(&["bounds", "--json", g.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let t = stdout(&run(&["bounds", "--text", g.to_str().unwrap()]));
    assert!(t.contains("rule"));
    assert!(t.lines().any(|l| l.starts_with("lem2")));
}

#[test]
fn rule_selection_and_cutoff() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", &["cycle", "5"]);
    let doc = json(&run(&["bounds", "--rule", "lem2", "--rule", "cor3", c5.to_str().unwrap()]));
    let ids: Vec<&str> = doc["bounds"].as_array().unwrap().iter().map(|b| b["rule_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["cor3", "cor3", "lem2"]);
    assert_eq!(run(&["bounds", "--rule", "nope", c5.to_str().unwrap()]).status.code(), Some(1));

    let doc = json(&run(&["bounds", "--max-search-nodes", "3", "--rule", "thm1", c5.to_str().unwrap()]));
    assert!(doc["bounds"].as_array().unwrap().is_empty());
    assert_eq!(doc["notices"].as_array().unwrap().len(), 2);
}

#[test]
fn certificates_in_bounds() {
    let dir = TempDir::new().unwrap();
    let cube = gen(&dir, "cube.txt", &["product", "cycle", "4", "complete", "2"]);
    let good = write(
        &dir,
        "good.json",
        r#"{"kind": "product", "factor_a": {"family": "cycle", "params": [4]}, "factor_b": {"n": 2, "edges": [[0, 1]]}}"#,
    );
    let bad = write(&dir, "bad.json", r#"{"kind": "chain", "nodes": [0, 3]}"#);
    let o = run(&[
        "bounds",
        "--cert",
        good.to_str().unwrap(),
        "--cert",
        bad.to_str().unwrap(),
        cube.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let doc = json(&o);
    let b = bound(&doc, "thm5.product", "lower_lambda_max");
    assert_eq!(b["value"], 6.0);
    assert_eq!(b["attained"], true);
    assert!(doc["notices"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("bad.json")));
}

#[test]
fn verify_cert_outcomes() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "c4.txt", &["cycle", "4"]);
    let c5 = gen(&dir, "c5.txt", &["cycle", "5"]);
    let k2k2 = write(
        &dir,
        "k2k2.json",
        r#"{"kind": "product", "factor_a": {"family": "complete", "params": [2]}, "factor_b": {"family": "complete", "params": [2]}, "embedding": [0, 1, 3, 2]}"#,
    );
    let o = run(&["verify-cert", c4.to_str().unwrap(), "--cert", k2k2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // With the product's own labeling the identity embedding works.
    let square = gen(&dir, "square.txt", &["product", "complete", "2", "complete", "2"]);
    let identity = write(
        &dir,
        "identity.json",
        r#"{"kind": "product", "factor_a": {"family": "complete", "params": [2]}, "factor_b": {"family": "complete", "params": [2]}}"#,
    );
    let o = run(&["verify-cert", square.to_str().unwrap(), "--cert", identity.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["verify-cert", c5.to_str().unwrap(), "--cert", k2k2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("required edge"));

    let out_of_range = write(&dir, "oor.json", r#"{"kind": "odd_cycle", "nodes": [0, 1, 7]}"#);
    let o = run(&["verify-cert", c5.to_str().unwrap(), "--cert", out_of_range.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema error"));
}

#[test]
fn tolerance_from_environment() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", &["cycle", "5"]);
    let o = bin().args(["bounds", c5.to_str().unwrap()]).env("SYNCBOUND_TOL", "1e-6").output().unwrap();
    assert!(o.status.success());
    let o = bin().args(["bounds", c5.to_str().unwrap()]).env("SYNCBOUND_TOL", "-1").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lists_rules() {
    let o = run(&["rules"]);
    let names: Vec<&str> = std::str::from_utf8(&o.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(names, ["degree_ratio", "lem2", "cor1", "cor2", "cor3", "thm1", "thm2", "thm3", "thm4", "thm5", "thm6"]);
}
