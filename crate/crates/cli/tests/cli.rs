use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn facetor(args: &[&str]) -> Output {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => data(name).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    Command::new(env!("CARGO_BIN_EXE_facetor")).args(&args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    serde_json::from_str(&stdout(&facetor(&args))).unwrap()
}

#[test]
fn zk_prints_series() {
    assert_eq!(stdout(&facetor(&["zk", "@five_vertex.json"])), "1 + 2x^3 + 2x^5 + 5x^6 + 2x^7 (total 12)\n");
    assert_eq!(stdout(&facetor(&["zk", "@three_edges.json"])), "1 + 3x^3 + 3x^6 + x^9 (total 8)\n");
    assert_eq!(stdout(&facetor(&["zk", "@simplex.json"])), "1 (total 1)\n");
}

#[test]
fn zk_json_matches_text() {
    let v = json(&["zk", "@five_vertex.json"]);
    assert_eq!(v["poincare"]["text"], "1 + 2x^3 + 2x^5 + 5x^6 + 2x^7");
    assert_eq!(v["poincare"]["total"], 12);
    assert_eq!(v["poincare"]["terms"], serde_json::json!([[0, 1], [3, 2], [5, 2], [6, 5], [7, 2]]));
}

#[test]
fn tor_table() {
    let text = stdout(&facetor(&["tor", "@five_vertex.json"]));
    assert!(text.ends_with("total rank 12\n"));
    assert!(text.contains("s1s2s3 s1s2s4"));
    let v = json(&["tor", "@rp2_facets.json", "--coeff", "z"]);
    let top = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["q"] == 3 && b["sigma"] == serde_json::json!([1, 2, 3, 4, 5, 6]))
        .unwrap();
    assert_eq!(top["rank"], 0);
    assert_eq!(top["torsion"], serde_json::json!([2]));
}

#[test]
fn ring_products() {
    let text = stdout(&facetor(&["ring", "@five_vertex.json"]));
    assert!(text.ends_with("nonzero products (1):\n  s1 x s2 = s1s2\n"), "{text}");
    let v = json(&["ring", "@three_edges.json", "--coeff", "f:5"]);
    assert_eq!(v["basis"].as_array().unwrap().len(), 8);
    assert_eq!(v["products"].as_array().unwrap().len(), 6);
}

#[test]
fn ring_over_integers_with_torsion_is_a_capability_error() {
    let out = facetor(&["ring", "@rp2_facets.json", "--coeff", "z"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("torsion"));
    assert_eq!(facetor(&["zk", "@five_vertex.json", "--coeff", "z"]).status.code(), Some(3));
}

#[test]
fn maz_pairs_file_matches_preset() {
    let preset = json(&["maz", "@three_edges.json", "--preset", "s2s1"]);
    let file = json(&["maz", "@three_edges.json", "--pairs", "@s2s1_pairs.json"]);
    assert_eq!(preset["poincare"], file["poincare"]);
    assert_eq!(preset["poincare"]["total"], 216);
    let d2 = json(&["maz", "@five_vertex.json", "--preset", "d2s1"]);
    assert_eq!(d2["poincare"]["text"], "1 + 2x^3 + 2x^5 + 5x^6 + 2x^7");
}

#[test]
fn star_link_compress() {
    let v = json(&["link", "@three_edges.json", "--omega", "1"]);
    assert_eq!(v["facets"], serde_json::json!([[3, 5], [3, 6], [4, 5], [4, 6]]));
    let v = json(&["star", "@five_vertex.json", "--omega", "1,2"]);
    assert_eq!(v["omega"], serde_json::json!([1, 2]));
    assert_eq!(v["facets"], serde_json::json!([[1, 2]]));
    let out = stdout(&facetor(&["compress", "@five_vertex.json", "--omega", "1"]));
    assert_eq!(out, "{\"m\":5,\"complement\":[[5],[2,4],[2,3],[3,4,5]]}\n");
}

#[test]
fn verify_file_and_random() {
    let text = stdout(&facetor(&["verify", "@five_vertex.json"]));
    assert!(text.ends_with("verify: PASS\n"));
    assert!(!text.contains("FAIL"));
    let a = stdout(&facetor(&["verify", "--random", "--trials", "5", "--seed", "9", "--json"]));
    let b = stdout(&facetor(&["verify", "--random", "--trials", "5", "--seed", "9", "--json"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn parse_errors_exit_two() {
    for (file, needle) in [
        ("bad_vertex.json", "complement[0][1]"),
        ("bad_m.json", "field `m`"),
        ("malformed.json", "malformed JSON"),
        ("missing.json", "cannot read"),
    ] {
        let out = facetor(&["zk", &format!("@{file}")]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(needle), "{file}");
    }
    let out = facetor(&["maz", "@three_edges.json", "--pairs", "@bad_pairs.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(facetor(&["zk", "@five_vertex.json", "--coeff", "f:4"]).status.code(), Some(2));
    assert_eq!(facetor(&["star", "@five_vertex.json", "--omega", "9"]).status.code(), Some(2));
    assert_eq!(facetor(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_facetor"))
        .args(["zk", &data("five_vertex.json").display().to_string()])
        .env("FACE_TOR_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 + 2x^3 + 2x^5 + 5x^6 + 2x^7 (total 12)\n");
    let out = Command::new(env!("CARGO_BIN_EXE_facetor"))
        .args(["zk", &data("five_vertex.json").display().to_string()])
        .env("FACE_TOR_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
