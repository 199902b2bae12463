use std::path::Path;
use std::process::Command;

use serde_json::Value;
use toric_hyper_cli::run;

fn fixture(name: &str) -> Vec<u8> {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
    std::fs::read(p).unwrap()
}

fn ok(args: &[&str], input: &[u8]) -> Value {
    let mut full = vec!["toric-hyper"];
    full.extend_from_slice(args);
    let (code, out, err) = run(full, input);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).unwrap()
}

fn code(args: &[&str], input: &[u8]) -> (i32, String) {
    let mut full = vec!["toric-hyper"];
    full.extend_from_slice(args);
    let (code, _, err) = run(full, input);
    (code, String::from_utf8(err).unwrap())
}

#[test]
fn graver_on_c4() {
    let v = ok(&["graver"], &fixture("c4"));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["coeffs"], serde_json::json!([1, -1, -1, 1]));
    assert_eq!(list[0]["degree"], 2);
}

#[test]
fn graver_methods_agree() {
    let a = ok(&["graver"], &fixture("k4"));
    let b = ok(&["graver", "--method", "oracle", "--degree-bound", "4"], &fixture("k4"));
    assert_eq!(a, b);
    assert_eq!(code(&["graver", "--method", "oracle"], &fixture("k4")).0, 1);
    let sq = ok(&["graver", "--squarefree-only"], &fixture("triangles_joined"));
    assert_eq!(sq.as_array().unwrap().len(), 0);
}

#[test]
fn ideal_membership() {
    assert_eq!(ok(&["ideal-member", "--binomial", "t13t24 - t12t34"], &fixture("k5")), Value::Bool(true));
    assert_eq!(ok(&["ideal-member", "--binomial", "t12 - t34"], &fixture("k5")), Value::Bool(false));
    assert_eq!(code(&["ideal-member", "--binomial", "t1 - t2"], &fixture("k5")).0, 2);
}

#[test]
fn discrepancy_output() {
    let v = ok(&["disc"], &fixture("single_edge3"));
    assert_eq!(v["value"], 1);
    let v = ok(&["disc", "--dual-check"], &fixture("two_c4"));
    assert_eq!(v["dual_check"]["monomial"], true);
    assert_eq!(v["dual_check"]["agree"], true);
    assert_eq!(v["dual_check"]["primitive"], false);
}

#[test]
fn parse_errors() {
    let v = ok(&["dual"], br#"{"n":2,"edges":[[0,1]]}"#);
    assert_eq!(v["n"], 1);
    let (c, err) = code(&["graver"], br#"{"n":3,"edges":[[0,1],[0,9]]}"#);
    assert_eq!(c, 2);
    assert!(err.contains("edges[1]"), "{err}");
    assert_eq!(code(&["graver"], b"not json").0, 2);
    assert_eq!(code(&["graver", "--no-such-flag"], &fixture("c4")).0, 2);
    assert_eq!(code(&["frobnicate"], &fixture("c4")).0, 2);
}

#[test]
fn multiplicity_input() {
    let v = ok(&["bouquet"], &fixture("tight_pair_doubled"));
    assert_eq!(v["classification"], "matching-pair");
    assert_eq!(v["primitive"], false);
    let v = ok(&["bouquet"], &fixture("tight_pair"));
    assert_eq!(v["primitive"], true);
}

#[test]
fn bouquet_classes() {
    let v = ok(&["bouquet"], &fixture("two_triple_sunflower"));
    assert_eq!(v["classification"], "sunflower");
    assert_eq!(v["certificate"]["multiplicities"], serde_json::json!([1, 1]));
    assert_eq!(v["certificate"]["primitive"], true);
    assert_eq!(ok(&["bouquet"], &fixture("k5"))["classification"], "none");
    assert!(ok(&["bouquet"], &fixture("sunflower_alone"))["classification"] == "none");

    let mut edges: Vec<Vec<usize>> = (2..8).map(|v| vec![0, 1, v]).collect();
    edges.extend([vec![2, 3, 4], vec![5, 6, 7]]);
    let copy: Vec<Vec<usize>> = edges.iter().map(|e| e.iter().map(|v| v + 8).collect()).collect();
    edges.extend(copy);
    let doc = serde_json::json!({ "n": 16, "edges": edges }).to_string();
    let v = ok(&["bouquet"], doc.as_bytes());
    assert_eq!(v["classification"], "partitioned-core");
    assert_eq!(v["sunflowers"].as_array().unwrap().len(), 2);
}

#[test]
fn walks_and_balance() {
    let c4 = fixture("c4");
    let v = ok(&["balance", "--bicoloring", r#"{"blue":[1,0,0,1],"red":[0,1,1,0]}"#], &c4);
    assert_eq!(v["balanced"], true);
    let v = ok(&["balance", "--vector", "[1,1,0,0]"], &c4);
    assert_eq!(v["balanced"], false);
    assert_eq!(v["vertex"], 0);
    let v = ok(&["decompose", "--vector", "[2,-2,-2,2]"], &c4);
    assert_eq!(v["walks"].as_array().unwrap().len(), 2);
    let v = ok(&["primitive", "--vector", "[1,-1,-1,1]"], &c4);
    assert_eq!(v["primitive"], true);
    assert_eq!(v["graph_shape"], "EvenCycle");
    assert_eq!(code(&["primitive", "--vector", "[1,1,0,0]"], &c4).0, 1);
    assert_eq!(code(&["primitive", "--vector", "[1,1]"], &c4).0, 2);
}

#[test]
fn vector_from_document() {
    let doc = r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]],"vector":[1,-1,-1,1]}"#;
    assert_eq!(ok(&["primitive"], doc.as_bytes())["primitive"], true);
}

#[test]
fn fiber_commands() {
    let k5 = fixture("k5");
    let v = ok(&["fiber", "--margin", "[1,1,1,1,0]", "--enumerate", "--check-connected"], &k5);
    assert_eq!(v["count"], 3);
    assert_eq!(v["connected"], true);
    let args = ["toric-hyper", "fiber", "--margin", "[1,1,1,1,0]", "--walk", "25", "--seed", "11"];
    let (c, out, _) = run(args, &k5);
    assert_eq!(c, 0);
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().count(), 26);
    assert_eq!(run(args, &k5).1, text.into_bytes());
    let (c, _, _) = run(["toric-hyper", "fiber", "--walk", "3", "--enumerate", "--margin", "[0,0,0,0,0]"], &k5);
    assert_eq!(c, 2);
}

#[test]
fn deterministic_and_pretty() {
    let k5 = fixture("k5");
    let a = run(["toric-hyper", "graver"], &k5);
    let b = run(["toric-hyper", "graver"], &k5);
    assert_eq!(a, b);
    let p = run(["toric-hyper", "graver", "--pretty"], &k5);
    let x: Value = serde_json::from_slice(&a.1).unwrap();
    let y: Value = serde_json::from_slice(&p.1).unwrap();
    assert_eq!(x, y);
    assert!(p.1.len() > a.1.len());
}

#[test]
fn resource_limit() {
    let (c, out, err) = run(["toric-hyper", "graver", "--max-work", "3"], &fixture("k5"));
    assert_eq!(c, 3);
    assert!(out.is_empty());
    let v: Value = serde_json::from_slice(&err).unwrap();
    assert_eq!(v["error"], "resource-limit");
    assert!(v["partial"].is_array());
}

#[test]
fn text_input_and_round_trip() {
    let v = ok(&["dual", "--text"], b"0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(v["n"], 4);
    let dual_of_dual = ok(&["dual"], v.to_string().as_bytes());
    assert_eq!(dual_of_dual["edges"].as_array().unwrap().len(), 4);
    let canon = r#"{"n":3,"edges":[[0,1],[1,2]],"multiplicity":[1,2]}"#;
    let p = toric_hyper::io::parse_hypergraph(canon.as_bytes()).unwrap();
    assert_eq!(toric_hyper::io::to_json(&p.to_doc()), canon);
}

#[test]
fn binary_reads_files_and_env() {
    let exe = env!("CARGO_BIN_EXE_toric-hyper");
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("k5.json");
    let out = Command::new(exe).args(["graver", "--input"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let out = Command::new(exe).args(["graver", "-i"]).arg(&path).env("TORIC_HYPER_MAX_WORK", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(exe).arg("--help").output().unwrap();
    assert!(out.status.success());
}
