use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn redei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_redei")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn u_on_the_example_file() {
    let fig1 = data("fig1.dg");
    let out = redei(&["u", "--edges", &fig1, "--basis", "p", "--routes", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], true);
    let routes = v["routes"].as_array().unwrap();
    assert_eq!(routes.len(), 7);
    assert!(routes.iter().all(|r| r["value"] == "p[3] + p[2,1] + p[1,1,1]"));

    let s = json(&redei(&["u", "--edges", &fig1, "--basis", "s", "--routes", "schur-JT"]));
    assert_eq!(s["routes"][0]["value"], "3*s[3] + s[2,1] + s[1,1,1]");
}

#[test]
fn u_on_generated_digraphs() {
    let v = json(&redei(&["u", "--gen", "empty:3", "--basis", "h"]));
    assert_eq!(v["routes"][0]["value"], "6*h[3]");
    let v = json(&redei(&["u", "--gen", "star:2,1", "--basis", "h"]));
    assert!(v["routes"].as_array().unwrap().iter().all(|r| r["value"] == "2*h[2,1]"));
    let v = json(&redei(&["u", "--gen", &format!("poset:{}", data("poset.dg")), "--routes", "acyclic-records"]));
    assert_eq!(v["n"], 4);
}

#[test]
fn output_is_stable() {
    let a = redei(&["u", "--gen", "random:4,0.5", "--seed", "3"]);
    let b = redei(&["u", "--gen", "random:4,0.5", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 3);
}

#[test]
fn ham_reports() {
    let v = json(&redei(&["ham", "--edges", &data("fig1.dg"), "--all-routes"]));
    assert_eq!(v["ham_paths"], 1);
    assert_eq!(v["agree"], true);

    let v = json(&redei(&["ham", "--gen", "tournament:7", "--seed", "1"]));
    assert_eq!(v["ham_paths"].as_u64().unwrap() % 2, 1);

    let v = json(&redei(&["ham", "--gen", "complete:4", "--cycles", "--all-routes"]));
    assert_eq!(v["ham_cycles"], 6);
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let one = redei(&["verify", "--corpus", "random:4,12", "--seed", "7", "--jobs", "1"]);
    let many = redei(&["verify", "--corpus", "random:4,12", "--seed", "7", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let v = json(&one);
    assert_eq!(v["digraphs"], 12);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_exhaustive3() {
    let v = json(&redei(&["verify", "--corpus", "exhaustive3"]));
    assert_eq!(v["digraphs"], 512);
    assert_eq!(v["tallies"]["u-routes-agree"]["passed"], 512);
}

#[test]
fn exit_codes() {
    assert_eq!(redei(&["u", "--gen", "bogus:3"]).status.code(), Some(2));
    assert_eq!(redei(&["u", "--edges", "/nonexistent.dg"]).status.code(), Some(2));
    assert_eq!(redei(&["u", "--gen", "random:9,0.5"]).status.code(), Some(3));
    assert_eq!(redei(&["u", "--gen", "path:3", "--routes", "tournament"]).status.code(), Some(2));
    assert_eq!(redei(&["verify", "--corpus", "nonsense"]).status.code(), Some(2));
    assert_eq!(redei(&["u"]).status.code(), Some(2));
}

#[test]
fn gen_round_trips() {
    let out = redei(&["gen", "path:3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3\n2 1\n3 2\n");
    let out = redei(&["gen", "complete:2,loops", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}
