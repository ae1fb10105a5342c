use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bridgeworks"));
    c.env_remove("BRIDGEWORKS_BACKEND");
    c
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> String {
    root().join("data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.code() != Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

mod schema;

fn assert_valid(name: &str, v: &Value) {
    let path = root().join("schemas").join(format!("{name}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let errors = schema::validate(&s, v);
    assert!(errors.is_empty(), "{name}: {errors:?}\n{v:#}");
}

fn check(solution_schema: &str, args: &[&str]) -> Value {
    let report = json(args);
    assert_valid("run_report", &report);
    assert_valid(solution_schema, &report["solution"]);
    report
}

#[test]
fn every_json_output_matches_its_schema() {
    let (t1, t2) = (data("t1.tree"), data("t2.tree"));
    let (sat, unsat) = (data("sat.cnf"), data("unsat.cnf"));
    let k4 = data("k4.graph");
    check("bridge", &["bridge", "exact", "--t1", &t1, "--t2", &t2]);
    check("bridge", &["bridge", "approx", "--t1", &t1, "--t2", &t2]);
    check("decide", &["bridge", "decide", "--t1", &t1, "--t2", &t2, "--c1", "5", "--c2", "19"]);
    check("decide", &["bridge", "decide", "--t1", &t1, "--t2", &t2, "--c1", "5", "--c2", "17"]);
    check("twin", &["twin", "solve", "--t1", &t1, "--t2", &t2]);
    check("twin", &["twin", "brute", "--t1", &t1, "--t2", &t2]);
    check("forest", &["forest", "connect", &t1, &t2, &t1]);
    check("gen", &["gen", "fig2", "--n", "10", "--eps", "1/10"]);
    check("gen", &["gen", "fig3", "--eps", "1/100"]);
    check("gen_tree", &["gen", "tree", "--n", "6"]);
    check("onebridge", &["reduce", "sat-to-onebridge", "--sat", &sat]);
    check("sum", &["reduce", "sat-to-3sum", "--sat", &sat]);
    check("sum", &["reduce", "sat-to-3sum", "--sat", &unsat, "--k", "5"]);
    check("rdbp", &["reduce", "vc-to-rdbp", "--graph", &k4, "--k", "3"]);
    check("verify_onebridge", &["verify", "iff-onebridge", "--sat", &sat]);
    check("verify_3sum", &["verify", "iff-3sum", "--sat", &unsat]);
    check("verify_rdbp", &["verify", "iff-rdbp", "--graph", &k4]);
    check("bench", &["bench", "--suite", "exact", "--sizes", "8,16", "--seeds", "1"]);
}

#[test]
fn bridge_report_fields() {
    let r = json(&["bridge", "exact", "--t1", &data("t1.tree"), "--t2", &data("t2.tree")]);
    let s = &r["solution"];
    assert_eq!(s["bridge"], serde_json::json!(["c", "f"]));
    assert_eq!(s["value"], "19");
    assert_eq!(s["backend"], "rational");
}

#[test]
fn exit_codes() {
    let (t1, t2) = (data("t1.tree"), data("t2.tree"));
    assert_eq!(code(&["bridge", "decide", "--t1", &t1, "--t2", &t2, "--c1", "5", "--c2", "19"]), 0);
    assert_eq!(code(&["bridge", "decide", "--t1", &t1, "--t2", &t2, "--c1", "5", "--c2", "17"]), 1);
    assert_eq!(code(&["reduce", "sat-to-3sum", "--sat", &data("unsat.cnf")]), 1);
    assert_eq!(code(&["verify", "iff-onebridge", "--sat", &data("unsat.cnf")]), 0);
    assert_eq!(code(&["bridge", "exact", "--t1", "/nonexistent", "--t2", &t2]), 2);
    assert_eq!(code(&["bridge", "exact", "--t1", &data("sat.cnf"), "--t2", &t2]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
}

#[test]
fn parse_errors_name_the_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tree");
    std::fs::write(&bad, "2 1\n0 0 0\n1 1 zz\n0 1\n").unwrap();
    let out = run(&["bridge", "exact", "--t1", bad.to_str().unwrap(), "--t2", &data("t2.tree")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 5"), "{err}");
}

#[test]
fn reports_are_reproducible_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    for args in [
        vec!["--seed", "9", "gen", "tree", "--n", "12"],
        vec!["twin", "solve", "--t1", "T1", "--t2", "T2"],
        vec!["verify", "iff-rdbp", "--graph", "K4"],
    ] {
        let (t1, t2, k4) = (data("t1.tree"), data("t2.tree"), data("k4.graph"));
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "T1" => t1.as_str(),
                "T2" => t2.as_str(),
                "K4" => k4.as_str(),
                other => other,
            })
            .collect();
        assert_eq!(strip(json(&args)), strip(json(&args)));
    }
    let tree = |seed: &str| run(&["--seed", seed, "gen", "tree", "--n", "20"]).stdout;
    assert_eq!(tree("4"), tree("4"));
    assert_ne!(tree("4"), tree("5"));
}

#[test]
fn generated_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&["gen", "fig2", "--n", "1000", "--eps", "0.01", "--out-dir", d]), 0);
    let t1 = format!("{d}/t1.tree");
    let t2 = format!("{d}/t2.tree");
    let exact = json(&["bridge", "exact", "--t1", &t1, "--t2", &t2]);
    assert_eq!(exact["solution"]["value"], "2001");
    let greedy = json(&["bridge", "approx", "--t1", &t1, "--t2", &t2]);
    assert_eq!(greedy["solution"]["value"], "400099/100");

    let ob = format!("{d}/ob");
    assert_eq!(code(&["reduce", "sat-to-onebridge", "--sat", &data("sat.cnf"), "--out-dir", &ob]), 0);
    let params: Value = serde_json::from_str(&std::fs::read_to_string(format!("{ob}/params.json")).unwrap()).unwrap();
    let c2 = params["c2"].as_str().unwrap().to_string();
    let (a, b) = (format!("{ob}/t1.tree"), format!("{ob}/t2.tree"));
    assert_eq!(code(&["bridge", "decide", "--t1", &a, "--t2", &b, "--c1", "0", "--c2", &c2]), 0);

    let rd = format!("{d}/rdbp");
    assert_eq!(code(&["reduce", "vc-to-rdbp", "--graph", &data("prism.graph"), "--k", "4", "--out-dir", &rd]), 0);
    let pairs = std::fs::read_to_string(format!("{rd}/pairs.txt")).unwrap();
    assert_eq!(pairs.lines().count(), 9);
    let shortcuts = std::fs::read_to_string(format!("{rd}/shortcuts.txt")).unwrap();
    assert_eq!(shortcuts.lines().count(), 6);
    let graph = std::fs::read_to_string(format!("{rd}/graph.txt")).unwrap();
    assert!(graph.starts_with("36 39\n"));
}

#[test]
fn dot_export_and_backend_switch() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("fig3.dot");
    assert_eq!(code(&["gen", "fig3", "--eps", "1/100", "--emit-dot", dot.to_str().unwrap()]), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph bridges {") && text.matches("style=dashed").count() == 2);

    let (t1, t2) = (data("t1.tree"), data("t2.tree"));
    let out = bin()
        .env("BRIDGEWORKS_BACKEND", "double")
        .args(["--json", "bridge", "exact", "--t1", &t1, "--t2", &t2])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["backend"], "double");
    assert_eq!(v["solution"]["value"], 19.0);
    let out =
        bin().env("BRIDGEWORKS_BACKEND", "quad").args(["bridge", "exact", "--t1", &t1, "--t2", &t2]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn threads_flag_is_deterministic() {
    let (t1, t2) = (data("t1.tree"), data("t2.tree"));
    let one = json(&["twin", "brute", "--t1", &t1, "--t2", &t2]);
    let many = json(&["--threads", "4", "twin", "brute", "--t1", &t1, "--t2", &t2]);
    assert_eq!(one["solution"], many["solution"]);
}

#[test]
fn json_tree_mirror_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let tree =
        bridgeworks::io::parse_tree(&std::fs::read_to_string(data("t1.tree")).unwrap(), bridgeworks::Backend::Rational)
            .unwrap();
    let mirror = bridgeworks::io::tree_to_json(&tree);
    assert_valid("graph", &serde_json::from_str(&mirror).unwrap());
    std::fs::write(&path, mirror).unwrap();
    let r = json(&["bridge", "exact", "--t1", path.to_str().unwrap(), "--t2", &data("t2.tree")]);
    assert_eq!(r["solution"]["value"], "19");
}
