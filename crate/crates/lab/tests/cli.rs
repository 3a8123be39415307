use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn arglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arglab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = arglab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn decide_two_cycle() {
    let af = data("two_cycle.af");
    let v = json(&[
        "decide",
        "--af",
        path(&af),
        "--set",
        "a",
        "--problem",
        "pref-ext",
    ]);
    assert_eq!(v, serde_json::json!({"answer": true}));
    let v = json(&[
        "decide",
        "--af",
        path(&af),
        "--set",
        "a,b",
        "--problem",
        "stab-ext",
    ]);
    assert_eq!(v["answer"], false);
}

#[test]
fn decide_inf_takes_the_empty_set_fast_path() {
    let out = arglab(&[
        "decide-inf",
        "--af",
        path(&data("three_cycle.af")),
        "--set",
        "",
        "--alpha",
        path(&data("all_false.alpha")),
        "--trust",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"answer\":true,\"path\":\"empty-set-fast-path\"}\n"
    );
}

#[test]
fn untrusted_wrong_alpha_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = dir.path().join("wrong.alpha");
    std::fs::write(&alpha, "a=true\nb=false\nc=false\n").unwrap();
    let out = arglab(&[
        "decide-inf",
        "--af",
        path(&data("three_cycle.af")),
        "--alpha",
        path(&alpha),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let bad = arglab(&["check", "--af", "/nonexistent.af", "--semantics", "stable"]);
    assert_eq!(bad.status.code(), Some(2));
    let unknown = arglab(&[
        "check",
        "--af",
        path(&data("chain.af")),
        "--set",
        "zz",
        "--semantics",
        "stable",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    assert_eq!(arglab(&["survey", "--n", "5"]).status.code(), Some(3));
    assert_eq!(
        arglab(&["gen", "--family", "k3", "--t", "22"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(arglab(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn check_accept_coherent_enumerate() {
    let chain = data("chain.af");
    let c = path(&chain);
    assert_eq!(
        json(&["check", "--af", c, "--set", "a", "--semantics", "stable"])["answer"],
        true
    );
    assert_eq!(
        json(&[
            "check",
            "--af",
            c,
            "--set",
            "a,b",
            "--semantics",
            "conflict-free"
        ])["answer"],
        false
    );
    assert_eq!(
        json(&["check", "--af", c, "--set", "", "--semantics", "admissible"])["answer"],
        true
    );
    assert_eq!(
        json(&["accept", "--af", c, "--arg", "a", "--mode", "sceptical"])["answer"],
        true
    );
    assert_eq!(json(&["accept", "--af", c, "--arg", "b"])["answer"], false);
    assert_eq!(
        json(&["coherent", "--af", path(&data("three_cycle.af"))])["answer"],
        false
    );
    let e = json(&[
        "enumerate",
        "--af",
        path(&data("two_cycle.af")),
        "--method",
        "oracle",
    ]);
    assert_eq!(
        e,
        serde_json::json!({"count": 2, "extensions": [["b"], ["a"]]})
    );
}

#[test]
fn encode_reproduces_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.enc");
    json(&[
        "encode",
        "--af",
        path(&data("two_cycle.af")),
        "--scheme",
        "tab",
        "--out",
        path(&out),
    ]);
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(data("two_cycle_tab.golden")).unwrap()
    );
    json(&[
        "encode",
        "--af",
        path(&data("chain.af")),
        "--scheme",
        "adjacency",
        "--out",
        path(&out),
    ]);
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(data("chain_adjacency.golden")).unwrap()
    );
    let q = json(&["encode-query", "--enc", path(&out), "--set", "x1"]);
    assert_eq!(q["answer"], true);
    let q = json(&[
        "encode-query",
        "--enc",
        path(&data("two_cycle_tab.golden")),
        "--set",
        "a,b",
        "--af",
        path(&data("two_cycle.af")),
    ]);
    assert_eq!(q["answer"], false);
    let refused = arglab(&[
        "encode",
        "--af",
        path(&data("chain.af")),
        "--scheme",
        "adjacency",
        "--semantics",
        "preferred",
        "--out",
        path(&out),
    ]);
    assert_eq!(refused.status.code(), Some(2));
}

#[test]
fn reduce_writes_three_files() {
    let dir = tempfile::tempdir().unwrap();
    let (af, alpha, query) = (
        dir.path().join("h.af"),
        dir.path().join("h.alpha"),
        dir.path().join("h.q"),
    );
    let v = json(&[
        "reduce",
        "--cnf",
        path(&data("single_clause.cnf")),
        "--out-af",
        path(&af),
        "--out-alpha",
        path(&alpha),
        "--out-query",
        path(&query),
    ]);
    assert_eq!(v["arguments"], 14);
    assert_eq!(v["attacks"], 29);
    assert_eq!(std::fs::read_to_string(&query).unwrap(), "p4,n5\n");
    let alpha_text = std::fs::read_to_string(&alpha).unwrap();
    assert_eq!(
        alpha_text.lines().filter(|l| l.ends_with("=false")).count(),
        3
    );
    let set = std::fs::read_to_string(&query).unwrap();
    let d = json(&[
        "decide",
        "--af",
        path(&af),
        "--set",
        set.trim(),
        "--problem",
        "pref-ext",
    ]);
    assert_eq!(d["answer"], false);
}

#[test]
fn verify_reduction_reports_per_instance() {
    let v = json(&[
        "verify-reduction",
        "--cnf",
        path(&data("unsat.cnf")),
        "--variant",
        "repaired",
    ]);
    assert_eq!((v["pass"].as_u64(), v["fail"].as_u64()), (Some(1), Some(0)));
    let v = json(&["verify-reduction", "--cnf", path(&data("unsat.cnf"))]);
    assert_eq!(v["records"][0]["pref"], false);
    let one = arglab(&["verify-reduction", "--corpus", "30,4,6,7"]);
    let four = arglab(&["--threads", "4", "verify-reduction", "--corpus", "30,4,6,7"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn minlen_from_table_and_system() {
    assert_eq!(json(&["minlen", "--table", "6"])["length"], 4);
    assert_eq!(
        json(&["minlen", "--table", "0x2", "--vars", "1"])["length"],
        1
    );
    let c = json(&["minlen", "--table", "0", "--vars", "1"]);
    assert_eq!(
        (c["length"].clone(), c["constant"].clone()),
        (Value::Null, Value::Bool(true))
    );
    assert_eq!(
        json(&["minlen", "--af", path(&data("two_cycle.af"))])["length"],
        4
    );
    assert_eq!(
        json(&["minlen", "--table", "6", "--cap", "3"])["length"],
        Value::Null
    );
}

#[test]
fn realisable_methods() {
    let fam = data("pair_in_three.fam");
    let lit = json(&["realisable", "--sets", path(&fam), "--method", "literal"]);
    assert_eq!(lit["answer"], false);
    assert_eq!(
        lit["witness"]["superset"],
        serde_json::json!(["x1", "x2", "x3"])
    );
    assert_eq!(
        json(&[
            "realisable",
            "--sets",
            path(&fam),
            "--method",
            "existential"
        ])["answer"],
        true
    );
    assert_eq!(json(&["realisable", "--sets", path(&fam)])["answer"], true);
    let chain = json(&["realisable", "--sets", path(&data("chain.fam"))]);
    assert_eq!(chain["answer"], false);
    assert_eq!(
        chain["prefilter"]["reasons"],
        serde_json::json!(["not-antichain"])
    );
    assert_eq!(
        json(&["realisable", "--sets", path(&data("two_singletons.fam"))])["answer"],
        true
    );
}

#[test]
fn survey_is_deterministic() {
    let v = json(&["survey", "--n", "2"]);
    assert_eq!(
        v["realized"],
        serde_json::json!([[["x2"]], [["x2"], ["x1"]], [["x1"]], [["x1", "x2"]]])
    );
    let a = arglab(&["survey", "--n", "3"]);
    let b = arglab(&["--threads", "3", "survey", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_and_bench() {
    let a = arglab(&[
        "gen", "--family", "random", "--n", "4", "--p", "0.5", "--seed", "42",
    ]);
    let b = arglab(&[
        "gen", "--family", "random", "--n", "4", "--p", "0.5", "--seed", "42",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let k3 = String::from_utf8(arglab(&["gen", "--family", "k3", "--t", "1"]).stdout).unwrap();
    assert_eq!(k3.lines().filter(|l| l.starts_with("att(")).count(), 6);
    assert_eq!(
        arglab(&["gen", "--family", "random", "--n", "3", "--p", "1.5"])
            .status
            .code(),
        Some(2)
    );
    let rows = json(&["bench", "--family", "k3", "--t", "3"]);
    let tab3 = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "k3(t=3)" && r["scheme"] == "tab" && r["semantics"] == "preferred")
        .unwrap();
    assert_eq!(tab3["bits"], 243);
}

#[test]
fn alpha_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.alpha");
    let status = arglab(&[
        "alpha",
        "--af",
        path(&data("three_cycle.af")),
        "--out",
        path(&out),
    ])
    .status;
    assert!(status.success());
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(data("all_false.alpha")).unwrap()
    );
    let stdout = arglab(&["alpha", "--af", path(&data("chain.af"))]).stdout;
    assert_eq!(String::from_utf8(stdout).unwrap(), "a=true\nb=false\n");
}
