use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use cloneforge::format::group_to_json;
use cloneforge::{algebra_to_json, parse_algebra, Report};
use cloneforge_core::zoo::{make_free_gset, make_vector_space, GroupTable, PrimeField};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn cf_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cloneforge"));
    cmd.args(args).env_remove("CLONEFORGE_TABLE_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        status: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn cf(args: &[&str]) -> Run {
    cf_env(args, &[])
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

const BOOLEAN: &str = r#"{"carrier": 2, "ops": [
  {"name": "NOT", "arity": 1, "table": [1, 0]},
  {"name": "AND", "arity": 2, "table": [0, 0, 0, 1]}
]}"#;

#[test]
fn non_commuting_pair_exits_one_with_matrix() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", BOOLEAN);
    let out = dir.path().join("r.json");
    let r = cf(&["commute", "--algebra", s(&a), "--f", "NOT", "--g", "AND", "--out", s(&out)]);
    assert_eq!(r.status, 1, "{}", r.stderr);
    assert!(r.stdout.contains("do not commute"));
    let v = json(&out);
    assert_eq!(v["command"], "commute");
    assert_eq!(v["commutes"], false);
    let w = &v["witness"];
    assert_eq!((w["rows"].as_u64(), w["cols"].as_u64()), (Some(1), Some(2)));
    assert_ne!(w["lhs"], w["rhs"]);

    let replay = cf(&["--replay", s(&out)]);
    assert_eq!(replay.status, 0, "{}", replay.stdout);

    let same = cf(&["commute", "--algebra", s(&a), "--f", "NOT", "--g", "NOT"]);
    assert_eq!(same.status, 0);
}

#[test]
fn verify_gf2_at_arity_two() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("v.json");
    let r = cf(&["verify", "--vecspace", "2", "1", "--arity", "2", "--out", s(&out)]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "DC(2)=derived(2), size 4");
    let v = json(&out);
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["strategy"], "vecspace");
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
    assert_eq!(v["exclusions"].as_array().unwrap().len(), 16 - 4);
    assert_eq!(cf(&["--replay", s(&out)]).status, 0);
}

#[test]
fn verify_free_gset_from_group_file() {
    let dir = TempDir::new().unwrap();
    let group = write(&dir, "z2.json", &group_to_json(&GroupTable::cyclic(2).unwrap()));
    let out = dir.path().join("v.json");
    let r = cf(&["verify", "--free-gset", s(&group), "2", "--arity", "1", "--out", s(&out)]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "DC(1)=derived(1), size 2");
    let v = json(&out);
    assert_eq!(v["exclusions"].as_array().unwrap().len(), 254);
    assert_eq!(v["strategy"], "free-gset");
    assert_eq!(cf(&["--replay", s(&out)]).status, 0);
}

#[test]
fn truncated_hom_search_is_undecided() {
    let dir = TempDir::new().unwrap();
    // the free Z2-set given as a plain file, so verification falls back to hom search
    let g = make_free_gset(&GroupTable::cyclic(2).unwrap(), 1).unwrap();
    let a = write(&dir, "g.json", &algebra_to_json(&g));
    let out = dir.path().join("v.json");
    let r = cf(&["verify", "--algebra", s(&a), "--arity", "1", "--limit", "1", "--out", s(&out)]);
    assert_eq!(r.status, 1, "{} {}", r.stdout, r.stderr);
    assert!(r.stdout.starts_with("undecided"));
    assert_eq!(json(&out)["verdict"], "undecided");

    let full = cf(&["verify", "--algebra", s(&a), "--arity", "1"]);
    assert_eq!(full.status, 0, "{}", full.stderr);
    assert!(full.stderr.contains("size 2"));
}

#[test]
fn empty_signature_clone_is_projections() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "e.json", r#"{"carrier": 3, "ops": []}"#);
    let r = cf(&["clone", "--algebra", s(&a), "--arity", "1"]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["members"], serde_json::json!([[0, 1, 2]]));
    assert_eq!(v["terms"], serde_json::json!(["p0"]));

    let r = cf(&["clone", "--algebra", s(&a), "--arity", "2"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["size"], 2);
}

#[test]
fn clone_reports_replay_and_detect_tampering() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", BOOLEAN);
    let out = dir.path().join("c.json");
    let r = cf(&["clone", "--algebra", s(&a), "--arity", "1", "--out", s(&out)]);
    assert_eq!(r.status, 0);
    assert_eq!(r.stdout.trim(), "clone(1) size 4");
    assert_eq!(cf(&["--replay", s(&out)]).status, 0);

    let mut v = json(&out);
    v["certificates"][0] = serde_json::json!({"p": 0});
    v["certificates"][1] = serde_json::json!({"p": 0});
    let bad = write(&dir, "bad.json", &v.to_string());
    let replay = cf(&["--replay", s(&bad)]);
    assert_eq!(replay.status, 1);
    assert!(replay.stdout.contains("FAIL"));
}

#[test]
fn zoo_build_round_trips_bit_exactly() {
    let dir = TempDir::new().unwrap();
    let first = dir.path().join("gf3.json");
    assert_eq!(cf(&["zoo-build", "--vecspace", "3", "1", "--out", s(&first)]).status, 0);
    let second = dir.path().join("again.json");
    assert_eq!(cf(&["show", "--algebra", s(&first), "--out", s(&second)]).status, 0);
    assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());
    let expected = make_vector_space(PrimeField::new(3).unwrap(), 1).unwrap();
    assert_eq!(parse_algebra(&first).unwrap(), expected);
    assert_eq!(fs::read_to_string(&first).unwrap(), algebra_to_json(&expected));
    // no temporary files left behind
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn centralizer_methods_agree() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"{"carrier": 2, "ops": [{"name": "XOR", "arity": 2, "table": [0, 1, 1, 0]}]}"#);
    let fast = cf(&["centralizer", "--algebra", s(&a), "--arity", "2"]);
    let brute = cf(&["centralizer", "--algebra", s(&a), "--arity", "2", "--method", "brute"]);
    assert_eq!((fast.status, brute.status), (0, 0));
    let (f, b): (Value, Value) = (serde_json::from_str(&fast.stdout).unwrap(), serde_json::from_str(&brute.stdout).unwrap());
    assert_eq!(f["members"], b["members"]);
    assert_eq!(f["size"], 4);
    assert_eq!(b["exclusions"][0]["kind"], "matrix");
    assert_eq!(f["exclusions"][0]["kind"], "clone-member");
    for r in [fast, brute] {
        let p = write(&dir, "r.json", &r.stdout);
        assert_eq!(cf(&["--replay", s(&p)]).status, 0);
    }
}

#[test]
fn double_centralizer_methods_agree() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "gf2.json", &algebra_to_json(&make_vector_space(PrimeField::new(2).unwrap(), 1).unwrap()));
    let mut members = Vec::new();
    for method in ["hom-criterion", "pairwise-equalizer", "sandwich"] {
        let out = dir.path().join(format!("{method}.json"));
        let r = cf(&["dc", "--algebra", s(&a), "--arity", "2", "--method", method, "--out", s(&out)]);
        assert_eq!(r.status, 0, "{method}: {}", r.stderr);
        let v = json(&out);
        assert_eq!(v["method"], method);
        members.push(v["members"].clone());
        assert_eq!(cf(&["--replay", s(&out)]).status, 0, "{method}");
    }
    assert!(members.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn homs_are_listed_and_replayed() {
    let dir = TempDir::new().unwrap();
    let v = make_vector_space(PrimeField::new(2).unwrap(), 1).unwrap();
    let a = write(&dir, "gf2.json", &algebra_to_json(&v));
    let plane = write(&dir, "plane.json", &algebra_to_json(&make_vector_space(PrimeField::new(2).unwrap(), 2).unwrap()));
    let out = dir.path().join("h.json");
    let r = cf(&["homs", "--source", s(&plane), "--target", s(&a), "--out", s(&out)]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "4 homomorphisms");
    assert_eq!(cf(&["--replay", s(&out)]).status, 0);

    let mut doc = json(&out);
    doc["homs"][0] = serde_json::json!([1, 1, 1, 1]);
    let bad = write(&dir, "bad.json", &doc.to_string());
    assert_eq!(cf(&["--replay", s(&bad)]).status, 1);

    let capped = cf(&["homs", "--source", s(&plane), "--target", s(&a), "--limit", "2"]);
    assert!(capped.stderr.contains("truncated"));
    let report = Report::from_json("stdout", &capped.stdout).unwrap();
    assert!(matches!(report, Report::Homs(ref d) if d.truncated && d.homs.len() == 2));
}

#[test]
fn action_analysis() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "not.json", r#"{"carrier": 2, "ops": [{"name": "s", "arity": 1, "table": [1, 0]}]}"#);
    let out = dir.path().join("a.json");
    let r = cf(&["analyze-action", "--monoid-action", s(&a), "--out", s(&out)]);
    assert_eq!(r.status, 1, "{}", r.stderr);
    let v = json(&out);
    assert_eq!(v["unique_transitions"], false);
    assert_eq!(v["witness"], serde_json::json!({"a": 0, "v": [], "w": [0, 0]}));
    assert_eq!(v["orbits"], serde_json::json!([0, 0]));
    assert_eq!(v["roots"], serde_json::json!([]));
    assert_eq!(cf(&["--replay", s(&out)]).status, 0);

    let short = cf(&["analyze-action", "--monoid-action", s(&a), "--length-bound", "1"]);
    assert_eq!(short.status, 0);

    let binary = write(&dir, "b.json", BOOLEAN);
    let r = cf(&["analyze-action", "--monoid-action", s(&binary)]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("AND"), "{}", r.stderr);
}

#[test]
fn input_errors_exit_two_and_name_the_problem() {
    let dir = TempDir::new().unwrap();
    let short = write(&dir, "short.json", r#"{"carrier": 2, "ops": [{"name": "AND", "arity": 2, "table": [0, 0, 1]}]}"#);
    let r = cf(&["show", "--algebra", s(&short)]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("ops[0].table") && r.stderr.contains("\"AND\""), "{}", r.stderr);

    let big = write(&dir, "big.json", r#"{"carrier": 2, "ops": [{"name": "f", "arity": 1, "table": [0, 7]}]}"#);
    let r = cf(&["show", "--algebra", s(&big)]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("ops[0].table[1]"), "{}", r.stderr);

    let broken = write(&dir, "broken.json", "{\"carrier\": 2, \"ops\": [}");
    let r = cf(&["show", "--algebra", s(&broken)]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("byte 23"), "{}", r.stderr);

    let missing = cf(&["show", "--algebra", s(&dir.path().join("nope.json"))]);
    assert_eq!(missing.status, 2);

    assert_eq!(cf(&[]).status, 2);
    assert_eq!(cf(&["verify", "--arity", "1"]).status, 2);
    assert_eq!(cf(&["--help"]).status, 0);
    assert_eq!(cf(&["commute", "--vecspace", "2", "1", "--f", "nope", "--g", "add"]).status, 2);
    assert_eq!(cf(&["show", "--vecspace", "4", "1"]).status, 2);
}

#[test]
fn table_limit_comes_from_the_environment() {
    let limited = cf_env(&["clone", "--vecspace", "2", "1", "--arity", "4"], &[("CLONEFORGE_TABLE_LIMIT", "8")]);
    assert_eq!(limited.status, 2);
    assert!(limited.stderr.contains('8'), "{}", limited.stderr);

    let fine = cf_env(&["clone", "--vecspace", "2", "1", "--arity", "3"], &[("CLONEFORGE_TABLE_LIMIT", "8")]);
    assert_eq!(fine.status, 0, "{}", fine.stderr);

    let bad = cf_env(&["show", "--vecspace", "2", "1"], &[("CLONEFORGE_TABLE_LIMIT", "many")]);
    assert_eq!(bad.status, 2);
    assert!(bad.stderr.contains("CLONEFORGE_TABLE_LIMIT"));
}
