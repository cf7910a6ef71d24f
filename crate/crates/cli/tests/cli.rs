use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wreath-centers"))
        .args(args)
        .env_remove("WREATH_CENTERS_CONFIG")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn group_info_lists_classes_and_degrees() {
    let v = json(&["--group", "cyclic:3", "group-info"]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|c| c["centralizer"] == 3));
    let v = json(&["--group", "sym:3", "group-info"]);
    let sizes: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [1, 2, 3]);
    let degs: Vec<u64> = v["characters"].as_array().unwrap().iter().map(|c| c["degree"].as_u64().unwrap()).collect();
    assert_eq!(degs, [1, 1, 2]);
}

#[test]
fn classes_checksums() {
    let v = json(&["--group", "trivial", "classes", "--n", "4"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    let v = json(&["--group", "cyclic:2", "classes", "--n", "2"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["checksum"], "8");
    let v = json(&["--group", "cyclic:3", "classes", "--n", "3"]);
    assert_eq!(v["checksum"], "162");
    let (code, out, _) = run(&["--group", "cyclic:2", "--format", "csv", "classes", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "lambda,z,size\n{0: (1)},2,1\n{1: (1)},2,1\n");
}

#[test]
fn polynomial_output() {
    let v = json(&["--group", "cyclic:3", "poly", "--lam", r#"{"1":[1]}"#, "--del", r#"{"2":[1]}"#, "--gam", "{}"]);
    assert_eq!(v["display"], "n");
    assert_eq!(v["binomial"]["1"], 1);
    assert_eq!(v["degree"], 1);
    assert_eq!(v["latex"], "\\binom{n}{1}");
    let (code, out, _) =
        run(&["--group", "cyclic:3", "--format", "latex", "poly", "--lam", r#"{"1":[1]}"#, "--del", r#"{"2":[1]}"#]);
    assert_eq!(code, 0);
    assert!(out.starts_with("\\begin{tabular}"));
}

#[test]
fn coefficients() {
    let v = json(&["--group", "cyclic:3", "ccoeff", "--n", "3", "--lam", r#"{"1":[1]}"#, "--del", r#"{"2":[1]}"#, "--gam", "{}"]);
    assert_eq!(v["coeff"], 3);
    let v = json(&["--group", "cyclic:3", "kcoeff", "--lam", r#"{"1":[1]}"#, "--del", r#"{"1":[1]}"#]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    // |C_{(1)¹;2}|² = 4.
    assert_eq!(v["mass"], "4");
    let v = json(&["--group", "cyclic:2", "ccoeff", "--n", "2", "--lam", r#"{"1":[1]}"#, "--del", r#"{"1":[1]}"#]);
    assert_eq!(v["mass"], "4");
}

#[test]
fn verifications_exit_zero() {
    let v = json(&["--group", "cyclic:2", "verify-poly"]);
    assert_eq!(v["pass"], true);
    let v = json(&["--group", "cyclic:2", "verify-iso", "--max-size", "1"]);
    assert_eq!(v["pass"], true);
    let r = &v["records"][0];
    for k in ["check", "input", "lhs", "rhs", "pass", "abs_err"] {
        assert!(r.get(k).is_some(), "missing {k}");
    }
}

#[test]
fn enumerate_partial_class() {
    let v = json(&["--group", "cyclic:2", "enumerate-partial", "--n", "2", "--lam", r#"{"1":[1]}"#]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["elements"][0]["support"], serde_json::json!([1]));
}

#[test]
fn errors_have_distinct_exit_codes() {
    let z3 = ["--group", "cyclic:3"];
    let with = |rest: &[&str]| {
        let mut a = z3.to_vec();
        a.extend_from_slice(rest);
        run(&a).0
    };
    assert_eq!(with(&["poly", "--lam", r#"{"0":[1]}"#, "--del", r#"{"1":[1]}"#]), 5);
    assert_eq!(with(&["poly", "--lam", r#"{"1":[1]}"#, "--del", r#"{"1":[1]}"#, "--gam", r#"{"3":[1]}"#]), 4);
    assert_eq!(with(&["ccoeff", "--n", "1", "--lam", r#"{"1":[1,1]}"#, "--del", "{}"]), 6);
    assert_eq!(with(&["--cap-class-size", "2", "enumerate-partial", "--n", "3", "--lam", r#"{"1":[1]}"#]), 7);
    assert_eq!(with(&["kcoeff", "--lam", "[1]", "--del", "{}"]), 2);
    assert_eq!(with(&["--tolerance", "0.5", "group-info"]), 8);
    assert_eq!(run(&["--group", "bogus:1", "group-info"]).0, 3);
}

#[test]
fn group_files_and_config() {
    let dir = std::env::temp_dir().join(format!("wreath-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("z2.json");
    std::fs::write(&good, r#"{"order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    let v = json(&["--group", good.to_str().unwrap(), "group-info"]);
    assert_eq!(v["order"], 2);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"order\": 2,\n \"table\": [[0, 1], [1, 1]]}").unwrap();
    let (code, _, err) = run(&["--group", bad.to_str().unwrap(), "group-info"]);
    assert_eq!(code, 3);
    assert!(err.contains("row 1"), "{err}");
    let cfg = dir.join("run.json");
    std::fs::write(&cfg, r#"{"group": "cyclic:2", "format": "csv"}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_wreath-centers"))
        .args(["classes", "--n", "1"])
        .env("WREATH_CENTERS_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "lambda,z,size\n{0: (1)},2,1\n{1: (1)},2,1\n");
    // Flags override the file.
    let out = Command::new(env!("CARGO_BIN_EXE_wreath-centers"))
        .args(["--format", "json", "--group", "trivial", "classes", "--n", "1"])
        .env("WREATH_CENTERS_CONFIG", &cfg)
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["checksum"], "1");
    std::fs::remove_dir_all(&dir).ok();
}
