use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn symset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symset")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, body: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn qsym_of_the_symmetric_pair() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "a.txt", "1324\n4132\n");
    let o = symset(&["qsym", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // M-expansion of m_22 + m_211 + 2 m_1111
    for line in [
        "M[(1,1,1,1)] : 2",
        "M[(1,1,2)] : 1",
        "M[(1,2,1)] : 1",
        "M[(2,1,1)] : 1",
        "M[(2,2)] : 1",
    ] {
        assert!(text.contains(line), "{line}\n{text}");
    }
    assert_eq!(text.lines().filter(|l| l.starts_with('M')).count(), 5);
    let js = json(&symset(&["qsym", &f, "--format", "json"]));
    assert_eq!(js["M"]["basis"], "M");
    assert_eq!(js["F"]["degree"], 4);
}

#[test]
fn qsym_of_identity() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "id.txt", "1234\n");
    let o = symset(&["qsym", &f]);
    assert!(stdout(&o).contains("F[(4)] : 1"));
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "bad.txt", "1234\n12x34\n");
    let o = symset(&["qsym", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let f = file(&dir, "mixed.txt", "123\n1234\n");
    assert_eq!(symset(&["classify", &f]).status.code(), Some(2));
    assert_eq!(symset(&["qsym", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn classify_conjugacy_class_product_and_empty() {
    let dir = TempDir::new().unwrap();
    let conj = symset(&["conj", "4", "2,1,1"]);
    assert!(conj.status.success());
    let f = file(&dir, "conj.txt", &stdout(&conj));
    assert_eq!(stdout(&symset(&["classify", &f])).lines().next(), Some("fine"));

    // the product of {1324,4132} and {2143,2314}
    let a: symset::PermMultiset = symset::PermMultiset::parse_list(4, &["1324", "4132"]).unwrap();
    let b = symset::PermMultiset::parse_list(4, &["2143", "2314"]).unwrap();
    let ab = file(&dir, "ab.txt", &symset::io::format_multiset(&a.product(&b).unwrap()));
    let js = json(&symset(&["classify", &ab, "--format", "json"]));
    assert_eq!(js["classification"], "not_symmetric");
    assert_eq!(js["witness"]["alpha"], serde_json::json!([1, 3]));
    assert_eq!(js["witness"]["beta"], serde_json::json!([3, 1]));

    let empty = file(&dir, "empty.txt", "# nothing\n");
    assert_eq!(stdout(&symset(&["classify", &empty])).trim(), "fine");
}

#[test]
fn verify_single_multisets() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "a.txt", "1324\n4132\n");
    let js = json(&symset(&["verify", &f, "--format", "json"]));
    for key in ["a_d_symmetric", "b_d_commutative", "c_right_invariant", "d_left_invariant", "e_symmetric"] {
        assert_eq!(js[key]["holds"], true, "{key}");
    }
    let g = file(&dir, "b.txt", "2134\n");
    let o = symset(&["verify", &g]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches(": false").count(), 5, "{text}");
    assert!(text.contains("agree: true"));
}

#[test]
fn verify_campaigns() {
    let o = symset(&["verify", "--mode", "exhaustive", "--degree", "3", "--format", "json"]);
    let js = json(&o);
    assert_eq!(js["population"]["instances"], 64);
    assert_eq!(js["disagreements"], serde_json::json!([]));
    assert!(js["specimens"]["symmetric_not_fine"].is_array());

    assert_eq!(symset(&["verify", "--mode", "exhaustive", "--degree", "5"]).status.code(), Some(3));
    assert_eq!(symset(&["verify", "--mode", "random", "--degree", "4", "--samples", "5"]).status.code(), Some(2));

    let run = |dir: &TempDir, name: &str| {
        let out = dir.path().join(name);
        let o = symset(&[
            "verify", "--mode", "random", "--degree", "4", "--samples", "50", "--seed", "9", "--max-mult", "2",
            "--format", "json", "--out", out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        let mut v: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
        assert_eq!(v["seed"], 9);
        v["wall_time_secs"] = Value::Null;
        v
    };
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&dir, "r1.json"), run(&dir, "r2.json"));

    let cfg = file(&dir, "cfg.json", r#"{"degree": 3, "mode": "structured"}"#);
    let js = json(&symset(&["verify", "--campaign", &cfg, "--format", "json"]));
    assert_eq!(js["config"]["mode"], "structured");
    assert_eq!(js["violations"]["disagreements"], 0);
}

#[test]
fn promotion_example() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "t.txt", "1 3 6 7\n2 5 9 11\n4 10 13 15\n8 14\n12\n");
    let o = symset(&["promote", &t, "3", "12"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("1 4 5 6\n2 8 10 12\n3 9 13 15\n7 14\n11\n"), "{text}");
    let js = json(&symset(&["promote", &t, "--set", "3,9,10", "--format", "json"]));
    assert_eq!(
        js["result"],
        serde_json::json!([[1, 4, 5, 6], [2, 8, 12, 14], [3, 10, 13, 15], [7, 11], [9]])
    );
    let back = file(&dir, "r.txt", "1 4 5 6\n2 8 10 12\n3 9 13 15\n7 14\n11\n");
    let o = symset(&["promote", &back, "3", "12", "--inverse"]);
    assert_eq!(stdout(&o), "1 3 6 7\n2 5 9 11\n4 10 13 15\n8 14\n12\n");
    assert_eq!(symset(&["promote", &t, "3", "16"]).status.code(), Some(2));
}

#[test]
fn rs_knuth_and_classes() {
    let o = symset(&["rs", "1234"]);
    assert_eq!(stdout(&o), "P:\n1 2 3 4\nQ:\n1 2 3 4\n");
    let js = json(&symset(&["rs", "4132", "--format", "json"]));
    assert_eq!(js["p"], serde_json::json!([[1, 2], [3], [4]]));

    let dir = TempDir::new().unwrap();
    let t = file(&dir, "t.txt", "1 2\n3\n");
    let js = json(&symset(&["knuth", &t, "--format", "json"]));
    assert_eq!(js["permutations"], serde_json::json!(["132", "312"]));

    let js = json(&symset(&["jclass", "4", "2", "--format", "json"]));
    assert_eq!(js["permutations"], serde_json::json!(["1234", "1324", "1342", "3124", "3142", "3412"]));
    let js = json(&symset(&["dclass", "3", "-", "--format", "json"]));
    assert_eq!(js["permutations"], serde_json::json!(["123"]));
    assert_eq!(symset(&["jclass", "4", "4"]).status.code(), Some(2));
    assert_eq!(symset(&["conj", "4", "2,1"]).status.code(), Some(2));
    let js = json(&symset(&["conj", "3", "21", "--format", "json"]));
    assert_eq!(js["count"], 3);
}

#[test]
fn shuffles() {
    let o = symset(&["shuffle", "12", "21"]);
    let text = stdout(&o);
    let mut got: Vec<&str> = text.lines().collect();
    got.sort();
    assert_eq!(got, ["1243", "1423", "1432", "4123", "4132", "4312"]);
    let js = json(&symset(&["shuffle", "123", "45", "--plain", "--format", "json"]));
    assert_eq!(js["count"], 10);
    assert_eq!(symset(&["shuffle", "12", "21", "--plain"]).status.code(), Some(2));
}
