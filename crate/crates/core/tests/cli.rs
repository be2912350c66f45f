use std::process::{Command, Output};

fn qgalois(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgalois"))
        .args(args)
        .env_remove("QGALOIS_MAX_GROUP_ORDER")
        .env_remove("QGALOIS_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn help_and_version() {
    let o = qgalois(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    for cmd in ["verify", "compute", "invariants", "supp", "hnf", "catalog"] {
        assert!(stdout(&o).contains(cmd), "{cmd}");
    }
    assert_eq!(qgalois(&["--version"]).status.code(), Some(0));
    assert_eq!(qgalois(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(qgalois(&[]).status.code(), Some(2));
}

#[test]
fn compute_normal_forms() {
    let o = qgalois(&["compute", "--algebra", "weyl:1", "y*x^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^2*x^2*y + (q + 1)*x");
    let o = qgalois(&["compute", "--algebra", "affine:1", "y*x"]);
    assert_eq!(stdout(&o).trim(), "q*x*y");
    let o = qgalois(&["compute", "--algebra", "gwa:usl2", "X*Y - Y*X"]);
    assert_eq!(stdout(&o).trim(), "2*H");
    let o = qgalois(&["compute", "--algebra", "torus:1", "x^-1*x"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn compute_json_is_structured() {
    let o = qgalois(&["compute", "--algebra", "weyl:1", "y*x", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["engine"], "quantum");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let o = qgalois(&["compute", "--algebra", "weyl:1", "(("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error"));
    let o = qgalois(&["compute", "--algebra", "nope:1", "x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qgalois(&["compute", "--algebra", "weyl:1", "1/(q - q)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qgalois(&["verify", "no-such-claim"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-claim"));
}

#[test]
fn verify_single_and_all() {
    let o = qgalois(&["verify", "order-G212"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order-G212"));
    let o = qgalois(&["verify", "weyl-embedding-literal-y"]);
    assert_eq!(o.status.code(), Some(0), "an expected failure is as expected");
    let o = qgalois(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("61 of 61 claims as expected"));
}

#[test]
fn verify_all_json_is_deterministic() {
    let a = qgalois(&["verify", "all", "--json"]);
    let b = qgalois(&["verify", "all", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["all_ok"], true);
}

#[test]
fn custom_manifest_mismatch_exits_1() {
    let dir = std::env::temp_dir().join(format!("qgalois-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("claims.json");
    std::fs::write(
        &path,
        r#"{"claims": [{"id": "commutes", "statement": "yx = xy", "expect": "pass",
            "kind": "identity", "algebra": "affine:1", "lhs": "y*x", "rhs": "x*y"}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = qgalois(&["verify", "all", "--manifest", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("0 of 1"));
    let o = qgalois(&["verify", "all", "--manifest", "/nonexistent/claims.json"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invariants_output() {
    let o = qgalois(&["invariants", "--group", "G(2,1,2)", "--algebra", "weyl:2", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dimension 3"));
    for line in ["x1^2 + x2^2", "x1*y1 + x2*y2", "y1^2 + y2^2"] {
        assert!(text.lines().any(|l| l.trim() == line), "{line}");
    }
    let o = qgalois(&["invariants", "--group", "G(2,1,2)", "--algebra", "weyl:2", "--degree", "1"]);
    assert!(stdout(&o).contains("dimension 0"));
    let o = qgalois(&[
        "invariants", "--group", "G(2,1,2)", "--algebra", "weyl:2", "--degree", "1", "--weights", "1,0",
    ]);
    assert!(stdout(&o).lines().any(|l| l.trim() == "y1 + y2"));
    let o = qgalois(&["invariants", "--group", "Gm:2,n:1", "--algebra", "affine:1", "--degree", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn limits_are_configurable() {
    let o = qgalois(&["invariants", "--group", "G(2,1,2)", "--algebra", "affine:2", "--degree", "11"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qgalois(&[
        "--max-degree", "12", "invariants", "--group", "Gm:2,n:1", "--algebra", "affine:1", "--degree", "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_qgalois"))
        .args(["invariants", "--group", "G(2,1,2)", "--algebra", "affine:2", "--degree", "1"])
        .env("QGALOIS_MAX_GROUP_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn supports_and_hnf() {
    let o = qgalois(&["supp", "--algebra", "gwa:qweyl:2", "X1 + X2 + Y1 + Y2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines, ["(-1, 0)", "(0, -1)", "(0, 1)", "(1, 0)"]);
    let o = qgalois(&["hnf", "1,1;0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("generates Z^2: true"));
    let o = qgalois(&["hnf", "2,0;0,1"]);
    assert!(stdout(&o).contains("generates Z^2: false"));
    assert_eq!(qgalois(&["hnf", "1,x"]).status.code(), Some(2));
}

#[test]
fn catalog_lists_instances_and_claims() {
    let o = qgalois(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    for id in ["qweyl-a1", "sphere", "qso3", "usl2", "order-G212"] {
        assert!(stdout(&o).contains(id), "{id}");
    }
    let o = qgalois(&["catalog", "--json"]);
    let _: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
}
