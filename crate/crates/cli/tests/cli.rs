use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name).to_string_lossy().into_owned()
}

fn lieder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieder")).args(args).output().unwrap()
}

fn lieder_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lieder"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = lieder(&full);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&o.stdout)));
    (code(&o), v)
}

fn has_keys(v: &Value, keys: &[&str]) {
    for k in keys {
        assert!(v.get(k).is_some(), "missing `{k}` in {v}");
    }
}

#[test]
fn documented_examples() {
    let (c, v) = json_of(&["nilpotent", &data("heisenberg_3.json")]);
    assert_eq!(c, 0);
    assert_eq!(v["verdict"], "Nilpotent");
    assert_eq!(v["order"], 1);

    let o = lieder(&["lder", &data("sl2.json"), "--order", "3"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("= 3"));

    assert_eq!(code(&lieder(&["witness", &data("heisenberg_3.json"), "-k", "3", "-l", "2"])), 2);
}

#[test]
fn json_schemas() {
    let h3 = data("heisenberg_3.json");
    let cases: Vec<(Vec<&str>, i32, &[&str])> = vec![
        (vec!["check", &h3], 0, &["algebra", "dim", "valid", "antisymmetry_failures", "jacobi_failures"]),
        (
            vec!["info", &h3],
            0,
            &["algebra", "dim", "class", "lcs_dims", "derived_dims", "center_dim", "radical_dim", "tags"],
        ),
        (vec!["lder", &h3, "--order", "1"], 0, &["algebra", "order", "dim", "basis"]),
        (
            vec!["chain", &h3, "--max-order", "3"],
            0,
            &["inner_dim", "der_dim", "lder_dims", "gl_dim", "inclusions", "holds"],
        ),
        (
            vec!["invertible", &h3, "--order", "2"],
            0,
            &["order", "found", "matrix", "det", "source", "trials", "seed"],
        ),
        (
            vec!["invertible", "sl2", "--order", "1"],
            1,
            &["order", "found", "matrix", "det", "source", "trials", "seed"],
        ),
        (
            vec!["nilpotent", "sl2"],
            1,
            &["algebra", "verdict", "evidence_kind", "order", "matrix", "det", "seed", "trials"],
        ),
        (vec!["construct-p", "filiform_n4"], 0, &["class", "order", "det", "matrix"]),
        (
            vec!["witness", "filiform_n4", "-k", "3", "-l", "2"],
            0,
            &["order", "excluded_order", "tuple", "u", "z", "matrix"],
        ),
        (vec!["star", "sl2", "-m", "2", "-k", "2"], 0, &["m", "k", "dim", "basis"]),
        (vec!["radinv", "gl2", "--order", "2"], 0, &["order", "radical_dim", "holds"]),
        (
            vec!["degenerate", "heisenberg_contraction", "--order", "1"],
            0,
            &["family", "order", "samples", "generic_dim", "limit_dim", "monotone", "strict"],
        ),
        (vec!["catalog", "show", "sl2"], 0, &["name", "dim", "brackets", "tags", "class"]),
        (vec!["catalog", "list"], 0, &["algebras", "families"]),
    ];
    for (args, expected, keys) in cases {
        let (c, v) = json_of(&args);
        assert_eq!(c, expected, "{args:?}");
        has_keys(&v, keys);
    }
    let op = data("h3_diag_1_1_2.json");
    let (c, v) = json_of(&["grading", &h3, "--op", &op, "--order", "1"]);
    assert_eq!(c, 0);
    has_keys(&v, &["order", "holds", "parts", "tuples"]);
    let o = lieder(&["catalog", "table", "--max-order", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<Value> =
        String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 16);
    for r in &rows {
        has_keys(r, &["name", "n", "class", "dim_inn", "dim_der", "dim_lder_2", "min_invertible_order"]);
    }
}

#[test]
fn table_is_reproducible() {
    let a = lieder(&["catalog", "table", "--max-order", "3"]);
    let b = lieder(&["catalog", "table", "--max-order", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.contains("heisenberg_3,3,2,2,6,9,9,1\n"));
    assert!(text.contains("sl2,3,NotNilpotent,3,3,3,3,-\n"));
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let not_jacobi = write(
        "bad.json",
        r#"{"name":"bad","dim":3,"brackets":[{"i":1,"j":2,"c":{"2":"1"}},{"i":1,"j":3,"c":{"1":"1"}},{"i":2,"j":3,"c":{"3":"1"}}]}"#,
    );
    let garbage = write("garbage.json", "{ not json");
    let bad_op = data("h3_diag_1_1_5.json");
    let h3 = data("heisenberg_3.json");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["check", &h3], 0),
        (vec!["check", &not_jacobi], 1),
        (vec!["info", &not_jacobi], 2),
        (vec!["info", &garbage], 2),
        (vec!["info", "missing.json"], 2),
        (vec!["info", "no_such_algebra"], 2),
        (vec!["lder", &h3, "--order", "0"], 2),
        (vec!["lder", &h3], 2),
        (vec!["frobnicate"], 2),
        (vec!["lder", &h3, "--order", "1", "--bogus"], 2),
        (vec!["construct-p", "sl2"], 2),
        (vec!["witness", "filiform_n4", "-k", "3", "-l", "2"], 0),
        (vec!["witness", "filiform_n4", "-k", "4", "-l", "3"], 2),
        (vec!["grading", &h3, "--op", &bad_op, "--order", "1"], 1),
        (vec!["star", "sl2", "-m", "-2", "-k", "2"], 2),
        (vec!["star", "sl2", "-m", "0", "-k", "2"], 2),
        (vec!["star", "sl2", "-m", "1", "-k", "1"], 2),
        (vec!["degenerate", "heisenberg_contraction", "--order", "1", "--samples", "0"], 2),
        (vec!["nilpotent", "aff1"], 1),
        (vec!["nilpotent", "abelian_2", "--trials", "0"], 2),
        (vec!["nilpotent", "abelian_2", "--seed", "x"], 2),
        (vec!["catalog", "show", "nope"], 2),
        (vec!["verify", &garbage], 2),
        (vec!["--help"], 0),
    ];
    for (args, expected) in cases {
        let o = lieder(&args);
        assert_eq!(code(&o), expected, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn tuple_cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_lieder"))
            .args(["lder", "dixmier_lister_8", "--order", "3"])
            .env("LIEDER_TUPLE_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("100")), 3);
    assert_eq!(code(&run("5000")), 0);
    assert_eq!(code(&run("lots")), 2);
}

#[test]
fn stdin_input() {
    let text = std::fs::read_to_string(data("sl2.json")).unwrap();
    let o = lieder_stdin(&["lder", "-", "--order", "2", "--json"], &text);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    let family = std::fs::read_to_string(data("heisenberg_contraction.json")).unwrap();
    let o = lieder_stdin(&["degenerate", "-", "--order", "2", "--json"], &family);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["generic_dim"].as_u64(), v["limit_dim"].as_u64()), (Some(9), Some(9)));
}

#[test]
fn seeds() {
    let (_, a) = json_of(&["nilpotent", "filiform_n4"]);
    let (_, b) = json_of(&["nilpotent", "filiform_n4", "--seed", "0"]);
    assert_eq!(a, b);
    let o = lieder(&["nilpotent", "filiform_n4", "--seed", "random"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).lines().any(|l| l.starts_with("seed: ")));
}

fn emitted_certificates() -> Vec<Value> {
    let mut certs = Vec::new();
    for name in ["heisenberg_3", "filiform_n4", "abelian_2", "dixmier_lister_8", "sl2", "aff1"] {
        for seed in ["0", "7"] {
            certs.push(json_of(&["nilpotent", name, "--seed", seed]).1);
        }
    }
    certs
}

fn verify_value(v: &Value) -> i32 {
    let o = lieder_stdin(&["verify", "-"], &v.to_string());
    code(&o)
}

#[test]
fn verify_accepts_emitted_certificates() {
    for c in emitted_certificates() {
        assert_eq!(verify_value(&c), 0, "{c}");
    }
}

#[test]
fn verify_rejects_perturbed_entries() {
    for c in emitted_certificates().into_iter().filter(|c| c["matrix"].is_array()) {
        let n = c["matrix"].as_array().unwrap().len();
        for (r, col) in [(0, 0), (0, n - 1), (n - 1, 0), (n / 2, n / 2)] {
            let mut bad = c.clone();
            let entry = bad["matrix"][r][col].as_str().unwrap().to_string();
            bad["matrix"][r][col] =
                Value::String(if entry == "0" { "1".into() } else { format!("{entry}/2") });
            assert_eq!(verify_value(&bad), 1, "{} entry ({r},{col})", c["algebra"]["name"]);
        }
    }
}

#[test]
fn verify_by_name_and_file() {
    let mut c = json_of(&["nilpotent", "heisenberg_3"]).1;
    c["algebra"] = Value::String("heisenberg_3".into());
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), c.to_string()).unwrap();
    let (code, v) = json_of(&["verify", &file.path().to_string_lossy()]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
}
