use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn whalg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whalg"))
        .current_dir(dir)
        .env_remove("WHALG_THREADS")
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn build(dir: &Path, kind: &str, group: &str, cocycle: &str, name: &str) -> PathBuf {
    let out = whalg(dir, &["build", kind, "--group", group, "--cocycle", cocycle, "-o", name]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    dir.join(name)
}

fn summary(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json summary")
}

#[test]
fn build_reports_dimensions() {
    let tmp = TempDir::new().unwrap();
    let out = whalg(tmp.path(), &["--json", "build", "b-g-omega", "--group", "z2", "--cocycle", "p=0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(summary(&out)["dim"], 8);
    assert!(tmp.path().join("b-g-omega.json").is_file());
    let out = whalg(tmp.path(), &["--json", "build", "a-g-omega", "--group", "z3", "--cocycle", "p=1", "-o", "a.json"]);
    assert_eq!(summary(&out)["dim"], 81);
    assert_eq!(summary(&out)["conductor"], 3);
}

#[test]
fn bad_inputs_exit_two() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["build", "b-g-omega", "--group", "nonesuch"])), 2);
    assert_eq!(code(&whalg(tmp.path(), &["build", "b-g-omega", "--group", "s3", "--cocycle", "p=1"])), 2);
    assert_eq!(code(&whalg(tmp.path(), &["verify", "missing.json"])), 2);
    assert_eq!(code(&whalg(tmp.path(), &["frobnicate"])), 2);
    fs::write(tmp.path().join("junk.json"), "{\"dim\": 3}").unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["report", "junk.json"])), 2);
}

#[test]
fn verify_passes_and_catches_tampering() {
    let tmp = TempDir::new().unwrap();
    let b = build(tmp.path(), "b-g-omega", "z2", "p=0", "b.json");
    assert_eq!(code(&whalg(tmp.path(), &["verify", "b.json", "--suite", "all"])), 0);

    let mut js: Value = serde_json::from_str(&fs::read_to_string(&b).unwrap()).unwrap();
    js["mu"][1][3]["coeffs"][0][0] = Value::from(2);
    fs::write(tmp.path().join("bad.json"), js.to_string()).unwrap();
    let out = whalg(tmp.path(), &["--json", "verify", "bad.json", "--suite", "wha"]);
    assert_eq!(code(&out), 1);
    let rep = summary(&out);
    assert_eq!(rep["passed"], false);
    let failed: Vec<&Value> = rep["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed[0]["counterexample"]["indices"].as_array().is_some());
    assert!(failed[0]["counterexample"]["lhs"].is_string());
}

#[test]
fn qt_suite_needs_an_r_matrix() {
    let tmp = TempDir::new().unwrap();
    build(tmp.path(), "b-g-omega", "z2", "p=0", "b.json");
    assert_eq!(code(&whalg(tmp.path(), &["verify", "b.json", "--suite", "qt"])), 2);

    let out = whalg(tmp.path(), &["build", "a-g-omega", "--group", "z2", "--cocycle", "p=1", "-o", "a.json", "--r-out", "r.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&whalg(tmp.path(), &["verify", "a.json", "--suite", "qt", "--r", "r.json"])), 0);
    assert_eq!(code(&whalg(tmp.path(), &["verify", "a.json", "--r", "r.json"])), 0);
}

#[test]
fn compare_under_label_maps() {
    let tmp = TempDir::new().unwrap();
    let general = whalg(tmp.path(), &["build", "a-m-c", "--group", "z2", "--module", "right-regular", "-o", "general.json"]);
    assert_eq!(code(&general), 0);
    build(tmp.path(), "b-g-omega", "z2", "trivial", "closed.json");
    assert_eq!(code(&whalg(tmp.path(), &["compare", "general.json", "closed.json"])), 0);

    let labels: Vec<String> = {
        let js: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("general.json")).unwrap()).unwrap();
        js["labels"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
    };
    let closed: Vec<String> = {
        let js: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("closed.json")).unwrap()).unwrap();
        js["labels"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
    };
    let mut map: serde_json::Map<String, Value> = labels.iter().zip(&closed).map(|(a, b)| (a.clone(), Value::from(b.clone()))).collect();
    fs::write(tmp.path().join("id.json"), Value::Object(map.clone()).to_string()).unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["compare", "general.json", "closed.json", "--map", "id.json"])), 0);

    map.insert(labels[1].clone(), Value::from(closed[2].clone()));
    map.insert(labels[2].clone(), Value::from(closed[1].clone()));
    fs::write(tmp.path().join("swap.json"), Value::Object(map.clone()).to_string()).unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["compare", "general.json", "closed.json", "--map", "swap.json"])), 1);

    map.insert(labels[1].clone(), Value::from(closed[1].clone()));
    fs::write(tmp.path().join("clash.json"), Value::Object(map).to_string()).unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["compare", "general.json", "closed.json", "--map", "clash.json"])), 2);

    build(tmp.path(), "b-g-omega", "z3", "trivial", "z3.json");
    assert_eq!(code(&whalg(tmp.path(), &["compare", "closed.json", "z3.json"])), 2);
}

#[test]
fn report_quantities() {
    let tmp = TempDir::new().unwrap();
    build(tmp.path(), "a-g-omega", "z2", "trivial", "a.json");
    build(tmp.path(), "b-g-omega", "z2", "trivial", "b.json");
    let a = summary(&whalg(tmp.path(), &["--json", "report", "a.json"]));
    assert_eq!(a["center_dim"], 4);
    let b = summary(&whalg(tmp.path(), &["--json", "report", "b.json"]));
    assert_eq!((b["center_dim"].clone(), b["cocommutative"].clone()), (Value::from(2), Value::from(false)));
    assert_eq!((b["dim_left"].clone(), b["dim_right"].clone()), (Value::from(2), Value::from(2)));
    assert_eq!(code(&whalg(tmp.path(), &["build", "groupoid", "--objects", "2", "-o", "g.json"])), 0);
    assert_eq!(summary(&whalg(tmp.path(), &["--json", "report", "g.json"]))["cocommutative"], true);
}

#[test]
fn export_then_import_is_identical() {
    let tmp = TempDir::new().unwrap();
    let a = build(tmp.path(), "a-g-omega", "z3", "p=2", "a.json");
    let js: whalg::wha::WhaJson = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    let alg = whalg::wha::WeakHopfAlgebra::from_json(&js).unwrap();
    assert_eq!(alg.to_json(), js);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let tmp = TempDir::new().unwrap();
    build(tmp.path(), "a-g-omega", "z2", "p=1", "a.json");
    let run = |threads: &str| stdout(&whalg(tmp.path(), &["--json", "--threads", threads, "verify", "a.json"]));
    let first = run("1");
    assert_eq!(first, run("1"));
    assert_eq!(first, run("3"));
}

#[test]
fn thread_variable_is_validated() {
    let tmp = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_whalg"))
        .current_dir(tmp.path())
        .env("WHALG_THREADS", "many")
        .args(["build", "b-g-omega", "--group", "z2"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn rep_fusion_of_k_modules() {
    let tmp = TempDir::new().unwrap();
    build(tmp.path(), "b-g-omega", "z3", "p=1", "b.json");
    for g in 0..3 {
        let out = whalg(tmp.path(), &["rep", "k", "--group", "z3", "--cocycle", "p=1", "--element", &g.to_string(), "-o", &format!("k{g}.json")]);
        assert_eq!(code(&out), 0);
    }
    let out = whalg(tmp.path(), &["--json", "rep", "tensor", "--algebra", "b.json", "k1.json", "k2.json", "-o", "k12.json"]);
    assert_eq!(summary(&out)["dim"], 3);
    assert_eq!(code(&whalg(tmp.path(), &["rep", "iso", "--algebra", "b.json", "k12.json", "k0.json"])), 0);
    assert_eq!(code(&whalg(tmp.path(), &["rep", "iso", "--algebra", "b.json", "k12.json", "k1.json"])), 1);
    assert_eq!(code(&whalg(tmp.path(), &["rep", "coherence", "--algebra", "b.json", "k1.json", "k2.json", "k1.json"])), 0);
}

#[test]
fn rep_braiding_on_the_double() {
    let tmp = TempDir::new().unwrap();
    let out = whalg(tmp.path(), &["build", "a-g-omega", "--group", "z2", "-o", "a.json", "--r-out", "r.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&whalg(tmp.path(), &["rep", "regular", "--algebra", "a.json", "-o", "reg.json"])), 0);
    assert_eq!(code(&whalg(tmp.path(), &["rep", "braid", "--algebra", "a.json", "--r", "r.json", "reg.json", "reg.json"])), 0);
}

#[test]
fn tube_commands() {
    let tmp = TempDir::new().unwrap();
    let out = whalg(tmp.path(), &["--json", "tube", "build", "--group", "z2", "--level", "1"]);
    assert_eq!(code(&out), 0);
    let s = summary(&out);
    assert_eq!((s["dim"].clone(), s["center_dim"].clone()), (Value::from(4), Value::from(4)));
    assert_eq!(code(&whalg(tmp.path(), &["tube", "chi", "--group", "z3", "--cocycle", "p=1"])), 0);
    assert_eq!(code(&whalg(tmp.path(), &["tube", "morita", "--group", "z2", "--cocycle", "p=1"])), 0);
}

#[test]
fn obstruction_on_fibonacci() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("c.json"), r#"[{"simples": ["t"], "j_dim": 1}]"#).unwrap();
    let out = whalg(tmp.path(), &["--json", "obstruction", "--ring", "fib", "--candidates", "c.json"]);
    assert_eq!(code(&out), 1);
    let rep = summary(&out);
    let x = &rep["checks"][0]["counterexample"];
    assert_eq!(x["indices"], serde_json::json!([0, 0]));
    assert_eq!((x["lhs"].clone(), x["rhs"].clone()), (Value::from("2"), Value::from("1")));
    fs::write(tmp.path().join("bad.json"), r#"[{"simples": ["t"], "j_dim": 2}]"#).unwrap();
    assert_eq!(code(&whalg(tmp.path(), &["tube", "obstruction", "--ring", "fib", "--candidates", "bad.json"])), 2);
}

#[test]
fn double_commands() {
    let tmp = TempDir::new().unwrap();
    let out = whalg(tmp.path(), &["--json", "double", "build", "--group", "z2", "--cocycle", "p=0", "-o", "d.json", "--r-out", "dr.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(summary(&out)["dim"], 16);
    assert_eq!(code(&whalg(tmp.path(), &["verify", "d.json", "--r", "dr.json"])), 0);
    assert_eq!(code(&whalg(tmp.path(), &["double", "sharp", "--group", "z3", "--cocycle", "p=1"])), 0);
}
