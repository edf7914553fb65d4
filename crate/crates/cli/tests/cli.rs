use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ecc-spectra"));
    cmd.args(args).env_remove("ECC_SPECTRA_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

fn single(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let mut v = lines(&out);
    assert_eq!(v.len(), 1);
    v.remove(0)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn corpus_file(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let out = run(&[&["corpus"], args].concat());
    assert_eq!(code(&out), 0);
    write(dir, name, std::str::from_utf8(&out.stdout).unwrap())
}

#[test]
fn compute_petersen() {
    let v = single(&["compute", "--gen", "petersen"]);
    assert_eq!(v["energy"], Value::from(40.0));
    assert_eq!(v["wiener"], Value::from(60));
    assert_eq!(v["inertia"]["positive"], 5);
    assert_eq!(v["ecc_regular"], true);
    assert_eq!(v["irreducible"], true);
    let raw = String::from_utf8(run(&["compute", "--gen", "petersen"]).stdout).unwrap();
    assert!(raw.contains("\"energy\":40.0") && raw.contains("\"wiener\":60"));
}

#[test]
fn compute_complete_three() {
    let v = single(&["compute", "--gen", "complete", "3"]);
    assert_eq!(v["spectrum"], serde_json::json!([2.0, -1.0, -1.0]));
}

#[test]
fn compute_selects_graph_by_index() {
    let dir = TempDir::new().unwrap();
    let path = corpus_file(&dir, "c5.g6", &["connected", "5"]);
    let sixth = std::fs::read_to_string(&path).unwrap().lines().nth(5).unwrap().to_owned();
    let v = single(&["compute", "--graph6", &path, "--index", "5"]);
    assert_eq!(v["graph6"], Value::from(sixth));
    let out = run(&["compute", "--graph6", &path, "--index", "500"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn operations() {
    let c = single(&["op", "central", "--gen", "cycle", "4"]);
    assert_eq!((c["order"].as_u64(), c["size"].as_u64()), (Some(8), Some(10)));
    let j = single(&["op", "cvj", "--gen", "cycle", "4", "--gen", "complete", "2"]);
    assert_eq!(j["order"], 10);
    let roles: Vec<&str> = j["blocks"].as_array().unwrap().iter().map(|b| b["role"].as_str().unwrap()).collect();
    assert_eq!(roles, ["V1", "I1", "V2"]);
    let ej = single(&["op", "cvej", "--gen", "cycle", "4", "--gen", "complete", "2", "--gen", "complete", "2"]);
    assert_eq!(ej["order"], 12);
}

#[test]
fn eccentric_graph_of_c4_is_two_k2() {
    let dir = TempDir::new().unwrap();
    let e = single(&["op", "eccentric", "--gen", "cycle", "4"]);
    assert_eq!((e["order"].as_u64(), e["size"].as_u64()), (Some(4), Some(2)));
    let p = write(&dir, "e.g6", e["graph6"].as_str().unwrap());
    let out = run(&["op", "complement", "--graph6", &p]);
    let c4 = lines(&out).remove(0);
    assert_eq!(c4["size"], 4);
    let c4_report = single(&["compute", "--graph6", &write(&dir, "c.g6", c4["graph6"].as_str().unwrap())]);
    assert_eq!(c4_report["eccentricities"], serde_json::json!([2, 2, 2, 2]));
}

#[test]
fn verify_single_theorem() {
    let out = run(&["verify", "--theorem", "central-spectrum", "--gen", "cycle", "4"]);
    assert_eq!(code(&out), 0);
    let v = lines(&out);
    assert_eq!(v[0]["status"], "pass");
    assert!(v[0]["max_dev"].as_f64().unwrap() < 1e-8);
    assert_eq!(v[1]["passed"], 1);

    let v = lines(&run(&["verify", "--theorem", "line-energy", "--gen", "cycle", "5"]));
    assert_eq!(v[0]["status"], "inapplicable");
    let failed: Vec<&str> = v[0]["hypotheses"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|h| h["held"] == false)
        .map(|h| h["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["lambda_min >= 1 - r"]);
}

#[test]
fn verify_all_over_corpus() {
    let dir = TempDir::new().unwrap();
    let path = corpus_file(&dir, "c6.g6", &["connected", "6"]);
    let out = run(&["verify", "--all", "--corpus", &path]);
    let v = lines(&out);
    // C6 and K3,3 are bipartite, where the complement-inertia formula does not hold
    let failing: Vec<(&str, &str)> = v
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| (r["theorem"].as_str().unwrap(), r["graphs"][0].as_str().unwrap()))
        .collect();
    assert_eq!(failing.len(), 2, "{failing:?}");
    assert!(failing.iter().all(|(t, _)| *t == "complement-central-inertia"));
    assert_eq!(code(&out), 6);
    let summary: Vec<&Value> = v.iter().filter(|r| r.get("instances").is_some()).collect();
    assert!(summary.len() > 40);
    let cs = summary.iter().find(|s| s["theorem"] == "eccentric-irreducible").unwrap();
    assert_eq!((cs["instances"].as_u64(), cs["applicable"].as_u64(), cs["passed"].as_u64()), (Some(112), Some(112), Some(112)));
    let same = run(&["verify", "--theorem", "all", "--corpus", &path]);
    assert_eq!(same.stdout, out.stdout);
}

#[test]
fn verify_failure_exits_six() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "g.g6", "I?@|urg{?\n");
    let out = run(&["verify", "--theorem", "central-inertia", "--graph6", &path]);
    assert_eq!(code(&out), 6);
    let v = lines(&out);
    assert_eq!(v[0]["status"], "fail");
    assert_eq!(v[1]["failed"], 1);
}

#[test]
fn bounds_rows() {
    let rows = lines(&run(&["bounds", "--gen", "star", "5"]));
    let tree = rows.iter().find(|r| r["bound"] == "h-tree").unwrap();
    assert_eq!(tree["slack"], 0);
    assert_eq!(tree["lhs"], 16);
    let rows = lines(&run(&["bounds", "--gen", "petersen"]));
    let e = rows.iter().find(|r| r["bound"] == "i-self-centered-energy").unwrap();
    assert_eq!(e["lhs"], Value::from(40.0));
    assert!((e["rhs"].as_f64().unwrap() - 41.3939).abs() < 1e-4);
}

#[test]
fn search_line_equienergetic_cubic() {
    let dir = TempDir::new().unwrap();
    let path = corpus_file(&dir, "reg3_n10.g6", &["regular", "10", "3"]);
    let v = lines(&run(&["search", "--corpus", &path, "--mode", "line-equienergetic"]));
    let pair = v.iter().find(|r| r["class"] == "eps-equienergetic-noncospectral").expect("pair");
    assert_eq!(pair["energy"], Value::from(60.0));
    assert_eq!(v.last().unwrap()["inputs"], 19);
}

#[test]
fn tsv_and_pretty() {
    let out = run(&["bounds", "--gen", "cycle", "5", "--out", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("bound\tdirection\t"));
    let out = run(&["op", "central", "--gen", "cycle", "4", "--out", "pretty"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 8);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.g6", "bad!\n");
    assert_eq!(code(&run(&["compute", "--graph6", &bad])), 2);
    assert_eq!(code(&run(&["compute", "--gen", "dodecahedron"])), 2);
    assert_eq!(code(&run(&["compute", "--gen", "cycle", "4", "--graph6", &bad])), 2);
    assert_eq!(code(&run(&["compute", "--gen", "cycle", "4", "--tol", "-1"])), 2);
    assert_eq!(code(&run(&["verify", "--theorem", "no-such-theorem", "--gen", "cycle", "4"])), 2);
    let split = write(&dir, "split.txt", "4 2\n0 1\n2 3\n");
    let out = run(&["compute", "--edges", &split]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    assert_eq!(code(&run(&["compute", "--gen", "petersen", "--eig-tol", "1e-300"])), 4);
    assert_eq!(code(&run(&["op", "cvj", "--gen", "cycle", "4"])), 5);
    assert_eq!(code(&run(&["op", "central", "--gen", "empty", "3"])), 5);
}

#[test]
fn output_is_independent_of_thread_count() {
    let dir = TempDir::new().unwrap();
    let path = corpus_file(&dir, "c6.g6", &["connected", "6"]);
    let one = run(&["bounds", "--corpus", &path, "--jobs", "1"]);
    let many = run_env(&["bounds", "--corpus", &path, "--jobs", "1"], &[("ECC_SPECTRA_JOBS", "4")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(code(&run_env(&["compute", "--gen", "cycle", "4"], &[("ECC_SPECTRA_JOBS", "zero")])), 2);
    assert!(Path::new(&path).exists());
}
