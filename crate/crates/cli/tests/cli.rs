use std::path::Path;
use std::process::{Command, Output};

use hochlie_cli::files::AlgebraFileV1;
use serde_json::Value;

fn hochlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochlie")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let o = hochlie(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn construct_writes_canonical_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "a.json", &["--family", "elem-abelian", "--p", "3", "--rank", "2"]);
    let text = std::fs::read_to_string(&path).unwrap();
    let file = AlgebraFileV1::parse(&text).unwrap();
    assert_eq!(file.dim, 9);
    assert_eq!(file.field_char, 3);
    assert_eq!(file.emit(), text);
    assert_eq!(file.meta["group"]["family"], "elem_abelian");
}

#[test]
fn hh1_of_rank_two_elementary_abelian() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "a.json", &["--family", "elem-abelian", "--p", "3", "--rank", "2"]);
    let o = hochlie(&["hh1", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["schema"], "hochlie-report/1");
    assert_eq!(r["presentations"][0]["hh1"], 18);
    assert_eq!(r["presentations"][0]["der"], 18);
    assert_eq!(r["presentations"][0]["ider"], 0);
    assert_eq!(r["summaries"][0]["hh1"]["lie_verdict"], "simple");
}

#[test]
fn analyze_reports_associative_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "s3.json", &["--family", "semidirect", "--p", "3", "--m", "2", "--d", "2"]);
    let o = hochlie(&["analyze", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let s = &json(&o)["summaries"][0];
    assert_eq!(s["assoc"]["dim"], 6);
    assert_eq!(s["assoc"]["center_dim"], 3);
    assert_eq!(s["assoc"]["radical_dim"], 4);
    assert_eq!(s["assoc"]["blocks"], 1);

    let report = dir.path().join("s3.csv");
    let o = hochlie(&["analyze", &path, "--format", "csv", "--report", report.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let csv = std::fs::read_to_string(report).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("algebra,field_char,dim,center_dim,radical_dim"));
    assert!(lines.next().unwrap().starts_with("k[C3:C2(d=2)]/GF(3),3,6,3,4"));
}

#[test]
fn hh1_of_the_symmetric_group_in_characteristic_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "s3.json", &["--family", "semidirect", "--p", "3", "--m", "2", "--d", "2"]);
    let o = hochlie(&["hh1", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["presentations"][0]["hh1"], 1);
}

#[test]
fn lie_on_witt_algebras_and_files() {
    let o = hochlie(&["lie", "--input-witt", "1,3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["lie"][0]["dim"], 3);
    assert_eq!(r["lie"][0]["simple"], true);

    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "c4.json", &["--family", "cyclic", "--p", "2", "--order", "4"]);
    let o = hochlie(&["lie", &path]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    assert_eq!(r["lie"][0]["dim"], 4);
    assert_eq!(r["lie"][0]["simple"], false);
}

#[test]
fn verify_subsets_pass() {
    let o = hochlie(&["verify", "--suite", "T1_forward", "--max-order", "9"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json(&o);
    let records = r["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|x| x["status"] == "pass"));

    let o = hochlie(&["verify", "--suite", "OT_criterion,C23_inequality", "--max-order", "8", "--p", "2,3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = hochlie(&["verify", "--suite", "all", "--max-order", "8", "--seed", "7", "--report", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        std::fs::read(path).unwrap()
    };
    let (a, b) = (run("r1.json"), run("r2.json"));
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let r: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(r["rng_seed"], 7);
    assert!(r["records"][0].get("timing_ms").is_none());
}

#[test]
fn usage_errors_exit_two() {
    let o = hochlie(&["construct", "--family", "semidirect", "--p", "3", "--m", "2", "--d", "1", "-o", "/dev/null"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("d"), "{}", stderr(&o));
    assert_eq!(code(&hochlie(&["verify", "--suite", "T9"])), 2);
    assert_eq!(code(&hochlie(&["verify", "--p", "4"])), 2);
    assert_eq!(code(&hochlie(&["frobnicate"])), 2);
    assert_eq!(code(&hochlie(&["lie"])), 2);
}

#[test]
fn malformed_inputs_exit_four_with_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "c4.json", &["--family", "cyclic", "--p", "2", "--order", "4"]);
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file["mult"][3][1] = Value::from(17);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&file).unwrap()).unwrap();
    let o = hochlie(&["hh1", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("mult[3][1]"), "{}", stderr(&o));

    file["mult"][3][1] = Value::from("one");
    std::fs::write(&bad, serde_json::to_string(&file).unwrap()).unwrap();
    let o = hochlie(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("mult[3]"), "{}", stderr(&o));

    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&hochlie(&["analyze", bad.to_str().unwrap()])), 4);
}

#[test]
fn missing_input_files_are_reported() {
    let o = hochlie(&["analyze", "/nonexistent/a.json"]);
    assert_ne!(code(&o), 0);
    assert!(stderr(&o).contains("/nonexistent/a.json"), "{}", stderr(&o));
}
