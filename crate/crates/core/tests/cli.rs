use std::process::{Command, Output};

fn homcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_input_error(o: &Output) {
    assert_eq!(o.status.code(), Some(2), "stderr: {}", stderr(o));
    assert_eq!(stderr(o).trim_end().lines().count(), 1, "{}", stderr(o));
}

fn root_rows(o: &Output) -> usize {
    stdout(o).lines().filter(|l| !l.starts_with('#') && l.contains('\t') && !l.starts_with(char::is_alphabetic)).count()
}

#[test]
fn roots() {
    let a2 = homcone(&["roots", "--type", "A2"]);
    assert!(a2.status.success());
    assert_eq!(root_rows(&a2), 3);
    assert!(stdout(&a2).contains("highest_root\t1,1"));
    assert_eq!(root_rows(&homcone(&["roots", "--type", "a1"])), 1);
    assert_input_error(&homcone(&["roots", "--type", "Z9"]));
}

#[test]
fn gp() {
    let o = homcone(&["gp", "--type", "A3", "--parabolic", "2"]);
    let s = stdout(&o);
    assert!(s.contains("dim\t4\n") && s.contains("picard_rank\t1\n") && s.contains("chern_degrees\t4\n"), "{s}");
    let s = stdout(&homcone(&["gp", "--type", "A1", "--parabolic", "1"]));
    assert!(s.contains("dim\t1\n") && s.contains("chern_degrees\t2\n"), "{s}");
    assert_input_error(&homcone(&["gp", "--type", "A2", "--parabolic", ""]));
    assert_input_error(&homcone(&["gp", "--type", "A2", "--parabolic", "3"]));
}

#[test]
fn ne_listing() {
    let o = homcone(&["ne", "--type", "A2", "--parabolic", "1,2", "--lambda", "min", "--degree", "2"]);
    assert_eq!(stdout(&o), "beta\n2,0\n1,1\n0,2\ncount\t3\n");
}

fn classify_json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["classify"];
    full.extend_from_slice(args);
    let o = homcone(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_quadric_cone() {
    let v = classify_json(&["--type", "A1", "--parabolic", "1", "--lambda", "2", "--vertex-dim", "1", "--degree", "2"]);
    assert_eq!(v["count"], 2);
    let dims: Vec<i64> = v["components"].as_array().unwrap().iter().map(|c| c["dimension"].as_i64().unwrap()).collect();
    assert_eq!(dims, vec![6, 6]);
    assert_eq!(v["equidimensional"], true);
    assert_eq!(v["case"], "no_lines");
    assert_eq!(v["cone"]["dim_x"], 2);
}

#[test]
fn classify_plane_and_degree_zero() {
    let v = classify_json(&["--type", "A1", "--parabolic", "1", "--lambda", "1", "--vertex-dim", "1", "--degree", "2"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["components"][0]["dimension"], 8);
    let v = classify_json(&["--type", "B3", "--parabolic", "1,3", "--lambda", "min", "--vertex-dim", "2", "--degree", "0"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["components"][0]["dimension"], v["cone"]["dim_x"]);
}

#[test]
fn classify_output_round_trips() {
    let o = homcone(&["classify", "--type", "A2", "--parabolic", "1,2", "--lambda", "2,2", "--vertex-dim", "2", "--degree", "4"]);
    let text = stdout(&o);
    let report = homcone::report::from_json(&text).unwrap();
    assert_eq!(homcone::report::to_json(&report) + "\n", text);
}

#[test]
fn classify_tsv_and_exclusion() {
    let base = ["classify", "--type", "A1", "--parabolic", "1", "--lambda", "2", "--degree", "2", "--format", "tsv"];
    let s = stdout(&homcone(&base));
    assert_eq!(s.lines().count(), 3);
    assert!(s.starts_with(homcone::report::TSV_HEADER));
    let mut excl = base.to_vec();
    excl.push("--exclude-vertex-stratum");
    let s = stdout(&homcone(&excl));
    assert_eq!(s.lines().count(), 2);
    assert!(s.lines().nth(1).unwrap().starts_with("1\t"));
}

#[test]
fn classify_input_errors() {
    // lambda off the facet
    assert_input_error(&homcone(&["classify", "--type", "A2", "--parabolic", "1", "--lambda", "1,1", "--degree", "1"]));
    // no vertex
    let o = homcone(&["classify", "--type", "A1", "--parabolic", "1", "--lambda", "1", "--vertex-dim", "0", "--degree", "1"]);
    assert_input_error(&o);
    assert!(stderr(&o).contains("vertex-dim"));
    assert_input_error(&homcone(&["classify", "--type", "A1", "--parabolic", "1", "--lambda", "1", "--degree", "-1"]));
    assert_input_error(&homcone(&["classify", "--type", "A1", "--parabolic", "1", "--lambda", "x", "--degree", "1"]));
    assert_input_error(&homcone(&["classify", "--type", "A1", "--parabolic", "1", "--lambda", "1", "--degree", "1", "--format", "xml"]));
}

#[test]
fn affine_compare() {
    let line = |t: &str, d: &str| {
        let o = homcone(&["affine-compare", "--type", t, "--degree", d]);
        assert!(o.status.success());
        stdout(&o).lines().last().unwrap().to_string()
    };
    assert!(line("A1", "1").ends_with("ne=1 ir=2 MISMATCH"));
    assert!(line("A1", "0").ends_with("ne=1 ir=1 MATCH"));
    assert!(line("A2", "2").ends_with("ne=3 ir=6 MISMATCH"));
}

#[test]
fn selfcheck_passes_and_detects_faults() {
    let o = homcone(&["selfcheck"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS ")).count() >= 6);
    let bad = homcone(&["selfcheck", "--inject-fault", "cartan-sign"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stdout(&bad).contains("FAIL root-counts"));
}
