use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
  Command::new(env!("CARGO_BIN_EXE_ac-hodge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
  String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
  String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, text: &str) -> std::path::PathBuf {
  let path = std::env::temp_dir().join(format!("ac-hodge-{}-{name}", std::process::id()));
  std::fs::write(&path, text).unwrap();
  path
}

#[test]
fn catalog_list_and_show() {
  let o = run(&["catalog", "list"]);
  assert!(o.status.success());
  for name in ["torus4", "kodaira_thurston", "filiform4", "iwasawa6"] {
    assert!(stdout(&o).contains(name));
  }
  let o = run(&["catalog", "show", "iwasawa6"]);
  assert!(stdout(&o).starts_with("# Iwasawa"));
  let o = run(&["catalog", "show", "nope"]);
  assert_eq!(o.status.code(), Some(2));
  assert!(stderr(&o).contains("kodaira_thurston"));
}

#[test]
fn validate_reports_flags() {
  let o = run(&["validate", "--catalog", "torus4"]);
  assert_eq!(o.status.code(), Some(0));
  let text = stdout(&o);
  assert!(text.contains("integrable         true"));
  assert!(text.contains("d^2 = 0: holds"));
}

#[test]
fn diamond_of_kodaira_thurston() {
  let o = run(&["diamond", "--catalog", "kodaira_thurston", "--space", "deltabar"]);
  assert!(o.status.success());
  let text = stdout(&o);
  assert!(text.contains("  1  1    3    1"), "{text}");
}

#[test]
fn harmonic_json_is_parseable() {
  let o =
    run(&["harmonic", "--catalog", "kodaira_thurston", "--space", "dab", "--a", "1", "--b", "-i", "--degree", "2", "--json"]);
  assert!(o.status.success(), "{}", stderr(&o));
  let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
  assert_eq!(v["model"], "kodaira_thurston");
  assert_eq!(v["tables"][0]["rows"][0][1], "4");
  assert_eq!(v["bases"][0]["vectors"].as_array().unwrap().len(), 4);
}

#[test]
fn torus_kahler_equality_is_reported() {
  let o = run(&["verify", "--catalog", "torus4", "--suite", "almost-kahler"]);
  assert!(o.status.success());
  assert!(stdout(&o).contains("Lap_d = 2 Lap_delta: holds"));
}

#[test]
fn kahler_equality_failure_is_informational() {
  let o = run(&["verify", "--catalog", "kodaira_thurston", "--suite", "almost-kahler"]);
  assert_eq!(o.status.code(), Some(0));
  assert!(stdout(&o).contains("Lap_d = 2 Lap_delta: fails (informational)"));
}

#[test]
fn failing_suite_exits_one_with_a_witness() {
  let o = run(&["verify", "--catalog", "filiform4", "--suite", "almost-kahler"]);
  assert_eq!(o.status.code(), Some(1));
  let text = stdout(&o);
  assert!(text.contains(": fails") && text.contains("block ("), "{text}");
}

#[test]
fn parametric_suite_with_explicit_pairs() {
  let o = run(&[
    "verify",
    "--catalog",
    "kodaira_thurston",
    "--suite",
    "parametric",
    "--pairs",
    "1,1;2+i,2-i",
    "--random",
    "2",
    "--seed",
    "3",
  ]);
  assert!(o.status.success(), "{}", stderr(&o));
  assert!(stdout(&o).contains("D((2+i), (2-i)) real iff a = conj b: holds"));
}

#[test]
fn cohomology_of_d_a_lambda() {
  let o = run(&["cohomology", "--catalog", "kodaira_thurston", "--space", "da-lambda", "--a", "1"]);
  assert!(o.status.success(), "{}", stderr(&o));
  assert!(stdout(&o).contains("D_1^L = d^L: holds"));
}

#[test]
fn usage_errors_exit_two() {
  assert_eq!(run(&["harmonic", "--catalog", "torus4", "--space", "dab"]).status.code(), Some(2));
  assert_eq!(run(&["harmonic", "--catalog", "torus4", "--space", "d", "--degree", "9"]).status.code(), Some(2));
  assert_eq!(run(&["cohomology", "--catalog", "torus4", "--space", "delta"]).status.code(), Some(2));
  assert_eq!(run(&["harmonic", "--catalog", "torus4", "--space", "dab", "--a", "0", "--b", "1"]).status.code(), Some(2));
  assert_eq!(run(&["betti"]).status.code(), Some(2));
  assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_three() {
  let bad = scratch("bad.acm", "manifold x ncomplex 1\nd phi1 = w[1,-1] +\n");
  let o = run(&["betti", bad.to_str().unwrap()]);
  assert_eq!(o.status.code(), Some(3));
  assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
  let o = run(&["harmonic", "--catalog", "filiform4", "--space", "ddlambda"]);
  assert_eq!(o.status.code(), Some(3));
  assert_eq!(run(&["betti", "/nonexistent/file.acm"]).status.code(), Some(3));
}

#[test]
fn reads_a_file() {
  let text = stdout(&run(&["catalog", "show", "kodaira_thurston"]));
  let path = scratch("kt.acm", &text);
  let o = run(&["betti", path.to_str().unwrap(), "--json"]);
  assert!(o.status.success());
  let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
  let b: Vec<_> = v["tables"][0]["rows"].as_array().unwrap().iter().map(|r| r[1].as_str().unwrap().to_string()).collect();
  assert_eq!(b, ["1", "3", "4", "3", "1"]);
}
