//! The `spencer` binary: exit codes, JSON output, golden comparison and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spencer"));
    c.env_remove("SPENCER_GOLDEN_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("spencer-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn empty_filter_is_a_usage_error() {
    let o = run(&["--suite", "nothing-matches-*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no cases"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--case", "no-such-case"]).status.code(), Some(2));
    assert_eq!(run(&["--case", "vect(0|2)", "--alpha", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--case", "D21a:parabolic1", "--alpha", "x"]).status.code(), Some(2));
    assert_eq!(run(&["--case", "vect(0|2)", "--suite", "*"]).status.code(), Some(2));
    assert_eq!(run(&["--case", "vect(0|2)", "--threads", "0"]).status.code(), Some(2));
}

#[test]
fn cutoff_below_minimum_fails_the_run() {
    let o = run(&["--case", "vect(2|0)", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn list_names_every_case() {
    let o = run(&["--list"]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    for c in spencer::registry::cases() {
        assert!(text.contains(c.name), "{}", c.name);
    }
}

#[test]
fn glob_filters_select_matching_cases() {
    let o = run(&["--suite", "svect*", "--json", "-"]);
    assert!(o.status.success());
    let stdout = String::from_utf8_lossy(&o.stdout);
    let start = stdout.find('[').unwrap();
    let end = stdout.rfind(']').unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout[start..=end]).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["case"].as_str().unwrap()).collect();
    assert_eq!(names, ["svect(0|2)", "svect(0|3)", "svect(0|4)"]);
    let matched = spencer::registry::matching("osp*").unwrap();
    assert!(!matched.is_empty() && matched.iter().all(|c| c.name.starts_with("osp")));
}

#[test]
fn parametric_case_runs_once_per_alpha() {
    let dir = scratch_dir("alpha");
    let out = dir.join("r.json");
    let o = run(&["--case", "D21a:parabolic2", "--alpha", "2", "--alpha", "-3", "--json", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let alphas: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["alpha"].as_str().unwrap()).collect();
    assert_eq!(alphas, ["2", "-3"]);
}

#[test]
fn bless_then_compare_then_detect_drift() {
    let dir = scratch_dir("golden");
    let d = dir.to_str().unwrap();
    assert!(run(&["--suite", "vect(0|*", "--golden", d, "--bless"]).status.success());
    let o = bin().args(["--suite", "vect(0|*", "--golden"]).env("SPENCER_GOLDEN_DIR", d).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));

    let f = spencer::report::golden_file(&dir, "vect(0|3)", None);
    let text = std::fs::read_to_string(&f).unwrap().replace("\"stabilized\": true", "\"stabilized\": false");
    std::fs::write(&f, text).unwrap();
    let o = run(&["--suite", "vect(0|*", "--golden", d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("$.stabilized"));
}

#[test]
fn json_is_identical_across_thread_counts() {
    let dir = scratch_dir("threads");
    let mut texts = Vec::new();
    for t in ["1", "3"] {
        let p = dir.join(format!("t{t}.json"));
        let o = run(&["--suite", "[cgo]*(3)", "--threads", t, "--json", p.to_str().unwrap()]);
        assert!(o.status.success());
        texts.push(std::fs::read(&p).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
}
