//! Every registered case (and each bundled value of `a`) against the bundled golden reports.

use std::path::PathBuf;

use spencer::field::Scalar;
use spencer::registry;
use spencer::report::{check_golden, run_case, RunOptions};

fn golden_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))
}

#[test]
fn bundled_reports_match() {
    let mut failures = Vec::new();
    let mut runs = 0;
    for spec in registry::cases() {
        let mut alphas = vec![None];
        if spec.parametric {
            alphas.extend(["2", "-3", "5"].map(|a| Some(Scalar::parse(a).unwrap())));
        }
        for alpha in alphas {
            let r = run_case(&spec, &RunOptions { alpha, max_degree: None }).unwrap();
            runs += 1;
            if let Err(e) = check_golden(&r, &golden_dir()) {
                failures.push(format!("{}: {e}", spec.name));
            }
        }
    }
    assert!(failures.is_empty(), "{} of {runs} reports differ:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn every_golden_file_belongs_to_a_case() {
    let mut expected: Vec<PathBuf> = Vec::new();
    for spec in registry::cases() {
        expected.push(spencer::report::golden_file(&golden_dir(), spec.name, if spec.parametric { Some("a") } else { None }));
        if spec.parametric {
            for a in ["2", "-3", "5"] {
                expected.push(spencer::report::golden_file(&golden_dir(), spec.name, Some(a)));
            }
        }
    }
    let mut found: Vec<PathBuf> = std::fs::read_dir(golden_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    found.sort();
    expected.sort();
    assert_eq!(found, expected);
}
