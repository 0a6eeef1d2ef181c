use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;

use spencer::field::Scalar;
use spencer::registry::{self, CaseSpec};
use spencer::report::{check_golden, golden_file, run_case, CaseReport, RunOptions};
use spencer::Error;

/// Structure functions of graded Lie superalgebras: run registered cases and compare with golden reports.
#[derive(Parser, Debug)]
#[command(name = "spencer", version)]
struct Cli {
    /// Run one case by name.
    #[arg(long)]
    case: Option<String>,
    /// Value of the parameter a (rational, repeatable); parametric cases run once per value.
    #[arg(long = "alpha", allow_hyphen_values = true)]
    alpha: Vec<String>,
    /// Degree cutoff for infinite prolongs.
    #[arg(long)]
    max_degree: Option<i64>,
    /// Write the reports (a JSON array) to this path; `-` for stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Compare with golden reports in DIR (default: $SPENCER_GOLDEN_DIR or the bundled set).
    #[arg(long, num_args = 0..=1, default_missing_value = "")]
    golden: Option<String>,
    /// Run every case whose name matches the glob.
    #[arg(long)]
    suite: Option<String>,
    /// Worker threads.
    #[arg(long)]
    threads: Option<usize>,
    /// Write the golden reports instead of comparing.
    #[arg(long)]
    bless: bool,
    /// List case names and exit.
    #[arg(long)]
    list: bool,
}

fn golden_dir(flag: &str) -> PathBuf {
    if !flag.is_empty() {
        return PathBuf::from(flag);
    }
    match std::env::var_os("SPENCER_GOLDEN_DIR") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden")),
    }
}

struct Job {
    spec: CaseSpec,
    alpha: Option<Scalar>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("spencer: {msg}");
    ExitCode::from(2)
}

fn line(r: &CaseReport) -> String {
    let orders: Vec<String> = r.orders.iter().filter(|o| o.sdim.total() > 0).map(|o| format!("H^{{{},2}}={}|{}", o.k, o.sdim.even, o.sdim.odd)).collect();
    let a = r.alpha.as_ref().map(|a| format!(" a={a}")).unwrap_or_default();
    let body = if orders.is_empty() { "all zero".to_string() } else { orders.join(" ") };
    format!("{}{a}: {body}", r.case)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        for c in registry::cases() {
            println!("{:<22} {}", c.name, c.summary);
        }
        return ExitCode::SUCCESS;
    }
    let specs: Vec<CaseSpec> = match (&cli.case, &cli.suite) {
        (Some(_), Some(_)) => return usage("give either --case or --suite"),
        (Some(name), None) => match registry::find(name) {
            Ok(s) => vec![s],
            Err(e) => return usage(&e.to_string()),
        },
        (None, Some(pat)) => match registry::matching(pat) {
            Ok(s) => s,
            Err(e) => return usage(&e.to_string()),
        },
        (None, None) => return usage("nothing to do: pass --case, --suite or --list"),
    };
    if specs.is_empty() {
        return usage("no cases");
    }
    let mut alphas = Vec::new();
    for a in &cli.alpha {
        match Scalar::parse(a) {
            Ok(x) if x.as_rational().is_some() => alphas.push(x),
            _ => return usage(&format!("--alpha expects a rational number, got {a:?}")),
        }
    }
    if cli.case.is_some() && !alphas.is_empty() && !specs[0].parametric {
        return usage(&format!("{} does not take --alpha", specs[0].name));
    }
    let mut jobs = Vec::new();
    for s in specs {
        if s.parametric && !alphas.is_empty() {
            jobs.extend(alphas.iter().map(|a| Job { spec: s, alpha: Some(a.clone()) }));
        } else {
            jobs.push(Job { spec: s, alpha: None });
        }
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return usage("--threads must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            return usage(&e.to_string());
        }
    }
    let golden = cli.golden.as_deref().map(golden_dir);
    let results: Vec<(Result<CaseReport, Error>, f64)> = jobs
        .par_iter()
        .map(|j| {
            let t = Instant::now();
            let r = run_case(&j.spec, &RunOptions { alpha: j.alpha.clone(), max_degree: cli.max_degree });
            (r, t.elapsed().as_secs_f64())
        })
        .collect();

    let mut failed = 0usize;
    let mut reports = Vec::new();
    for ((res, secs), job) in results.into_iter().zip(&jobs) {
        match res {
            Ok(r) => {
                let verdict = match (&golden, cli.bless) {
                    (g, true) => {
                        let dir = g.clone().unwrap_or_else(|| golden_dir(""));
                        let path = golden_file(&dir, &r.case, r.alpha.as_deref());
                        match r.to_json().and_then(|s| std::fs::create_dir_all(&dir).and(std::fs::write(&path, s)).map_err(Error::from)) {
                            Ok(()) => "WROTE".to_string(),
                            Err(e) => {
                                failed += 1;
                                format!("FAIL {e}")
                            }
                        }
                    }
                    (Some(dir), false) => match check_golden(&r, dir) {
                        Ok(()) => "PASS".to_string(),
                        Err(e) => {
                            failed += 1;
                            format!("FAIL {e}")
                        }
                    },
                    (None, false) => "ok".to_string(),
                };
                println!("{verdict:<5} {:>8.2}s  {}", secs, line(&r));
                reports.push(r);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>8.2}s  {}: {e}", secs, job.spec.name);
            }
        }
    }
    if let Some(path) = &cli.json {
        let arr: Result<Vec<serde_json::Value>, _> = reports.iter().map(serde_json::to_value).collect();
        let text = match arr.and_then(|a| serde_json::to_string_pretty(&serde_json::Value::Array(a))) {
            Ok(t) => t + "\n",
            Err(e) => return usage(&e.to_string()),
        };
        let written = if path.as_os_str() == "-" { Ok(print!("{text}")) } else { std::fs::write(path, text) };
        if let Err(e) = written {
            eprintln!("spencer: {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    println!("{} of {} runs passed", jobs.len() - failed, jobs.len());
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
