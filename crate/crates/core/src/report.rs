//! Case reports as deterministic JSON, and comparison against golden files.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::involutivity::{is_involutive, scan_is_zero, standard_order, vanishing_scan, InvolutivityReport, ScanEntry};
use crate::modules::{Module, ModuleReport};
use crate::registry::{BuildParams, CaseSpec};
use crate::spencer::SpencerComplex;
use crate::superspace::Sdim;

/// Cohomology modules above this dimension are reported without representatives.
pub const MAX_LISTED_CLASSES: usize = 48;

/// Identifies the JSON layout described by `schemas/case-report.v1.json`.
pub const SCHEMA: &str = "spencer-case-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct ComponentEntry {
    pub degree: i64,
    pub sdim: Sdim,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightEntry {
    pub weight: Vec<String>,
    pub label: String,
    pub parity: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstituentEntry {
    pub weight: Vec<String>,
    pub label: String,
    pub parity: &'static str,
    pub sdim: Sdim,
    /// `G` or `Q`.
    pub kind: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerEntry {
    pub sdim: Sdim,
    pub constituents: Vec<ConstituentEntry>,
}

/// Highest-weight vector over the even part of `g_0` with the dimension of what it generates.
#[derive(Clone, Debug, Serialize)]
pub struct EvenEntry {
    pub weight: Vec<String>,
    pub label: String,
    pub parity: &'static str,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleSummary {
    pub hwvs: Vec<WeightEntry>,
    pub layers: Vec<LayerEntry>,
    pub split: bool,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_part: Option<Vec<EvenEntry>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub weight: Vec<String>,
    pub parity: &'static str,
    pub cocycle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    pub k: i64,
    pub s: usize,
    pub sdim: Sdim,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutivitySummary {
    pub involutive: bool,
    pub conditions: [bool; 3],
    pub checked_through: i64,
    /// `sdim g^r_t` for `r = 0..=n`, one row per degree `t`.
    pub chain: Vec<(i64, Vec<Sdim>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<Vec<ScanEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_zero: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub schema: String,
    pub case: String,
    pub family: String,
    pub summary: String,
    pub provenance: String,
    pub alpha: Option<String>,
    pub max_degree: i64,
    pub stabilized: bool,
    pub cutoff: Option<i64>,
    pub components: Vec<ComponentEntry>,
    pub faithful: bool,
    pub weight_labels: Vec<String>,
    pub orders: Vec<OrderReport>,
    pub involutivity: Option<InvolutivitySummary>,
}

impl CaseReport {
    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> Result<String> {
        let v = serde_json::to_value(self)?;
        Ok(serde_json::to_string_pretty(&v)? + "\n")
    }

    pub fn order(&self, k: i64) -> Option<&OrderReport> {
        self.orders.iter().find(|o| o.k == k)
    }

    /// Orders with nonzero cohomology.
    pub fn nonzero_orders(&self) -> Vec<i64> {
        self.orders.iter().filter(|o| o.sdim.total() > 0).map(|o| o.k).collect()
    }
}

fn parity_name(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

fn strings(w: &[Scalar]) -> Vec<String> {
    w.iter().map(|x| x.to_string()).collect()
}

/// `2e1+2e2-d1` style label; coefficients other than integers go in parentheses.
pub fn weight_label(w: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (x, n) in w.iter().zip(names) {
        if x.is_zero() {
            continue;
        }
        let s = x.to_string();
        let integral = s.trim_start_matches('-').chars().all(|c| c.is_ascii_digit());
        let (neg, body) = if integral { (s.starts_with('-'), s.trim_start_matches('-').to_string()) } else { (false, format!("({s})")) };
        if !out.is_empty() || neg {
            out.push(if neg { '-' } else { '+' });
        }
        if body != "1" {
            out.push_str(&body);
        }
        out.push_str(n);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn summarize(m: &Module, r: &ModuleReport, names: &[String], even_part: bool) -> ModuleSummary {
    let we = |w: &[Scalar], p: bool| WeightEntry { weight: strings(w), label: weight_label(w, names), parity: parity_name(p) };
    let even = even_part.then(|| {
        let e = m.restrict_even();
        let hw = e.highest_weight_vectors();
        hw.iter()
            .map(|v| {
                let (_, s, _) = e.generates_irreducible(v, &hw);
                EvenEntry { weight: strings(&v.weight), label: weight_label(&v.weight, names), parity: parity_name(v.parity), dim: s.dim() }
            })
            .collect()
    });
    ModuleSummary {
        hwvs: r.hwvs.iter().map(|v| we(&v.weight, v.parity)).collect(),
        layers: r
            .layers
            .iter()
            .map(|l| LayerEntry {
                sdim: l.sdim,
                constituents: l
                    .constituents
                    .iter()
                    .map(|c| ConstituentEntry {
                        weight: strings(&c.weight),
                        label: weight_label(&c.weight, names),
                        parity: parity_name(c.parity),
                        sdim: c.sdim,
                        kind: if c.q_type { "Q" } else { "G" },
                    })
                    .collect(),
            })
            .collect(),
        split: r.split,
        complete: r.complete,
        even_part: even,
    }
}

/// Options that change what is computed, not how it is reported.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub alpha: Option<Scalar>,
    pub max_degree: Option<i64>,
}

/// Builds the case, computes `H^{k,2}` for `k = 1..=k_max` with module analysis, and
/// runs the involutivity test (plus the vanishing scan when it passes).
pub fn run_case(spec: &CaseSpec, opts: &RunOptions) -> Result<CaseReport> {
    let params = BuildParams { alpha: opts.alpha.clone(), max_degree: opts.max_degree.unwrap_or(crate::registry::DEFAULT_MAX_DEGREE) };
    let built = spec.build(&params)?;
    let g = &built.graded;
    let names: Vec<String> = match spec.weight_names {
        Some(n) => n.iter().map(|s| s.to_string()).collect(),
        None => g.algebra.weight_labels.clone(),
    };
    let cx = SpencerComplex::new(g);
    let mut orders = Vec::new();
    for k in 1..=spec.k_max {
        let h = cx.cohomology(k, 2)?;
        let (classes, module) = if h.dim() == 0 {
            (None, None)
        } else {
            let classes = (h.dim() <= MAX_LISTED_CLASSES).then(|| {
                h.classes
                    .iter()
                    .map(|c| ClassEntry { weight: strings(&c.weight), parity: parity_name(c.parity), cocycle: cx.cochain_label(&c.representative) })
                    .collect()
            });
            let m = cx.module(&h)?;
            let r = m.composition_report();
            (classes, Some(summarize(&m, &r, &names, spec.even_part)))
        };
        orders.push(OrderReport { k, s: 2, sdim: h.sdim(), classes, module });
    }
    let involutivity = if g.component(-1).is_empty() {
        None
    } else {
        let inv: InvolutivityReport = is_involutive(g, &standard_order(g), None)?;
        let scan = if inv.involutive {
            let k_max = match g.cutoff {
                Some(c) => (c - 1).min(4),
                None => 4,
            };
            Some(vanishing_scan(g, 3, k_max)?)
        } else {
            None
        };
        Some(InvolutivitySummary {
            involutive: inv.involutive,
            conditions: [inv.condition1, inv.condition2, inv.condition3],
            checked_through: inv.checked_through,
            chain: inv.chain.iter().map(|c| (c.degree, c.sdims.clone())).collect(),
            scan_zero: scan.as_ref().map(|s| scan_is_zero(s)),
            scan,
        })
    };
    Ok(CaseReport {
        schema: SCHEMA.to_string(),
        case: spec.name.to_string(),
        family: spec.family.to_string(),
        summary: spec.summary.to_string(),
        provenance: format!("expected: {}", spec.expect),
        alpha: opts.alpha.as_ref().map(|a| a.to_string()).or_else(|| spec.parametric.then(|| "a".to_string())),
        max_degree: params.max_degree,
        stabilized: built.stabilized,
        cutoff: g.cutoff,
        components: g.sdim_table().into_iter().map(|(degree, sdim)| ComponentEntry { degree, sdim }).collect(),
        faithful: g.is_faithful(),
        weight_labels: names,
        orders,
        involutivity,
    })
}

/// File name of the golden report for a case and an optional value of `a`.
pub fn golden_file(dir: &Path, case: &str, alpha: Option<&str>) -> PathBuf {
    let clean = |s: &str| -> String { s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' }).collect() };
    let mut name = clean(case);
    if let Some(a) = alpha {
        name.push_str("__a=");
        name.push_str(&clean(a));
    }
    dir.join(format!("{name}.json"))
}

/// JSON paths at which two documents differ.
pub fn json_diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_into("$", expected, actual, &mut out);
    out
}

fn diff_into(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            for (k, va) in x {
                match y.get(k) {
                    Some(vb) => diff_into(&format!("{path}.{k}"), va, vb, out),
                    None => out.push(format!("{path}.{k}: missing")),
                }
            }
            for k in y.keys().filter(|k| !x.contains_key(*k)) {
                out.push(format!("{path}.{k}: unexpected"));
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (va, vb)) in x.iter().zip(y).enumerate() {
                diff_into(&format!("{path}[{i}]"), va, vb, out);
            }
        }
        _ if a == b => {}
        _ => out.push(format!("{path}: expected {a}, got {b}")),
    }
}

/// Compares a report with its golden file.
pub fn check_golden(report: &CaseReport, dir: &Path) -> Result<()> {
    let path = golden_file(dir, &report.case, report.alpha.as_deref());
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let expected: Value = serde_json::from_str(&text)?;
    let actual = serde_json::to_value(report)?;
    let diff = json_diff(&expected, &actual);
    if diff.is_empty() {
        Ok(())
    } else {
        Err(Error::GoldenMismatch { case: report.case.clone(), diff: diff.join("; ") })
    }
}
