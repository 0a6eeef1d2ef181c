//! Named cases: how each graded algebra is built, how far to compute, and what to expect.

use crate::cartan_matrix;
use crate::classical;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::grading::{grade_by_degrees, grade_by_weight, psq_depth_one, GradedAlgebra};
use crate::prolong::{cartan_prolong, ProlongInput};
use crate::vectorial;

/// Inputs shared by every builder.
#[derive(Clone, Debug)]
pub struct BuildParams {
    /// Value of the indeterminate; `None` keeps it symbolic.
    pub alpha: Option<Scalar>,
    /// Degree cutoff for infinite prolongs and truncated vectorial algebras.
    pub max_degree: i64,
}

impl Default for BuildParams {
    fn default() -> Self {
        BuildParams { alpha: None, max_degree: DEFAULT_MAX_DEGREE }
    }
}

pub const DEFAULT_MAX_DEGREE: i64 = 6;

/// A built case: the graded algebra and whether the prolong is known to be complete.
#[derive(Clone, Debug)]
pub struct Built {
    pub graded: GradedAlgebra,
    pub stabilized: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct CaseSpec {
    pub name: &'static str,
    pub family: &'static str,
    /// What the case builds.
    pub summary: &'static str,
    /// The expected outcome, stated as formulas.
    pub expect: &'static str,
    /// Orders `k = 1..=k_max` of `H^{k,2}` are computed.
    pub k_max: i64,
    /// Smallest cutoff that still covers `k_max` (only for truncated or infinite algebras).
    pub min_degree: i64,
    pub parametric: bool,
    /// Also decompose every cohomology module over the even part of `g_0`.
    pub even_part: bool,
    /// Output names for the weight coordinates, when the raw labels are not the ones used in tables.
    pub weight_names: Option<&'static [&'static str]>,
    build: fn(&BuildParams) -> Result<Built>,
}

impl CaseSpec {
    pub fn build(&self, p: &BuildParams) -> Result<Built> {
        if p.max_degree < self.min_degree {
            return Err(Error::CutoffTooLow(format!("{} needs --max-degree >= {}", self.name, self.min_degree)));
        }
        if p.alpha.is_some() && !self.parametric {
            return Err(Error::BadParams(format!("{} does not depend on a", self.name)));
        }
        let mut b = (self.build)(p)?;
        b.graded.name = self.name.to_string();
        Ok(b)
    }
}

fn finite(graded: GradedAlgebra) -> Result<Built> {
    Ok(Built { graded, stabilized: true })
}

fn vectorial_case(graded: GradedAlgebra) -> Result<Built> {
    let stabilized = graded.cutoff.is_none();
    Ok(Built { graded, stabilized })
}

fn prolonged(input: &ProlongInput, max_degree: i64) -> Result<Built> {
    let r = cartan_prolong(input, max_degree)?;
    Ok(Built { graded: r.graded, stabilized: r.stabilized })
}

/// Replaces `g_0` by its derived algebra and prolongs again.
fn reduced(g: &GradedAlgebra, name: &str, max_degree: i64) -> Result<Built> {
    let d = g.g0()?.derived_basis();
    let labels = (0..d.len()).map(|i| format!("h{i}")).collect();
    let input = ProlongInput::from_graded(g)?.restrict(name, &d, labels)?;
    prolonged(&input, max_degree)
}

fn functional(len: usize, entries: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut f = vec![Scalar::zero(); len];
    for (i, x) in entries {
        f[*i] = x.clone();
    }
    f
}

/// `sl(n)` graded so that `g_{-1} = Hom(C^p, C^{n-p})`.
fn grassmannian(p: usize, n: usize) -> Result<GradedAlgebra> {
    let s = classical::sl(n, 0)?;
    let len = s.algebra.weights.first().map_or(0, Vec::len);
    let f = functional(len, &(0..p).map(|i| (i, Scalar::one())).collect::<Vec<_>>());
    grade_by_weight(&s.algebra, &f)
}

/// `osp(m|2n)` with `g_0 = cosp(m-2|2n)`, `g_{-1} = id`.
fn osp_a(m: usize, n: usize) -> Result<GradedAlgebra> {
    let o = classical::osp_sy(m, n)?;
    let len = o.algebra.weight_labels.len();
    grade_by_weight(&o.algebra, &functional(len, &[(0, Scalar::one())]))
}

/// `osp(2r|2n)` with `g_0 = gl(r|n)`, `g_{-1} = Lambda^2(id)`.
fn osp_b(m: usize, n: usize) -> Result<GradedAlgebra> {
    let o = classical::osp_sy(m, n)?;
    let len = o.algebra.weight_labels.len();
    grade_by_weight(&o.algebra, &vec![Scalar::ratio(-1, 2); len])
}

fn conformal(n: usize, max_degree: i64) -> Result<Built> {
    let co = classical::osp_sy(n, 0)?.central_extension(&format!("co({n})"))?;
    prolonged(&ProlongInput::from_defining(&format!("co({n})"), &co), max_degree)
}

fn riemannian(n: usize, max_degree: i64) -> Result<Built> {
    let o = classical::osp_sy(n, 0)?;
    prolonged(&ProlongInput::from_defining(&format!("o({n})"), &o), max_degree)
}

fn osp_alpha_case(which: u8, p: &BuildParams) -> Result<Built> {
    let a = p.alpha.clone().unwrap_or_else(Scalar::alpha);
    let g = cartan_matrix::osp_alpha(which, &a)?;
    // g_{-1} is spanned by the X^+ root vectors whose first coordinate is 1
    finite(grade_by_degrees(&g.algebra, g.node_degrees(0).iter().map(|d| -d).collect())?)
}

fn ab3_case() -> Result<Built> {
    let g = cartan_matrix::ab3()?;
    finite(grade_by_degrees(&g.algebra, g.node_degrees(0))?)
}

const PSQ3: &[&str] = &["e1", "d1", "d2"];
const PSQ4_1: &[&str] = &["e1", "d1", "d2", "d3"];
const PSQ4_2: &[&str] = &["e1", "e2", "d1", "d2"];
const OSP_A_7_2: &[&str] = &["e0", "e1", "e2", "d1"];
const OSP_A_6_2: &[&str] = &["e0", "e1", "e2", "d1"];
const OSP_B_4_6: &[&str] = &["e1", "e2", "d1", "d2", "d3"];
const OSP_B_6_4: &[&str] = &["e1", "e2", "e3", "d1", "d2"];
const OSP_B_4_4: &[&str] = &["e1", "e2", "d1", "d2"];

macro_rules! case {
    ($name:expr, $family:expr, $summary:expr, $expect:expr, k = $k:expr, $build:expr) => {
        CaseSpec {
            name: $name,
            family: $family,
            summary: $summary,
            expect: $expect,
            k_max: $k,
            min_degree: 0,
            parametric: false,
            even_part: false,
            weight_names: None,
            build: $build,
        }
    };
}

/// All registered cases, in report order.
pub fn cases() -> Vec<CaseSpec> {
    vec![
        case!("vect(0|2)", "vect", "vector fields on C^{0|2}, standard grading", "H^{k,2} = 0 for all k", k = 3, |_| vectorial_case(vectorial::vect(0, 2, 8)?)),
        case!("vect(0|3)", "vect", "vector fields on C^{0|3}, standard grading", "H^{k,2} = 0 for all k", k = 4, |_| vectorial_case(vectorial::vect(0, 3, 8)?)),
        case!("vect(0|4)", "vect", "vector fields on C^{0|4}, standard grading", "H^{k,2} = 0 for all k", k = 5, |_| vectorial_case(vectorial::vect(0, 4, 8)?)),
        CaseSpec {
            min_degree: 4,
            ..case!("vect(2|0)", "vect", "polynomial vector fields on C^2, truncated", "H^{k,2} = 0 for k <= 3; involutive", k = 3, |p| vectorial_case(vectorial::vect(2, 0, p.max_degree)?))
        },
        case!("svect(0|2)", "svect", "divergence-free fields on C^{0|2}", "only H^{2,2} = Pi^2(1) = 1|0", k = 3, |_| vectorial_case(vectorial::svect(0, 2, 8)?)),
        case!("svect(0|3)", "svect", "divergence-free fields on C^{0|3}", "only H^{3,2} = Pi^3(1) = 0|1", k = 4, |_| vectorial_case(vectorial::svect(0, 3, 8)?)),
        case!("svect(0|4)", "svect", "divergence-free fields on C^{0|4}", "only H^{4,2} = Pi^4(1) = 1|0", k = 5, |_| vectorial_case(vectorial::svect(0, 4, 8)?)),
        case!("h(0|5)", "h", "Hamiltonian fields on C^{0|5}", "only H^{1,2} = Pi(R(3pi_1) + R(pi_1)) over o(5)", k = 4, |_| vectorial_case(vectorial::h(0, 5, 8)?)),
        CaseSpec {
            min_degree: 3,
            ..case!("h(2|1)", "h", "Hamiltonian fields on C^{2|1}, truncated", "order-1 module Pi(R(3pi_1) + R(pi_1))", k = 2, |p| vectorial_case(vectorial::h(1, 1, p.max_degree)?))
        },
        CaseSpec {
            min_degree: 3,
            ..case!("h(2|2)", "h", "Hamiltonian fields on C^{2|2}, truncated", "order-1 module Pi(R(3pi_1) + R(pi_1))", k = 2, |p| vectorial_case(vectorial::h(1, 2, p.max_degree)?))
        },
        case!("ho(0|5)", "h", "derived algebra of h(0|5) (top Hamiltonian removed)", "h(0|5) values plus Pi^4(R(pi_1)) at order 4", k = 4, |_| vectorial_case(vectorial::h_circ(5)?)),
        CaseSpec {
            min_degree: 3,
            ..case!("sle(3)", "le", "divergence-free part of le(3)", "H^{1,2} = S^3(g_-1), H^{2,2} = Pi(1), H^{3,2} = Pi^3(1)", k = 3, |p| vectorial_case(vectorial::sle(3, p.max_degree)?))
        },
        case!("gr(2,4)", "grassmannian", "sl(4) with g_-1 = Hom(C^2, C^2)", "H_- + H_+ at order 2", k = 3, |_| finite(grassmannian(2, 4)?)),
        case!("gr(2,4):reduced", "grassmannian", "g_0 = sl(2) + sl(2) on Hom(C^2, C^2)", "order 2: H_- + H_+ + S^2(g_-1') = R(2pi_1)(x)R(2pi_1)' + R(pi_2)(x)R(pi_2)' extra", k = 3, |p| {
            reduced(&grassmannian(2, 4)?, "s(gl2+gl2)'", p.max_degree)
        }),
        case!("gr(2,5)", "grassmannian", "sl(5) with g_-1 = Hom(C^2, C^3)", "H_- at order 1, H_+ at order 2", k = 3, |_| finite(grassmannian(2, 5)?)),
        case!("cp(3)", "grassmannian", "sl(4) with g_-1 = C^3 (projective structure)", "regression only", k = 3, |_| finite(grassmannian(1, 4)?)),
        case!("co(3)", "conformal", "(C^3, co(3)) prolonged", "single class at order 3", k = 3, |p| conformal(3, p.max_degree)),
        case!("co(4)", "conformal", "(C^4, co(4)) prolonged", "two order-2 classes (self-dual and anti-self-dual)", k = 3, |p| conformal(4, p.max_degree)),
        case!("co(5)", "conformal", "(C^5, co(5)) prolonged", "one irreducible class, the Weyl module", k = 3, |p| conformal(5, p.max_degree)),
        case!("o(3)", "riemannian", "(C^3, o(3)) prolonged", "H^{2,2} = H^{2,2}(co(3)) + S^2(g_-1'), dim 6; not involutive", k = 3, |p| riemannian(3, p.max_degree)),
        case!("o(4)", "riemannian", "(C^4, o(4)) prolonged", "H^{2,2} of dim 20", k = 3, |p| riemannian(4, p.max_degree)),
        case!("o(5)", "riemannian", "(C^5, o(5)) prolonged", "H^{2,2} of dim n^2(n^2-1)/12 = 50", k = 3, |p| riemannian(5, p.max_degree)),
        CaseSpec {
            weight_names: Some(OSP_A_7_2),
            ..case!("osp(7|2):a", "osp", "osp(7|2), g_0 = cosp(5|2), g_-1 = id", "one irreducible H^{2,2} of weight 2e1+2e2; other orders 0", k = 3, |_| finite(osp_a(7, 1)?))
        },
        CaseSpec {
            weight_names: Some(OSP_A_7_2),
            ..case!("osp(7|2):a:reduced", "osp", "g_0 = osp(5|2) on id", "H^{2,2} = three irreducibles of weights 0, 2e1, 2e1+2e2", k = 3, |p| reduced(&osp_a(7, 1)?, "osp(5|2)", p.max_degree))
        },
        CaseSpec {
            weight_names: Some(OSP_A_6_2),
            ..case!("osp(6|2):a", "osp", "osp(6|2), g_0 = cosp(4|2), g_-1 = id", "regression only (o(4) splits)", k = 3, |_| finite(osp_a(6, 1)?))
        },
        CaseSpec {
            weight_names: Some(OSP_A_6_2),
            ..case!("osp(6|2):a:reduced", "osp", "g_0 = osp(4|2) on id", "regression only (o(4) splits)", k = 3, |p| reduced(&osp_a(6, 1)?, "osp(4|2)", p.max_degree))
        },
        CaseSpec {
            weight_names: Some(OSP_B_4_6),
            ..case!("osp(4|6):b", "osp", "osp(4|6), g_0 = gl(2|3), g_-1 = Lambda^2(id)", "single order-1 irreducible, HWV e1+e2-d2-3d3", k = 2, |_| finite(osp_b(4, 3)?))
        },
        CaseSpec {
            weight_names: Some(OSP_B_6_4),
            ..case!("osp(6|4):b", "osp", "osp(6|4), g_0 = gl(3|2), g_-1 = Lambda^2(id)", "single order-1 irreducible", k = 2, |_| finite(osp_b(6, 2)?))
        },
        CaseSpec {
            weight_names: Some(OSP_B_4_4),
            ..case!("osp(4|4):b", "osp", "osp(4|4), g_0 = gl(2|2), g_-1 = Lambda^2(id)", "single order-1 HWV e1+e2-d1-3d2", k = 2, |_| finite(osp_b(4, 2)?))
        },
        case!("pe(5):g0=spe(4)", "pe", "(id, spe(4)) in the skew realization", "prolong g_-1 + g_0; H^{1,2} = Pi(V_e1); H^{2,2}: V_{e1+e2} then Pi(V_{2e1+2e2}), nonsplit", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("spe(4)", &classical::spe_sk(4)?), p.max_degree)
        }),
        case!("pe(5):g0=pe(4)", "pe", "(id, pe(4)) in the skew realization", "H^{2,2} extends the spe(4) layers by V_{2e1}", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("pe(4)", &classical::pe_sk(4)?), p.max_degree)
        }),
        case!("pe(5):g0=cspe(4)", "pe", "(id, spe(4) + identity)", "H^{2,2} extends the spe(4) layers by V_{2e1}", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("cspe(4)", &classical::spe_sk_extended(4, 0, 1, "cspe(4)")?), p.max_degree)
        }),
        case!("pe(5):g0=cpe(4)", "pe", "(id, pe(4) + identity)", "prolong pe(5); H^{2,2}: Pi(V_{2e1+2e2}) then V_{2e1}", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("cpe(4)", &classical::pe_sk(4)?.central_extension("cpe(4)")?), p.max_degree)
        }),
        case!("spe(5):g0=tau+4z", "pe", "(id, <tau + 4z> + spe(4))", "prolong spe(5); H^{2,2} = Pi(V_{2e1+2e2})", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("<tau+4z>+spe(4)", &classical::spe_sk_extended(4, 1, 4, "<tau+4z>+spe(4)")?), p.max_degree)
        }),
        case!("pe(4):g0=cpe(3)", "pe", "(id, pe(3) + identity)", "prolong pe(4)", k = 3, |p| {
            prolonged(&ProlongInput::from_defining("cpe(3)", &classical::pe_sk(3)?.central_extension("cpe(3)")?), p.max_degree)
        }),
        CaseSpec {
            weight_names: Some(PSQ3),
            ..case!("psq(3):p=1", "psq", "psq(3), g_0 = ps(q(1)+q(2)), g_-1 = (+1)-eigenspace", "prolong psq(3); order 1: weights e1+d1-2d2 and e1-d2", k = 3, |p| {
                prolonged(&psq_depth_one(3, 1, true)?, p.max_degree)
            })
        },
        CaseSpec {
            weight_names: Some(PSQ3),
            ..case!("psq(3):p=1:minus", "psq", "psq(3), g_0 = ps(q(1)+q(2)), g_-1 = (-1)-eigenspace", "prolong psq(3)", k = 3, |p| {
                prolonged(&psq_depth_one(3, 1, false)?, p.max_degree)
            })
        },
        CaseSpec {
            weight_names: Some(PSQ4_1),
            ..case!("psq(4):p=1", "psq", "psq(4), g_0 = ps(q(1)+q(3))", "prolong psq(4)", k = 3, |p| prolonged(&psq_depth_one(4, 1, true)?, p.max_degree))
        },
        CaseSpec {
            weight_names: Some(PSQ4_2),
            ..case!("psq(4):p=2", "psq", "psq(4), g_0 = ps(q(2)+q(2))", "prolong psq(4)", k = 3, |p| prolonged(&psq_depth_one(4, 2, true)?, p.max_degree))
        },
        CaseSpec {
            parametric: true,
            ..case!("D21a:parabolic1", "exceptional", "osp_a(4|2), three odd simple roots, first-node parabolic", "unique order-2 class, 4|4 irreducible", k = 3, |p| osp_alpha_case(1, p))
        },
        CaseSpec {
            parametric: true,
            ..case!("D21a:parabolic2", "exceptional", "osp_a(4|2), middle node odd, first-node parabolic", "unique order-2 class, 4|4 irreducible, odd HWV", k = 3, |p| osp_alpha_case(2, p))
        },
        CaseSpec {
            even_part: true,
            ..case!("ab3:first-vertex", "exceptional", "ab(3), first-node parabolic: g_0 = cosp(2|4), g_-1 = L_{3e1}", "order 1 only: 148|152 with submodules 68|72 and 20|24, irreducible quotient", k = 3, |_| ab3_case())
        },
    ]
}

pub fn find(name: &str) -> Result<CaseSpec> {
    cases().into_iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCase(name.to_string()))
}

/// Cases whose name matches a shell-style glob.
pub fn matching(pattern: &str) -> Result<Vec<CaseSpec>> {
    let pat = glob::Pattern::new(pattern).map_err(|e| Error::Parse(format!("bad pattern {pattern:?}: {e}")))?;
    Ok(cases().into_iter().filter(|c| pat.matches(c.name)).collect())
}
