//! Cartan prolongation of a pair `(g_{-1}, g_0)`.
//!
//! An element `X` of `g_i` (`i >= 0`) is stored as the list of values
//! `X(a_j) = [X, a_j]` in `g_{i-1}`. It belongs to the prolong iff
//! `[X(a_j), a_l] = (-1)^{p_j p_l} [X(a_l), a_j]` for all `j, l`.

use std::collections::BTreeMap;

use crate::algebra::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::field::{sign, Scalar};
use crate::grading::GradedAlgebra;
use crate::linalg::{kernel_from_rows, sparse_axpy, to_dense, to_sparse, SparseMatrix, SparseVec, SubspaceCoords, Vector};
use crate::superspace::{multisets, Sdim, SuperSpace};

/// The data `(g_{-1}, g_0)` together with the action of `g_0` on `g_{-1}`.
#[derive(Clone, Debug)]
pub struct ProlongInput {
    pub name: String,
    pub gm1: SuperSpace,
    pub gm1_weights: Vec<Vector>,
    pub g0: LieSuperAlgebra,
    /// `action[x]` is the matrix of `x` on `g_{-1}`.
    pub action: Vec<SparseMatrix>,
}

impl ProlongInput {
    /// Reads `g_{-1}` and `g_0` off a graded algebra.
    pub fn from_graded(g: &GradedAlgebra) -> Result<ProlongInput> {
        let rep = g.g0_on_gm1();
        Ok(ProlongInput { name: g.name.clone(), gm1: rep.space, gm1_weights: rep.weights, g0: g.g0()?, action: rep.action })
    }

    /// `g_{-1}` = defining module of a matrix algebra, `g_0` = the algebra.
    pub fn from_defining(name: &str, g: &crate::classical::MatrixAlgebra) -> ProlongInput {
        let rep = g.defining_rep();
        ProlongInput { name: name.into(), gm1: rep.space, gm1_weights: rep.weights, g0: g.algebra.clone(), action: rep.action }
    }

    /// Same `g_{-1}` with `g_0` replaced by the subalgebra spanned by `basis`.
    pub fn restrict(&self, name: &str, basis: &[Vector], labels: Vec<String>) -> Result<ProlongInput> {
        let g0 = self.g0.subalgebra(name, basis, labels)?;
        let action = basis
            .iter()
            .map(|v| {
                let mut acc: Option<SparseMatrix> = None;
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    acc = Some(match acc {
                        None => SparseMatrix::zeros(self.gm1.dim(), self.gm1.dim()).add_scaled(c, &self.action[i]),
                        Some(m) => m.add_scaled(c, &self.action[i]),
                    });
                }
                acc.unwrap_or_else(|| SparseMatrix::zeros(self.gm1.dim(), self.gm1.dim()))
            })
            .collect();
        Ok(ProlongInput { name: name.to_string(), gm1: self.gm1.clone(), gm1_weights: self.gm1_weights.clone(), g0, action })
    }

    pub fn n(&self) -> usize {
        self.gm1.dim()
    }
}

/// Result of prolongation up to a degree cutoff.
#[derive(Clone, Debug)]
pub struct ProlongResult {
    pub graded: GradedAlgebra,
    /// True when some component vanished, so the prolong is finite and complete.
    pub stabilized: bool,
    pub sdims: Vec<(i64, Sdim)>,
}

/// One prolong component: basis elements with their values on `g_{-1}`.
#[derive(Clone, Debug)]
struct Component {
    /// `values[x][j]`: `[x, a_j]` in coordinates of the previous component.
    values: Vec<Vec<SparseVec>>,
    parities: Vec<bool>,
    weights: Vec<Vector>,
}

impl Component {
    fn dim(&self) -> usize {
        self.values.len()
    }

    fn flat(&self, x: usize, prev_dim: usize) -> Vector {
        let mut v = Vec::new();
        for col in &self.values[x] {
            v.extend(to_dense(col, prev_dim));
        }
        v
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Computes `g_i` from `g_{i-1}` (with `g_{i-2}` implicit in its values).
fn prolong_step(input: &ProlongInput, prev: &Component) -> Component {
    let n = input.n();
    let pm = prev.dim();
    let par = input.gm1.parities();
    // unknowns (j, b) grouped by (weight, parity)
    let mut groups: BTreeMap<(Vector, bool), Vec<(usize, usize)>> = BTreeMap::new();
    let mut order: Vec<(Vector, bool)> = Vec::new();
    for j in 0..n {
        for b in 0..pm {
            let key = (sub(&prev.weights[b], &input.gm1_weights[j]), prev.parities[b] ^ par[j]);
            if !groups.contains_key(&key) {
                order.push(key.clone());
            }
            groups.entry(key).or_default().push((j, b));
        }
    }
    let mut out = Component { values: Vec::new(), parities: Vec::new(), weights: Vec::new() };
    for key in order {
        let unknowns = &groups[&key];
        let pos: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(u, &jb)| (jb, u)).collect();
        // row per (j <= l, target coordinate)
        let mut rows: Vec<Vector> = Vec::new();
        for j in 0..n {
            for l in j..n {
                if j == l && !par[j] {
                    continue;
                }
                let s = sign(par[j] && par[l]);
                let mut block: BTreeMap<usize, Vector> = BTreeMap::new();
                let mut put = |u: usize, c: usize, x: Scalar| {
                    block.entry(c).or_insert_with(|| vec![Scalar::zero(); unknowns.len()])[u] += &x;
                };
                for b in 0..pm {
                    if let Some(&u) = pos.get(&(j, b)) {
                        for (c, x) in &prev.values[b][l] {
                            put(u, *c, x.clone());
                        }
                    }
                    if let Some(&u) = pos.get(&(l, b)) {
                        for (c, x) in &prev.values[b][j] {
                            put(u, *c, -&(&s * x));
                        }
                    }
                }
                rows.extend(block.into_values());
            }
        }
        let ker = if rows.is_empty() {
            (0..unknowns.len()).map(|i| crate::linalg::unit_vec(unknowns.len(), i)).collect()
        } else {
            kernel_from_rows(rows, unknowns.len())
        };
        for v in ker {
            let mut vals = vec![Vec::new(); n];
            for (u, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let (j, b) = unknowns[u];
                    vals[j].push((b, c.clone()));
                }
            }
            for col in &mut vals {
                col.sort_by_key(|e| e.0);
            }
            out.values.push(vals);
            out.parities.push(key.1);
            out.weights.push(key.0.clone());
        }
    }
    out
}

/// Prolongs up to `max_degree` and assembles the graded algebra.
pub fn cartan_prolong(input: &ProlongInput, max_degree: i64) -> Result<ProlongResult> {
    if max_degree < 0 {
        return Err(Error::BadParams("max_degree must be nonnegative".into()));
    }
    let n = input.n();
    let d0 = input.g0.dim();
    // degree 0 component from the action
    let c0 = Component {
        values: (0..d0)
            .map(|x| {
                let t = input.action[x].transpose();
                (0..n).map(|j| t.row(j).clone()).collect()
            })
            .collect(),
        parities: (0..d0).map(|x| input.g0.parity(x)).collect(),
        weights: input.g0.weights.clone(),
    };
    let mut comps = vec![c0];
    let mut stabilized = false;
    for _ in 1..=max_degree {
        let prev = comps.last().expect("degree 0 present");
        let next = prolong_step(input, prev);
        if next.dim() == 0 {
            stabilized = true;
            break;
        }
        comps.push(next);
    }
    if !stabilized && comps.len() as i64 == max_degree + 1 {
        // the next step decides whether the cutoff is the true end
        let probe = prolong_step(input, comps.last().expect("nonempty"));
        stabilized = probe.dim() == 0;
    }
    let graded = assemble(input, &comps, if stabilized { None } else { Some(max_degree) })?;
    let sdims = graded.sdim_table();
    Ok(ProlongResult { graded, stabilized, sdims })
}

/// Offsets of the components in the assembled basis.
struct Layout {
    start: Vec<usize>,
    dims: Vec<usize>,
}

impl Layout {
    fn global(&self, deg: i64, x: usize) -> usize {
        self.start[(deg + 1) as usize] + x
    }
}

fn assemble(input: &ProlongInput, comps: &[Component], cutoff: Option<i64>) -> Result<GradedAlgebra> {
    let n = input.n();
    let mut dims = vec![n];
    dims.extend(comps.iter().map(Component::dim));
    let mut start = vec![0];
    for d in &dims {
        start.push(start.last().unwrap() + d);
    }
    let total = *start.last().unwrap();
    let layout = Layout { start, dims: dims.clone() };
    let top = comps.len() as i64 - 1;

    // brackets between degrees i, j >= 0 as sparse vectors in component i+j
    // computed in increasing total degree
    let mut br: BTreeMap<(i64, usize, i64, usize), SparseVec> = BTreeMap::new();
    let par = |deg: i64, x: usize| -> bool {
        if deg < 0 {
            input.gm1.parity(x)
        } else {
            comps[deg as usize].parities[x]
        }
    };
    // [X, v] for X in g_i (i >= 0), v in g_{-1} coordinates: returns element of g_{i-1}
    let apply = |deg: i64, x: usize, v: &SparseVec| -> SparseVec {
        let mut acc = Vec::new();
        for (j, c) in v {
            sparse_axpy(&mut acc, c, &comps[deg as usize].values[x][*j]);
        }
        acc
    };
    let coords: Vec<SubspaceCoords> = (0..comps.len())
        .map(|d| {
            let prev_dim = if d == 0 { n } else { comps[d - 1].dim() };
            let flats: Vec<Vector> = (0..comps[d].dim()).map(|x| comps[d].flat(x, prev_dim)).collect();
            SubspaceCoords::new(&flats, n * prev_dim)
        })
        .collect();
    for s in 0..=top {
        for i in 0..=s {
            let j = s - i;
            for x in 0..comps[i as usize].dim() {
                for y in 0..comps[j as usize].dim() {
                    let v = if s == 0 {
                        input.g0.bracket_basis(x, y).clone()
                    } else {
                        // values of [X, Y] on a_l, in component s-1
                        let prev_dim = comps[(s - 1) as usize].dim();
                        let mut flat = Vec::with_capacity(n * prev_dim);
                        let sxy = sign(par(i, x) && par(j, y));
                        for l in 0..n {
                            // [X, [Y, a_l]]
                            let ya = comps[j as usize].values[y][l].clone();
                            let t1 = bracket_with_lower(&br, &apply, i, x, j - 1, &ya);
                            let xa = comps[i as usize].values[x][l].clone();
                            let t2 = bracket_with_lower(&br, &apply, j, y, i - 1, &xa);
                            let mut col = t1;
                            sparse_axpy(&mut col, &-&sxy, &t2);
                            flat.extend(to_dense(&col, prev_dim));
                        }
                        let c = coords[s as usize].coords(&flat).ok_or_else(|| {
                            Error::BadParams(format!("{}: bracket of degrees {i} and {j} leaves the prolong", input.name))
                        })?;
                        to_sparse(&c)
                    };
                    br.insert((i, x, j, y), v);
                }
            }
        }
    }
    let mut table = vec![vec![Vec::new(); total]; total];
    for d1 in -1..=top {
        for x in 0..layout.dims[(d1 + 1) as usize] {
            let gx = layout.global(d1, x);
            for d2 in -1..=top {
                for y in 0..layout.dims[(d2 + 1) as usize] {
                    let gy = layout.global(d2, y);
                    let s = d1 + d2;
                    if s > top || s < -1 {
                        continue;
                    }
                    let v: SparseVec = match (d1 < 0, d2 < 0) {
                        (true, true) => Vec::new(),
                        (false, true) => comps[d1 as usize].values[x][y].clone(),
                        (true, false) => {
                            let sg = -&sign(par(d1, x) && par(d2, y));
                            crate::linalg::sparse_scale(&comps[d2 as usize].values[y][x], &sg)
                        }
                        (false, false) => br[&(d1, x, d2, y)].clone(),
                    };
                    table[gx][gy] = v.into_iter().map(|(k, c)| (layout.global(s, k), c)).collect();
                }
            }
        }
    }
    let mut labels: Vec<String> = input.gm1.labels().to_vec();
    labels.extend(input.g0.space.labels().iter().cloned());
    let mut parities: Vec<bool> = input.gm1.parities().to_vec();
    parities.extend(input.g0.space.parities().iter().copied());
    let mut weights = input.gm1_weights.clone();
    weights.extend(input.g0.weights.iter().cloned());
    let mut degrees = vec![-1; n];
    degrees.extend(vec![0; input.g0.dim()]);
    for (d, c) in comps.iter().enumerate().skip(1) {
        for x in 0..c.dim() {
            labels.push(format!("g{d}_{}", x + 1));
            parities.push(c.parities[x]);
            weights.push(c.weights[x].clone());
            degrees.push(d as i64);
        }
    }
    let mut alg = LieSuperAlgebra::from_table(format!("({})_*", input.name), SuperSpace::new(labels, parities), table, weights, input.g0.weight_labels.clone())?;
    let embed = |v: &Vector| {
        let mut w = vec![Scalar::zero(); total];
        for (i, c) in v.iter().enumerate() {
            w[n + i] = c.clone();
        }
        w
    };
    alg.raising = input.g0.raising.iter().map(embed).collect();
    alg.cartan = input.g0.cartan.iter().map(embed).collect();
    GradedAlgebra::new(alg.name.clone(), alg, degrees, cutoff)
}

/// `[X, W]` with `X` in degree `i >= 0` and `W` (sparse) in degree `j >= -1`.
fn bracket_with_lower(
    br: &BTreeMap<(i64, usize, i64, usize), SparseVec>,
    apply: &dyn Fn(i64, usize, &SparseVec) -> SparseVec,
    i: i64,
    x: usize,
    j: i64,
    w: &SparseVec,
) -> SparseVec {
    if j < 0 {
        return apply(i, x, w);
    }
    let mut acc = Vec::new();
    for (y, c) in w {
        sparse_axpy(&mut acc, c, &br[&(i, x, j, *y)]);
    }
    acc
}

/// Dimension of `g_i` via the intersection `(g_0 (x) S^i g'_{-1}) cap (g_{-1} (x) S^{i+1} g'_{-1})`.
///
/// Unknowns are a supersymmetric `(i+1)`-linear map `F` on `g_{-1}` with values
/// in `g_{-1}`, and for each `i`-multiset `J` an element `c_J` of `g_0` with
/// `F(J, a_l) = c_J . a_l`. Requires a faithful action.
pub fn intersection_form_dim(input: &ProlongInput, i: usize) -> usize {
    let n = input.n();
    let par = input.gm1.parities();
    let d0 = input.g0.dim();
    let big = multisets(n, i + 1, par);
    let small = multisets(n, i, par);
    let f_unknowns = big.len() * n;
    let total = f_unknowns + small.len() * d0;
    let big_index: BTreeMap<&Vec<usize>, usize> = big.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows: Vec<Vector> = Vec::new();
    for (si, jset) in small.iter().enumerate() {
        for l in 0..n {
            let mut word = jset.clone();
            word.push(l);
            let mut sorted = word.clone();
            sorted.sort();
            // moving a_l left past larger entries
            let neg = par[l] && jset.iter().filter(|&&j| j > l).fold(false, |acc, &j| acc ^ par[j]);
            let fidx = big_index.get(&sorted).copied();
            for t in 0..n {
                let mut row = vec![Scalar::zero(); total];
                if let Some(k) = fidx {
                    row[k * n + t] = sign(neg);
                }
                for x in 0..d0 {
                    let a = input.action[x].get(t, l);
                    if !a.is_zero() {
                        row[f_unknowns + si * d0 + x] = -&a;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ker = kernel_from_rows(rows, total);
    let proj: Vec<Vector> = ker.iter().map(|v| v[..f_unknowns].to_vec()).collect();
    crate::linalg::rank_of_vectors(&proj, f_unknowns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::grading::grade_by_weight;

    fn standard_input(g: &classical::MatrixAlgebra, name: &str) -> ProlongInput {
        ProlongInput::from_defining(name, g)
    }

    #[test]
    fn gl2_first_step_is_six() {
        let g = classical::gl(2, 0).unwrap();
        let r = cartan_prolong(&standard_input(&g, "gl(2)"), 2).unwrap();
        assert_eq!(r.graded.sdim(1), Sdim::new(6, 0));
        assert_eq!(r.graded.sdim(2), Sdim::new(8, 0));
        assert!(!r.stabilized);
        let bad = r.graded.check_jacobi_in_range();
        let show: Vec<_> = bad.iter().take(5).map(|&(i, j, k)| (r.graded.degrees[i], r.graded.degrees[j], if k == usize::MAX { 99 } else { r.graded.degrees[k] })).collect();
        assert!(bad.is_empty(), "{show:?}");
    }

    #[test]
    fn orthogonal_has_no_first_prolong() {
        for n in 3..=5 {
            let g = classical::osp_sy(n, 0).unwrap();
            let r = cartan_prolong(&standard_input(&g, "o"), 3).unwrap();
            assert!(r.stabilized);
            assert_eq!(r.graded.max_degree(), 0, "o({n})");
        }
    }

    #[test]
    fn conformal_prolong_is_orthogonal_algebra() {
        let g = classical::osp_sy(5, 0).unwrap();
        let gr = grade_by_weight(&g.algebra, &[1, 0].map(Scalar::int)).unwrap();
        let input = ProlongInput::from_graded(&gr).unwrap();
        let r = cartan_prolong(&input, 4).unwrap();
        assert!(r.stabilized);
        assert_eq!(r.sdims, gr.sdim_table());
        assert!(r.graded.check_jacobi_in_range().is_empty());
    }

    #[test]
    fn forms_agree() {
        let g = classical::gl(2, 1).unwrap();
        let input = standard_input(&g, "gl(2|1)");
        let r = cartan_prolong(&input, 2).unwrap();
        for i in 1..=2 {
            assert_eq!(intersection_form_dim(&input, i), r.graded.sdim(i as i64).total(), "degree {i}");
        }
    }

    #[test]
    fn orthosymplectic_prolongs() {
        // orthogonal-type even part: trivial prolong
        for (m, n) in [(2, 1), (3, 1)] {
            let g = classical::osp_sy(m, n).unwrap();
            let r = cartan_prolong(&standard_input(&g, "osp"), 3).unwrap();
            assert!(r.stabilized);
            assert_eq!(r.graded.max_degree(), 0);
        }
        // symplectic-type even part: the prolong is Hamiltonian, g_1 = S^3(V)
        let g = classical::osp_sk(1, 1).unwrap();
        let r = cartan_prolong(&standard_input(&g, "osp_sk"), 2).unwrap();
        assert_eq!(r.graded.sdim(1), Sdim::new(4, 3));
        assert!(!r.stabilized);
    }
}
