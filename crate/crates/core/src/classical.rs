//! Matrix realizations of the classical series.
//!
//! Bases are torus weight vectors: the defining module carries a diagonal torus,
//! and each algebra is cut out of `gl(Par)` weight block by weight block.

use std::collections::BTreeMap;

use crate::algebra::{supercommutator, supertrace, LieSuperAlgebra, Representation};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_from_rows, to_sparse, unit_vec, Matrix, SparseMatrix, SubspaceCoords, Vector};
use crate::superspace::{supertranspose, SuperSpace};

/// A Lie superalgebra together with its defining matrix realization.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub algebra: LieSuperAlgebra,
    /// Parities of the defining module basis.
    pub format: Vec<bool>,
    /// Basis matrices, in the order of the algebra basis.
    pub matrices: Vec<Matrix>,
    /// Torus weights of the defining module basis.
    pub module_weights: Vec<Vector>,
    pub module_labels: Vec<String>,
}

impl MatrixAlgebra {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// The defining representation.
    pub fn defining_rep(&self) -> Representation {
        Representation {
            space: SuperSpace::new(self.module_labels.clone(), self.format.clone()),
            action: self.matrices.iter().map(Matrix::to_sparse).collect(),
            weights: self.module_weights.clone(),
        }
    }

    /// Coordinates of a matrix in the algebra basis.
    pub fn coords_of(&self, m: &Matrix) -> Option<Vector> {
        let n = self.format.len();
        let flat: Vec<Vector> = self.matrices.iter().map(|x| flatten(x)).collect();
        SubspaceCoords::new(&flat, n * n).coords(&flatten(m))
    }

    /// Adds matrices (weight zero, even) to the span, e.g. central elements.
    pub fn extended(&self, name: &str, extra: Vec<(String, Matrix)>) -> Result<MatrixAlgebra> {
        let mut mats = self.matrices.clone();
        let mut labels = self.algebra.space.labels().to_vec();
        for (l, m) in extra {
            labels.push(l);
            mats.push(m);
        }
        let mut out = from_matrices(name, &self.format, mats, labels, &self.module_weights, &self.algebra.weight_labels, &self.module_labels)?;
        out.algebra.raising = raising_lex(&out.algebra);
        Ok(out)
    }

    /// Adjoins the identity matrix as a central element `z`.
    pub fn central_extension(&self, name: &str) -> Result<MatrixAlgebra> {
        self.extended(name, vec![("z".into(), Matrix::identity(self.format.len()))])
    }
}

pub fn flatten(m: &Matrix) -> Vector {
    (0..m.nrows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn unit(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(a, b, Scalar::one());
    m
}

fn sub_w(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn label_for(m: &Matrix, mlabels: &[String]) -> String {
    let n = m.nrows();
    let mut terms = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let x = m.get(a, b);
            if x.is_zero() {
                continue;
            }
            let u = format!("E[{},{}]", mlabels[a], mlabels[b]);
            terms.push(if x.is_one() {
                format!("+{u}")
            } else if *x == Scalar::int(-1) {
                format!("-{u}")
            } else {
                format!("+({x}){u}")
            });
        }
    }
    let s = terms.join("");
    s.strip_prefix('+').map(str::to_string).unwrap_or(s)
}

/// Builds the algebra spanned by the given matrices (which must be weight vectors).
pub fn from_matrices(
    name: &str,
    format: &[bool],
    matrices: Vec<Matrix>,
    labels: Vec<String>,
    module_weights: &[Vector],
    weight_labels: &[String],
    module_labels: &[String],
) -> Result<MatrixAlgebra> {
    let n = format.len();
    let flat: Vec<Vector> = matrices.iter().map(flatten).collect();
    if crate::linalg::rank_of_vectors(&flat, n * n) != flat.len() {
        return Err(Error::BadParams(format!("{name}: basis matrices are dependent")));
    }
    let coords = SubspaceCoords::new(&flat, n * n);
    let mut parities = Vec::with_capacity(matrices.len());
    let mut weights = Vec::with_capacity(matrices.len());
    for m in &matrices {
        let p = crate::superspace::matrix_parity(m, format).ok_or(Error::MixedParityMatrix)?;
        parities.push(p);
        let mut w: Option<Vector> = None;
        for a in 0..n {
            for b in 0..n {
                if m.get(a, b).is_zero() {
                    continue;
                }
                let wab = sub_w(&module_weights[a], &module_weights[b]);
                match &w {
                    None => w = Some(wab),
                    Some(u) if *u != wab => {
                        return Err(Error::NonDiagonalizableAction(format!("{name}: basis matrix is not a weight vector")))
                    }
                    _ => {}
                }
            }
        }
        weights.push(w.unwrap_or_else(|| vec![Scalar::zero(); weight_labels.len()]));
    }
    let k = matrices.len();
    let mut table = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let c = supercommutator(&matrices[i], parities[i], &matrices[j], parities[j]);
            if c.is_zero() {
                continue;
            }
            let x = coords
                .coords(&flatten(&c))
                .ok_or_else(|| Error::BadParams(format!("{name}: span is not closed under the bracket")))?;
            table[i][j] = to_sparse(&x);
        }
    }
    let algebra = LieSuperAlgebra::from_table(name, SuperSpace::new(labels, parities), table, weights, weight_labels.to_vec())?;
    Ok(MatrixAlgebra {
        algebra,
        format: format.to_vec(),
        matrices,
        module_weights: module_weights.to_vec(),
        module_labels: module_labels.to_vec(),
    })
}

/// Linear constraints on `X` of parity `p`; all returned values must vanish.
type Constraint<'a> = dyn Fn(&Matrix, bool) -> Vec<Scalar> + 'a;

/// Subalgebra of `gl(format)` cut out by linear, torus-invariant constraints.
pub fn from_constraints(
    name: &str,
    format: &[bool],
    module_weights: &[Vector],
    weight_labels: &[String],
    module_labels: &[String],
    constraint: &Constraint<'_>,
) -> Result<MatrixAlgebra> {
    let n = format.len();
    // group matrix units by (parity, weight), keyed by first unit for a stable order
    let mut groups: BTreeMap<(bool, usize), Vec<(usize, usize)>> = BTreeMap::new();
    let mut key_of: Vec<((bool, Vector), usize)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let p = format[a] ^ format[b];
            let w = sub_w(&module_weights[a], &module_weights[b]);
            let first = match key_of.iter().find(|(k, _)| k.0 == p && k.1 == w) {
                Some((_, f)) => *f,
                None => {
                    let f = a * n + b;
                    key_of.push(((p, w), f));
                    f
                }
            };
            groups.entry((p, first)).or_default().push((a, b));
        }
    }
    let mut mats = Vec::new();
    for ((p, _), units) in &groups {
        let cols: Vec<Vec<Scalar>> = units.iter().map(|&(a, b)| constraint(&unit(n, a, b), *p)).collect();
        let nc = cols.first().map_or(0, Vec::len);
        let rows: Vec<Vector> = (0..nc).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let ker = if nc == 0 { (0..units.len()).map(|i| unit_vec(units.len(), i)).collect() } else { kernel_from_rows(rows, units.len()) };
        for v in ker {
            let mut m = Matrix::zeros(n, n);
            for (c, &(a, b)) in v.iter().zip(units) {
                if !c.is_zero() {
                    m.set(a, b, c.clone());
                }
            }
            mats.push((*p, m));
        }
    }
    // even first, then odd; stable otherwise
    mats.sort_by_key(|(p, _)| *p);
    let labels = mats.iter().map(|(_, m)| label_for(m, module_labels)).collect();
    let mats = mats.into_iter().map(|(_, m)| m).collect();
    let mut out = from_matrices(name, format, mats, labels, module_weights, weight_labels, module_labels)?;
    out.algebra.raising = raising_lex(&out.algebra);
    Ok(out)
}

/// Lexicographic positivity: first nonzero weight coordinate is positive.
pub fn lex_positive(w: &[Scalar]) -> bool {
    w.iter()
        .find(|x| !x.is_zero())
        .and_then(|x| x.as_rational())
        .is_some_and(|r| r > &num_rational::BigRational::from_integer(0.into()))
}

/// Basis elements of lexicographically positive weight.
pub fn raising_lex(g: &LieSuperAlgebra) -> Vec<Vector> {
    (0..g.dim()).filter(|&i| lex_positive(&g.weights[i])).map(|i| g.basis_vector(i)).collect()
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn e_weight(dim: usize, i: usize, c: i64) -> Vector {
    let mut w = vec![Scalar::zero(); dim];
    w[i] = Scalar::int(c);
    w
}

fn gl_data(p: usize, q: usize) -> (Vec<bool>, Vec<Vector>, Vec<String>, Vec<String>) {
    let format: Vec<bool> = (0..p + q).map(|i| i >= p).collect();
    let weights = (0..p + q).map(|i| e_weight(p + q, i, 1)).collect();
    let mut wl = labels("eps", p);
    wl.extend(labels("del", q));
    let mut ml = labels("e", p);
    ml.extend(labels("f", q));
    (format, weights, wl, ml)
}

fn str_constraint(format: &[bool]) -> impl Fn(&Matrix, bool) -> Vec<Scalar> + '_ {
    move |x: &Matrix, _p: bool| vec![supertrace(x, format).expect("square")]
}

pub fn gl(p: usize, q: usize) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = gl_data(p, q);
    from_constraints(&format!("gl({p}|{q})"), &f, &w, &wl, &ml, &|_, _| Vec::new())
}

pub fn sl(p: usize, q: usize) -> Result<MatrixAlgebra> {
    if p + q == 0 {
        return Err(Error::BadParams("sl(0|0)".into()));
    }
    let (f, w, wl, ml) = gl_data(p, q);
    let c = str_constraint(&f);
    let out = from_constraints(&format!("sl({p}|{q})"), &f, &w, &wl, &ml, &c);
    out
}

/// `psl(n|n) = sl(n|n)` modulo the identity.
pub fn psl(n: usize) -> Result<LieSuperAlgebra> {
    let s = sl(n, n)?;
    let one = s.coords_of(&Matrix::identity(2 * n)).ok_or_else(|| Error::BadParams("identity not in sl(n|n)".into()))?;
    s.algebra.quotient(format!("psl({n}|{n})"), &[one])
}

fn q_data(n: usize) -> (Vec<bool>, Vec<Vector>, Vec<String>, Vec<String>) {
    let format: Vec<bool> = (0..2 * n).map(|i| i >= n).collect();
    let weights = (0..2 * n).map(|i| e_weight(n, i % n, 1)).collect();
    let mut ml = labels("e", n);
    ml.extend(labels("f", n));
    (format, weights, labels("eps", n), ml)
}

/// The odd operator `J = (0 1; -1 0)` with `J^2 = -1`.
pub fn queer_j(n: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.set(i, n + i, Scalar::one());
        j.set(n + i, i, Scalar::int(-1));
    }
    j
}

fn commutes_with_j(n: usize) -> impl Fn(&Matrix, bool) -> Vec<Scalar> {
    let j = queer_j(n);
    move |x: &Matrix, p: bool| flatten(&supercommutator(x, p, &j, true))
}

/// `q(n)`: supermatrices `(A B; B A)`, the centralizer of `J`.
pub fn q(n: usize) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = q_data(n);
    from_constraints(&format!("q({n})"), &f, &w, &wl, &ml, &commutes_with_j(n))
}

/// `sq(n)`: the part of `q(n)` with vanishing queer trace.
pub fn sq(n: usize) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = q_data(n);
    let c = commutes_with_j(n);
    from_constraints(&format!("sq({n})"), &f, &w, &wl, &ml, &move |x: &Matrix, p: bool| {
        let mut v = c(x, p);
        v.push((0..n).map(|i| x.get(i, n + i).clone()).sum());
        v
    })
}

/// `psq(n) = sq(n)` modulo the identity.
pub fn psq(n: usize) -> Result<LieSuperAlgebra> {
    Ok(psq_with_lifts(n)?.0)
}

/// `psq(n)` together with a representative matrix in `sq(n)` for each basis element.
pub fn psq_with_lifts(n: usize) -> Result<(LieSuperAlgebra, Vec<Matrix>)> {
    let s = sq(n)?;
    let one = s.coords_of(&Matrix::identity(2 * n)).expect("identity lies in sq(n)");
    let (_, pivots) = crate::linalg::rref_rows(vec![one.clone()], s.algebra.dim());
    let mut out = s.algebra.quotient(format!("psq({n})"), &[one])?;
    out.raising = raising_lex(&out);
    let lifts = (0..s.algebra.dim()).filter(|j| !pivots.contains(j)).map(|j| s.matrices[j].clone()).collect();
    Ok((out, lifts))
}

/// Split even form data for `osp(m|2n)`: module weights and the form matrix.
fn osp_data(m: usize, n: usize) -> (Vec<bool>, Vec<Vector>, Vec<String>, Vec<String>, Matrix) {
    let r = m / 2;
    let dim = m + 2 * n;
    let rank = r + n;
    let format: Vec<bool> = (0..dim).map(|i| i >= m).collect();
    let mut weights = Vec::with_capacity(dim);
    let mut ml = Vec::with_capacity(dim);
    for i in 0..m {
        if i < r {
            weights.push(e_weight(rank, i, 1));
            ml.push(format!("e{}", i + 1));
        } else if m % 2 == 1 && i == r {
            weights.push(vec![Scalar::zero(); rank]);
            ml.push("e0".to_string());
        } else {
            let k = m - 1 - i;
            weights.push(e_weight(rank, k, -1));
            ml.push(format!("e-{}", k + 1));
        }
    }
    for j in 0..2 * n {
        if j < n {
            weights.push(e_weight(rank, r + j, 1));
            ml.push(format!("f{}", j + 1));
        } else {
            weights.push(e_weight(rank, r + j - n, -1));
            ml.push(format!("f-{}", j - n + 1));
        }
    }
    let mut b = Matrix::zeros(dim, dim);
    for i in 0..m {
        b.set(i, m - 1 - i, Scalar::one());
    }
    for j in 0..n {
        b.set(m + j, m + n + j, Scalar::one());
        b.set(m + n + j, m + j, Scalar::int(-1));
    }
    let mut wl = labels("eps", r);
    wl.extend(labels("del", n));
    (format, weights, wl, ml, b)
}

/// Constraint `X^st B + (-1)^{p(X)p(B)} B X = 0` for an even form `B`.
fn aut_constraint<'a>(format: &'a [bool], b: &'a Matrix) -> impl Fn(&Matrix, bool) -> Vec<Scalar> + 'a {
    move |x: &Matrix, _p: bool| {
        let st = supertranspose(x, format).expect("homogeneous unit");
        flatten(&st.mul(b).add(&b.mul(x)))
    }
}

/// `osp(m|2n)` preserving the split supersymmetric form.
pub fn osp_sy(m: usize, n: usize) -> Result<MatrixAlgebra> {
    if m + n == 0 {
        return Err(Error::BadParams("osp(0|0)".into()));
    }
    let (f, w, wl, ml, b) = osp_data(m, n);
    let c = aut_constraint(&f, &b);
    let out = from_constraints(&format!("osp_sy({m}|{})", 2 * n), &f, &w, &wl, &ml, &c);
    out
}

/// Change of basis taking the `osp_sy(m|2n)` realization to `osp_sk(m|2n)`:
/// reorder to format `(2n|m)` and flip the sign of the second symplectic half.
pub fn osp_sk_transport(m: usize, n: usize) -> Matrix {
    let dim = m + 2 * n;
    let mut t = Matrix::zeros(dim, dim);
    // new index of old odd vector m + j is j; old even vector i goes to 2n + i
    for j in 0..2 * n {
        let s = if j >= n { Scalar::int(-1) } else { Scalar::one() };
        t.set(j, m + j, s);
    }
    for i in 0..m {
        t.set(2 * n + i, i, Scalar::one());
    }
    t
}

/// `osp_sk(m|2n)`: the same superalgebra realized on `Pi(V)`, format `(2n|m)`.
pub fn osp_sk(m: usize, n: usize) -> Result<MatrixAlgebra> {
    let sy = osp_sy(m, n)?;
    let t = osp_sk_transport(m, n);
    let tinv = t.transpose();
    let dim = m + 2 * n;
    let mut format = vec![false; dim];
    for f in format.iter_mut().skip(2 * n) {
        *f = true;
    }
    let perm = |i: usize| -> usize { if i < 2 * n { m + i } else { i - 2 * n } };
    let weights: Vec<Vector> = (0..dim).map(|i| sy.module_weights[perm(i)].clone()).collect();
    let ml: Vec<String> = (0..dim).map(|i| sy.module_labels[perm(i)].clone()).collect();
    let mats: Vec<Matrix> = sy.matrices.iter().map(|x| t.mul(x).mul(&tinv)).collect();
    let mut out = from_matrices(&format!("osp_sk({m}|{})", 2 * n), &format, mats, sy.algebra.space.labels().to_vec(), &weights, &sy.algebra.weight_labels, &ml)?;
    out.algebra.raising = sy.algebra.raising.clone();
    Ok(out)
}

fn pe_data(n: usize) -> (Vec<bool>, Vec<Vector>, Vec<String>, Vec<String>) {
    let format: Vec<bool> = (0..2 * n).map(|i| i >= n).collect();
    let weights = (0..2 * n).map(|i| if i < n { e_weight(n, i, 1) } else { e_weight(n, i - n, -1) }).collect();
    let mut ml = labels("e", n);
    ml.extend(labels("f", n));
    (format, weights, labels("eps", n), ml)
}

/// Constraints for `(A B; C -A^t)` with `B = sb B^t`, `C = sc C^t`.
fn pe_constraint(n: usize, sb: i64, sc: i64) -> impl Fn(&Matrix, bool) -> Vec<Scalar> {
    move |x: &Matrix, _p: bool| {
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                v.push(x.get(n + i, n + j) + x.get(j, i));
                v.push(x.get(i, n + j) - &(&Scalar::int(sb) * x.get(j, n + i)));
                v.push(x.get(n + i, j) - &(&Scalar::int(sc) * x.get(n + j, i)));
            }
        }
        v
    }
}

/// `pe_sy(n)`: `(A B; C -A^t)` with `B` skew and `C` symmetric.
pub fn pe_sy(n: usize) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = pe_data(n);
    from_constraints(&format!("pe_sy({n})"), &f, &w, &wl, &ml, &pe_constraint(n, -1, 1))
}

/// `pe_sk(n)`: `(A B; C -A^t)` with `B` symmetric and `C` skew.
pub fn pe_sk(n: usize) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = pe_data(n);
    from_constraints(&format!("pe_sk({n})"), &f, &w, &wl, &ml, &pe_constraint(n, 1, -1))
}

/// `spe(n)`: supertraceless part of `pe_sy(n)`.
pub fn spe(n: usize) -> Result<MatrixAlgebra> {
    spe_with(n, -1, 1, &format!("spe({n})"))
}

/// Supertraceless part of `pe_sk(n)`.
pub fn spe_sk(n: usize) -> Result<MatrixAlgebra> {
    spe_with(n, 1, -1, &format!("spe_sk({n})"))
}

fn spe_with(n: usize, sb: i64, sc: i64, name: &str) -> Result<MatrixAlgebra> {
    let (f, w, wl, ml) = pe_data(n);
    let c = pe_constraint(n, sb, sc);
    let fmt = f.clone();
    from_constraints(name, &f, &w, &wl, &ml, &move |x: &Matrix, p: bool| {
        let mut v = c(x, p);
        v.push(supertrace(x, &fmt).expect("square"));
        v
    })
}

/// `tau = diag(1_n, -1_n)`.
pub fn pe_tau(n: usize) -> Matrix {
    let mut t = Matrix::identity(2 * n);
    for i in n..2 * n {
        t.set(i, i, Scalar::int(-1));
    }
    t
}

/// `spe(n) + C(a tau + b z)`.
pub fn spe_extended(n: usize, a: i64, b: i64, name: &str) -> Result<MatrixAlgebra> {
    extend_tau_z(&spe(n)?, n, a, b, name)
}

/// `spe_sk(n) + C(a tau + b z)`.
pub fn spe_sk_extended(n: usize, a: i64, b: i64, name: &str) -> Result<MatrixAlgebra> {
    extend_tau_z(&spe_sk(n)?, n, a, b, name)
}

fn extend_tau_z(s: &MatrixAlgebra, n: usize, a: i64, b: i64, name: &str) -> Result<MatrixAlgebra> {
    let x = pe_tau(n).scale(&Scalar::int(a)).add(&Matrix::identity(2 * n).scale(&Scalar::int(b)));
    s.extended(name, vec![(format!("{a}tau+{b}z"), x)])
}

/// Transport of a matrix algebra along the parity shift of its defining module:
/// the same operators written in the basis `Pi(e_i)`.
pub fn parity_shift_realization(g: &MatrixAlgebra, name: &str) -> Result<MatrixAlgebra> {
    let format: Vec<bool> = g.format.iter().map(|p| !p).collect();
    let ml: Vec<String> = g.module_labels.iter().map(|l| format!("Pi({l})")).collect();
    let mut out = from_matrices(name, &format, g.matrices.clone(), g.algebra.space.labels().to_vec(), &g.module_weights, &g.algebra.weight_labels, &ml)?;
    out.algebra.raising = g.algebra.raising.clone();
    Ok(out)
}

/// Sparse image of a coordinate vector under the defining representation.
pub fn matrix_of(g: &MatrixAlgebra, x: &[Scalar]) -> Matrix {
    let n = g.format.len();
    let mut m = Matrix::zeros(n, n);
    for (c, b) in x.iter().zip(&g.matrices) {
        if !c.is_zero() {
            m = m.add(&b.scale(c));
        }
    }
    m
}

/// Kernel of an action: algebra elements acting by zero (used for faithfulness).
pub fn action_kernel(actions: &[SparseMatrix], dim: usize) -> Vec<Vector> {
    let n = actions.len();
    let rows: Vec<Vector> = (0..dim * dim).map(|idx| (0..n).map(|i| actions[i].get(idx / dim, idx % dim)).collect()).collect();
    kernel_from_rows(rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::Sdim;

    fn jacobi_ok(g: &LieSuperAlgebra) {
        assert!(g.check_jacobi().is_empty(), "{} fails Jacobi", g.name);
        g.check_weights().unwrap();
    }

    #[test]
    fn dimensions() {
        assert_eq!(gl(2, 1).unwrap().algebra.sdim(), Sdim::new(5, 4));
        assert_eq!(sl(2, 1).unwrap().algebra.sdim(), Sdim::new(4, 4));
        assert_eq!(osp_sy(3, 1).unwrap().algebra.sdim(), Sdim::new(6, 6));
        assert_eq!(pe_sy(3).unwrap().algebra.sdim(), Sdim::new(9, 9));
        assert_eq!(spe(3).unwrap().algebra.sdim(), Sdim::new(8, 9));
        assert_eq!(q(2).unwrap().algebra.sdim(), Sdim::new(4, 4));
        assert_eq!(sq(2).unwrap().algebra.sdim(), Sdim::new(4, 3));
        assert_eq!(psq(3).unwrap().sdim(), Sdim::new(8, 8));
        assert_eq!(psl(2).unwrap().sdim(), Sdim::new(6, 8));
        assert_eq!(osp_sy(4, 1).unwrap().algebra.sdim(), Sdim::new(9, 8));
    }

    #[test]
    fn jacobi_for_constructors() {
        for g in [gl(2, 1), sl(1, 2), q(2), sq(2), osp_sy(3, 1), osp_sy(2, 1), osp_sk(3, 1), pe_sy(2), pe_sk(2), spe(3)] {
            jacobi_ok(&g.unwrap().algebra);
        }
        jacobi_ok(&psq(3).unwrap());
        jacobi_ok(&psl(2).unwrap());
        let co = osp_sy(4, 0).unwrap().central_extension("co(4)").unwrap();
        jacobi_ok(&co.algebra);
        assert!(co.defining_rep().check(&co.algebra).is_empty());
    }

    #[test]
    fn gl11_odd_bracket() {
        let g = gl(1, 1).unwrap();
        let e12 = g.algebra.index_of("E[e1,f1]").unwrap();
        let e21 = g.algebra.index_of("E[f1,e1]").unwrap();
        let b = g.algebra.bracket(&g.algebra.basis_vector(e12), &g.algebra.basis_vector(e21)).unwrap();
        assert_eq!(matrix_of(&g, &b), Matrix::identity(2));
    }

    #[test]
    fn queer_centralizer() {
        let g = q(2).unwrap();
        let j = queer_j(2);
        assert_eq!(j.mul(&j), Matrix::identity(4).scale(&Scalar::int(-1)));
        for (i, m) in g.matrices.iter().enumerate() {
            assert!(supercommutator(m, g.algebra.parity(i), &j, true).is_zero());
        }
        let s = sq(3).unwrap();
        for m in &s.matrices {
            assert!(crate::algebra::queertrace(m).unwrap().is_zero());
        }
    }

    #[test]
    fn osp_realizations_agree() {
        let sy = osp_sy(3, 1).unwrap();
        let sk = osp_sk(3, 1).unwrap();
        assert_eq!(sy.algebra.sdim(), sk.algebra.sdim());
        // identity on basis indices is an isomorphism of structure constants
        for i in 0..sy.dim() {
            for j in 0..sy.dim() {
                assert_eq!(sy.algebra.bracket_basis(i, j), sk.algebra.bracket_basis(i, j));
            }
        }
        // even block is sp(2), odd block preserves the split symmetric form
        for (k, m) in sk.matrices.iter().enumerate() {
            if sk.algebra.parity(k) {
                continue;
            }
            let a = m.get(0, 0).clone();
            assert_eq!(m.get(1, 1), &-&a);
        }
    }

    #[test]
    fn pe_realizations_agree() {
        let sy = pe_sy(3).unwrap();
        let shifted = parity_shift_realization(&sy, "pe_sy(Pi V)").unwrap();
        assert_eq!(shifted.algebra.sdim(), pe_sk(3).unwrap().algebra.sdim());
        jacobi_ok(&shifted.algebra);
        // operators written in the shifted format have the pe_sk block shape
        // after conjugation by the block swap
        let n = 3;
        let mut swap = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            swap.set(i, n + i, Scalar::one());
            swap.set(n + i, i, Scalar::one());
        }
        let sk = pe_sk(3).unwrap();
        for m in &sy.matrices {
            let x = swap.mul(m).mul(&swap);
            assert!(sk.coords_of(&x).is_some());
        }
    }
}
