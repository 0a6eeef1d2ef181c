//! Depth-one Z-gradings.

use std::collections::BTreeMap;

use crate::algebra::{LieSuperAlgebra, Representation};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, to_sparse, Matrix, SparseMatrix, SparseVec, SubspaceCoords, Vector};
use crate::superspace::{Sdim, SuperSpace};

/// A Lie superalgebra with a degree-homogeneous basis sorted by degree.
///
/// When `cutoff` is set the algebra is a truncation: brackets landing above the
/// cutoff were dropped, so identities only hold for total degree `<= cutoff`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub name: String,
    pub algebra: LieSuperAlgebra,
    pub degrees: Vec<i64>,
    pub cutoff: Option<i64>,
    pub grading_element: Option<Vector>,
}

impl GradedAlgebra {
    /// Wraps an algebra whose basis is already degree-homogeneous.
    pub fn new(name: impl Into<String>, algebra: LieSuperAlgebra, degrees: Vec<i64>, cutoff: Option<i64>) -> Result<GradedAlgebra> {
        if degrees.len() != algebra.dim() {
            return Err(Error::DimensionMismatch("one degree per basis element".into()));
        }
        let mut order: Vec<usize> = (0..degrees.len()).collect();
        order.sort_by_key(|&i| degrees[i]);
        let sorted = order.iter().enumerate().all(|(a, &b)| a == b);
        let (algebra, degrees) = if sorted {
            (algebra, degrees)
        } else {
            let n = algebra.dim();
            let basis: Vec<Vector> = order.iter().map(|&i| crate::linalg::unit_vec(n, i)).collect();
            let labels = order.iter().map(|&i| algebra.label(i).to_string()).collect();
            let sub = algebra.subalgebra(algebra.name.clone(), &basis, labels)?;
            (sub, order.iter().map(|&i| degrees[i]).collect())
        };
        if let Some(&d) = degrees.first() {
            if d < -1 {
                return Err(Error::DepthExceeded(d));
            }
        }
        Ok(GradedAlgebra { name: name.into(), algebra, degrees, cutoff, grading_element: None })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn max_degree(&self) -> i64 {
        self.degrees.last().copied().unwrap_or(-1)
    }

    /// Highest degree whose component is known exactly.
    pub fn known_degree(&self) -> i64 {
        self.cutoff.unwrap_or(i64::MAX)
    }

    /// Basis indices of the degree `d` component.
    pub fn component(&self, d: i64) -> std::ops::Range<usize> {
        let lo = self.degrees.partition_point(|&x| x < d);
        let hi = self.degrees.partition_point(|&x| x <= d);
        lo..hi
    }

    pub fn sdim(&self, d: i64) -> Sdim {
        let r = self.component(d);
        let odd = r.clone().filter(|&i| self.algebra.parity(i)).count();
        Sdim::new(r.len() - odd, odd)
    }

    /// `(degree, sdim)` for every nonempty component.
    pub fn sdim_table(&self) -> Vec<(i64, Sdim)> {
        let mut out: Vec<(i64, Sdim)> = Vec::new();
        for &d in &self.degrees {
            if out.last().map(|x| x.0) != Some(d) {
                out.push((d, self.sdim(d)));
            }
        }
        out
    }

    /// Raising operators that lie in degree zero, as basis-coordinate vectors.
    pub fn g0_raising(&self) -> Vec<Vector> {
        let z = self.component(0);
        self.algebra
            .raising
            .iter()
            .filter(|v| v.iter().enumerate().all(|(i, x)| x.is_zero() || z.contains(&i)))
            .cloned()
            .collect()
    }

    /// Basis pairs whose bracket leaves the expected degree.
    pub fn check_grading(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        let top = self.known_degree();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let d = self.degrees[i] + self.degrees[j];
                for (k, _) in self.algebra.bracket_basis(i, j) {
                    if self.degrees[*k] != d || d > top {
                        bad.push((i, j));
                        break;
                    }
                }
            }
        }
        bad
    }

    /// Jacobi violations among triples whose partial brackets all stay within the known range.
    pub fn check_jacobi_in_range(&self) -> Vec<(usize, usize, usize)> {
        match self.cutoff {
            None => self.algebra.check_jacobi(),
            Some(c) => {
                let d = &self.degrees;
                self.algebra.check_jacobi_where(|i, j, k| {
                    let (a, b, e) = (d[i], d[j], d[k]);
                    a + b <= c && b + e <= c && a + e <= c && a + b + e <= c
                })
            }
        }
    }

    pub fn g_minus_abelian(&self) -> bool {
        let r = self.component(-1);
        r.clone().all(|i| r.clone().all(|j| self.algebra.bracket_basis(i, j).is_empty()))
    }

    /// Degree-zero subalgebra.
    pub fn g0(&self) -> Result<LieSuperAlgebra> {
        let r = self.component(0);
        let n = self.dim();
        let basis: Vec<Vector> = r.clone().map(|i| crate::linalg::unit_vec(n, i)).collect();
        let labels = r.map(|i| self.algebra.label(i).to_string()).collect();
        self.algebra.subalgebra(format!("{}_0", self.name), &basis, labels)
    }

    /// Action of the degree-zero component on `g_{-1}`.
    pub fn g0_on_gm1(&self) -> Representation {
        let m = self.component(-1);
        let z = self.component(0);
        let space = SuperSpace::new(
            m.clone().map(|i| self.algebra.label(i).to_string()).collect(),
            m.clone().map(|i| self.algebra.parity(i)).collect(),
        );
        let action = z
            .map(|x| {
                let cols: Vec<SparseVec> = m
                    .clone()
                    .map(|j| self.algebra.bracket_basis(x, j).iter().map(|(k, c)| (k - m.start, c.clone())).collect())
                    .collect();
                SparseMatrix::from_columns(&cols, m.len())
            })
            .collect();
        Representation { space, action, weights: m.map(|i| self.algebra.weights[i].clone()).collect() }
    }

    /// Kernel of the `g_0`-action on `g_{-1}`, in `g_0` coordinates.
    pub fn g0_kernel_on_gm1(&self) -> Vec<Vector> {
        crate::classical::action_kernel(&self.g0_on_gm1().action, self.component(-1).len())
    }

    pub fn is_faithful(&self) -> bool {
        self.g0_kernel_on_gm1().is_empty()
    }

    /// Keeps only degrees `<= d`; the result is a truncation at `d`.
    pub fn truncate(&self, d: i64) -> Result<GradedAlgebra> {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] <= d).collect();
        if keep.len() == self.dim() {
            return Ok(self.clone());
        }
        let n = keep.len();
        let table: Vec<Vec<SparseVec>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.algebra.bracket_basis(i, j).iter().filter(|(k, _)| *k < n).cloned().collect()).collect())
            .collect();
        let space = SuperSpace::new(
            keep.iter().map(|&i| self.algebra.label(i).to_string()).collect(),
            keep.iter().map(|&i| self.algebra.parity(i)).collect(),
        );
        let weights = keep.iter().map(|&i| self.algebra.weights[i].clone()).collect();
        let mut alg = LieSuperAlgebra::from_table(self.algebra.name.clone(), space, table, weights, self.algebra.weight_labels.clone())?;
        let cut = |v: &Vector| v[..n].to_vec();
        alg.cartan = self.algebra.cartan.iter().map(cut).collect();
        alg.raising = self.algebra.raising.iter().filter(|v| v[n..].iter().all(Scalar::is_zero)).map(cut).collect();
        Ok(GradedAlgebra {
            name: self.name.clone(),
            algebra: alg,
            degrees: keep.iter().map(|&i| self.degrees[i]).collect(),
            cutoff: Some(self.cutoff.map_or(d, |c| c.min(d))),
            grading_element: self.grading_element.as_ref().map(cut),
        })
    }
}

/// Grades by the integer eigenvalues of `ad h`.
pub fn grade_by_element(g: &LieSuperAlgebra, h: &[Scalar]) -> Result<GradedAlgebra> {
    let n = g.dim();
    let ad = g.ad(&to_sparse(h)).to_dense();
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || ad.get(i, j).is_zero()));
    let mut spaces: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    if diagonal {
        for i in 0..n {
            let d = integer_of(ad.get(i, i))?;
            spaces.entry(d).or_default().push(crate::linalg::unit_vec(n, i));
        }
    } else {
        let bound = n as i64 + 1;
        let mut found = 0;
        for lam in -bound..=bound {
            let shifted = ad.sub(&Matrix::identity(n).scale(&Scalar::int(lam)));
            let ker = kernel_basis(&shifted);
            if !ker.is_empty() {
                found += ker.len();
                spaces.insert(lam, ker);
            }
        }
        if found != n {
            return Err(Error::NotDiagonalizable(format!("ad h on {} has non-integer or missing eigenvalues", g.name)));
        }
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    let mut labels = Vec::new();
    for (lam, vs) in &spaces {
        for v in vs {
            labels.push(match v.iter().position(|x| !x.is_zero()) {
                Some(i) if v.iter().filter(|x| !x.is_zero()).count() == 1 => g.label(i).to_string(),
                _ => format!("v{}", labels.len()),
            });
            basis.push(v.clone());
            degrees.push(*lam);
        }
    }
    if let Some(&d) = degrees.first() {
        if d < -1 {
            return Err(Error::DepthExceeded(d));
        }
    }
    let sub = g.subalgebra(g.name.clone(), &basis, labels)?;
    let coords = SubspaceCoords::new(&basis, n);
    let mut out = GradedAlgebra::new(g.name.clone(), sub, degrees, None)?;
    out.grading_element = coords.coords(h);
    Ok(out)
}

/// Grades by a linear functional of the weight: `deg b = <c, wt(b)>`.
pub fn grade_by_weight(g: &LieSuperAlgebra, functional: &[Scalar]) -> Result<GradedAlgebra> {
    let n = g.dim();
    let mut degrees = Vec::with_capacity(n);
    for w in &g.weights {
        let d: Scalar = w.iter().zip(functional).map(|(a, b)| a * b).sum();
        degrees.push(integer_of(&d)?);
    }
    GradedAlgebra::new(g.name.clone(), g.clone(), degrees, None)
}

/// Grades by explicitly given basis degrees.
pub fn grade_by_degrees(g: &LieSuperAlgebra, degrees: Vec<i64>) -> Result<GradedAlgebra> {
    GradedAlgebra::new(g.name.clone(), g.clone(), degrees, None)
}

fn integer_of(x: &Scalar) -> Result<i64> {
    let r = x.as_rational().ok_or_else(|| Error::NotDiagonalizable(format!("eigenvalue {x} is not rational")))?;
    if !r.is_integer() {
        return Err(Error::NotDiagonalizable(format!("eigenvalue {x} is not an integer")));
    }
    r.to_integer().try_into().map_err(|_| Error::NotDiagonalizable(format!("eigenvalue {x} out of range")))
}

/// Depth-one grading of `psq(n)` with `g_0 = ps(q(p) + q(n-p))`.
///
/// The block `Hom(C^{p|p}, C^{n-p|n-p})` splits under `g_0` into the eigenspaces of
/// `T(X) = (-1)^{p(X)} J X J^{-1}`; `plus` selects `T = 1` (the part inside `psq(n)`).
pub fn psq_depth_one(n: usize, p: usize, plus: bool) -> Result<crate::prolong::ProlongInput> {
    use crate::algebra::supercommutator;
    use crate::classical::{flatten, label_for, psq_with_lifts, queer_j};
    if p == 0 || p >= n {
        return Err(Error::BadParams(format!("psq({n}) grading needs 0 < p < n, got p = {p}")));
    }
    let (alg, lifts) = psq_with_lifts(n)?;
    let degree = |w: &Vector| -> Scalar { w[..p].iter().cloned().sum() };
    let g0_idx: Vec<usize> = (0..alg.dim()).filter(|&i| degree(&alg.weights[i]).is_zero()).collect();
    let g0_basis: Vec<Vector> = g0_idx.iter().map(|&i| alg.basis_vector(i)).collect();
    let g0_labels = g0_idx.iter().map(|&i| alg.label(i).to_string()).collect();
    let g0 = alg.subalgebra(format!("ps(q({p})+q({}))", n - p), &g0_basis, g0_labels)?;

    let dim = 2 * n;
    let j = queer_j(n);
    let jinv = j.scale(&Scalar::int(-1));
    let sign = if plus { Scalar::one() } else { Scalar::int(-1) };
    let mut basis: Vec<Matrix> = Vec::new();
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    // one weight space per (row, column) pair of the block, in both parities
    for a in p..n {
        for b in 0..p {
            for par in [false, true] {
                let units: Vec<(usize, usize)> =
                    if par { vec![(a, n + b), (n + a, b)] } else { vec![(a, b), (n + a, n + b)] };
                let images: Vec<Vector> = units
                    .iter()
                    .map(|&(r, c)| {
                        let mut x = Matrix::zeros(dim, dim);
                        x.set(r, c, Scalar::one());
                        let mut t = j.mul(&x).mul(&jinv);
                        if par {
                            t = t.scale(&Scalar::int(-1));
                        }
                        flatten(&t.sub(&x.scale(&sign)))
                    })
                    .collect();
                let rows: Vec<Vector> = (0..dim * dim).map(|e| images.iter().map(|v| v[e].clone()).collect()).collect();
                for v in crate::linalg::kernel_from_rows(rows, units.len()) {
                    let mut x = Matrix::zeros(dim, dim);
                    for (c, &(r, col)) in v.iter().zip(&units) {
                        x.set(r, col, c.clone());
                    }
                    basis.push(x);
                    parities.push(par);
                    let mut w = vec![Scalar::zero(); n];
                    w[a] = Scalar::one();
                    w[b] = Scalar::int(-1);
                    weights.push(w);
                }
            }
        }
    }
    let module_labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).chain((1..=n).map(|i| format!("f{i}"))).collect();
    let labels: Vec<String> = basis.iter().map(|x| label_for(x, &module_labels)).collect();
    let flat: Vec<Vector> = basis.iter().map(flatten).collect();
    let coords = SubspaceCoords::new(&flat, dim * dim);
    let mut action = Vec::with_capacity(g0_idx.len());
    for &i in &g0_idx {
        let a = &lifts[i];
        let pa = alg.parity(i);
        let mut cols = Vec::with_capacity(basis.len());
        for (x, &px) in basis.iter().zip(&parities) {
            let c = supercommutator(a, pa, x, px);
            let v = coords.coords(&flatten(&c)).ok_or_else(|| Error::BadParams("block is not g_0-stable".into()))?;
            cols.push(to_sparse(&v));
        }
        action.push(SparseMatrix::from_columns(&cols, basis.len()));
    }
    let name = format!("psq({n}):p={p}{}", if plus { "+" } else { "-" });
    Ok(crate::prolong::ProlongInput { name, gm1: SuperSpace::new(labels, parities), gm1_weights: weights, g0, action })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;

    #[test]
    fn grassmannian_gl4() {
        let g = classical::sl(4, 0).unwrap();
        let gr = grade_by_weight(&g.algebra, &[0, 0, 1, 1].map(Scalar::int)).unwrap();
        assert_eq!(gr.sdim(-1), Sdim::new(4, 0));
        assert_eq!(gr.sdim(0), Sdim::new(7, 0));
        assert_eq!(gr.sdim(1), Sdim::new(4, 0));
        assert!(gr.check_grading().is_empty());
        assert!(gr.g_minus_abelian());
        assert!(gr.is_faithful());
    }

    #[test]
    fn by_element_matches_by_weight() {
        let g = classical::gl(2, 1).unwrap();
        let h = g.coords_of(&{
            let mut m = Matrix::zeros(3, 3);
            m.set(0, 0, Scalar::one());
            m
        });
        let gr = grade_by_element(&g.algebra, &h.unwrap()).unwrap();
        let gw = grade_by_weight(&g.algebra, &[1, 0, 0].map(Scalar::int)).unwrap();
        assert_eq!(gr.sdim_table(), gw.sdim_table());
        assert_eq!(gr.sdim(-1), Sdim::new(1, 1));
    }

    #[test]
    fn central_element_single_component() {
        let g = classical::gl(2, 0).unwrap();
        let id = g.coords_of(&Matrix::identity(2)).unwrap();
        let gr = grade_by_element(&g.algebra, &id).unwrap();
        assert_eq!(gr.sdim_table(), vec![(0, Sdim::new(4, 0))]);
    }

    #[test]
    fn depth_two_rejected() {
        let g = classical::gl(3, 0).unwrap();
        let r = grade_by_weight(&g.algebra, &[2, 1, 0].map(Scalar::int));
        assert!(matches!(r, Err(Error::DepthExceeded(-2))));
    }
}
