//! Lie superalgebras given by structure constants.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{
    sparse_axpy, sparse_scale, to_dense, to_sparse, Matrix, SparseMatrix, SparseVec, SubspaceCoords, Vector,
};
use crate::superspace::{Sdim, SuperSpace};

/// Structure constants `[b_i, b_j] = sum_k c_ij^k b_k` over a homogeneous weight basis.
#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    pub name: String,
    pub space: SuperSpace,
    table: Vec<Vec<SparseVec>>,
    /// Torus weight of each basis element.
    pub weights: Vec<Vector>,
    /// Names of the weight coordinates.
    pub weight_labels: Vec<String>,
    /// Cartan elements (coordinate vectors), informational.
    pub cartan: Vec<Vector>,
    /// Positive root vectors of the chosen Borel subalgebra.
    pub raising: Vec<Vector>,
}

impl LieSuperAlgebra {
    /// Builds from a full bracket table; checks shape and parity additivity.
    pub fn from_table(
        name: impl Into<String>,
        space: SuperSpace,
        table: Vec<Vec<SparseVec>>,
        weights: Vec<Vector>,
        weight_labels: Vec<String>,
    ) -> Result<LieSuperAlgebra> {
        let n = space.dim();
        if table.len() != n || table.iter().any(|r| r.len() != n) || weights.len() != n {
            return Err(Error::DimensionMismatch("bracket table shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let p = space.parity(i) ^ space.parity(j);
                if table[i][j].iter().any(|(k, _)| space.parity(*k) != p) {
                    return Err(Error::BadParams(format!(
                        "bracket of {} and {} is not parity-additive",
                        space.label(i),
                        space.label(j)
                    )));
                }
            }
        }
        Ok(LieSuperAlgebra { name: name.into(), space, table, weights, weight_labels, cartan: Vec::new(), raising: Vec::new() })
    }

    /// Abelian algebra on the given space.
    pub fn abelian(name: impl Into<String>, space: SuperSpace, weights: Vec<Vector>, weight_labels: Vec<String>) -> LieSuperAlgebra {
        let n = space.dim();
        LieSuperAlgebra {
            name: name.into(),
            space,
            table: vec![vec![Vec::new(); n]; n],
            weights,
            weight_labels,
            cartan: Vec::new(),
            raising: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sdim(&self) -> Sdim {
        self.space.sdim()
    }

    pub fn parity(&self, i: usize) -> bool {
        self.space.parity(i)
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    pub fn bracket_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let c = a * b;
                sparse_axpy(&mut acc, &c, &self.table[*i][*j]);
            }
        }
        acc
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("vectors of length {} and {} in an algebra of dimension {}", x.len(), y.len(), self.dim())));
        }
        Ok(to_dense(&self.bracket_sparse(&to_sparse(x), &to_sparse(y)), self.dim()))
    }

    /// Matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &SparseVec) -> SparseMatrix {
        let cols: Vec<SparseVec> = (0..self.dim())
            .map(|j| {
                let mut acc = Vec::new();
                for (i, a) in x {
                    sparse_axpy(&mut acc, a, &self.table[*i][j]);
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(&cols, self.dim())
    }

    pub fn ad_basis(&self, i: usize) -> SparseMatrix {
        self.ad(&vec![(i, Scalar::one())])
    }

    /// Basis pairs violating super-antisymmetry.
    pub fn check_antisymmetry(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s = if self.parity(i) && self.parity(j) { Scalar::one() } else { Scalar::int(-1) };
                if self.table[i][j] != sparse_scale(&self.table[j][i], &s) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Basis triples violating `[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]`.
    ///
    /// Exhaustive over ordered triples; empty means the table defines a Lie superalgebra
    /// (together with [`check_antisymmetry`](Self::check_antisymmetry)).
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        self.check_jacobi_where(|_, _, _| true)
    }

    /// [`check_jacobi`](Self::check_jacobi) restricted to the triples accepted by `keep`.
    pub fn check_jacobi_where(&self, keep: impl Fn(usize, usize, usize) -> bool + Sync) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad: Vec<(usize, usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut local = Vec::new();
                for j in 0..n {
                    let xy = &self.table[i][j];
                    let s = if self.parity(i) && self.parity(j) { Scalar::int(-1) } else { Scalar::one() };
                    for k in 0..n {
                        let (yz, xz) = (&self.table[j][k], &self.table[i][k]);
                        if (xy.is_empty() && yz.is_empty() && xz.is_empty()) || !keep(i, j, k) {
                            continue;
                        }
                        let mut lhs = Vec::new();
                        for (m, c) in yz {
                            sparse_axpy(&mut lhs, c, &self.table[i][*m]);
                        }
                        let mut rhs = Vec::new();
                        for (m, c) in xy {
                            sparse_axpy(&mut rhs, c, &self.table[*m][k]);
                        }
                        for (m, c) in xz {
                            sparse_axpy(&mut rhs, &(&s * c), &self.table[j][*m]);
                        }
                        if lhs != rhs {
                            local.push((i, j, k));
                        }
                    }
                }
                local
            })
            .collect();
        bad.extend(self.check_antisymmetry().into_iter().map(|(i, j)| (i, j, usize::MAX)));
        bad.sort();
        bad
    }

    /// Checks that the stored weights are additive under the bracket.
    pub fn check_weights(&self) -> Result<()> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let w: Vector = self.weights[i].iter().zip(&self.weights[j]).map(|(a, b)| a + b).collect();
                for (k, _) in &self.table[i][j] {
                    if self.weights[*k] != w {
                        return Err(Error::NonDiagonalizableAction(format!(
                            "[{}, {}] has a component along {} of a different weight",
                            self.label(i),
                            self.label(j),
                            self.label(*k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Subalgebra spanned by independent vectors; fails if not closed.
    pub fn subalgebra(&self, name: impl Into<String>, basis: &[Vector], labels: Vec<String>) -> Result<LieSuperAlgebra> {
        let n = self.dim();
        let coords = SubspaceCoords::new(basis, n);
        let mut parities = Vec::with_capacity(basis.len());
        let mut weights = Vec::with_capacity(basis.len());
        for v in basis {
            parities.push(self.space.vector_parity(v).ok_or_else(|| Error::BadParams("inhomogeneous subalgebra basis vector".into()))?);
            weights.push(self.weight_of(v)?);
        }
        let sparse: Vec<SparseVec> = basis.iter().map(|v| to_sparse(v)).collect();
        let mut table = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let b = self.bracket_sparse(&sparse[i], &sparse[j]);
                let c = coords
                    .coords_sparse(&b)
                    .ok_or_else(|| Error::BadParams(format!("span is not closed under the bracket ({}, {})", labels[i], labels[j])))?;
                table[i][j] = to_sparse(&c);
            }
        }
        let space = SuperSpace::new(labels, parities);
        let mut sub = LieSuperAlgebra::from_table(name, space, table, weights, self.weight_labels.clone())?;
        sub.cartan = self.cartan.iter().filter_map(|h| coords.coords(h)).collect();
        sub.raising = self.raising.iter().filter_map(|r| coords.coords(r)).collect();
        Ok(sub)
    }

    /// Quotient by an ideal; the complement is spanned by basis elements outside
    /// the pivot columns of the ideal's echelon basis.
    pub fn quotient(&self, name: impl Into<String>, ideal: &[Vector]) -> Result<LieSuperAlgebra> {
        let n = self.dim();
        let (rows, pivots) = crate::linalg::rref_rows(ideal.to_vec(), n);
        let keep: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let reduce = |v: &SparseVec| -> Vector {
            let d = crate::linalg::reduce_against(&to_dense(v, n), &rows, &pivots);
            keep.iter().map(|&j| d[j].clone()).collect()
        };
        // ideal check
        for r in &rows {
            let rs = to_sparse(r);
            for j in 0..n {
                let b = self.bracket_sparse(&rs, &vec![(j, Scalar::one())]);
                if !crate::linalg::is_zero_vec(&crate::linalg::reduce_against(&to_dense(&b, n), &rows, &pivots)) {
                    return Err(Error::BadParams("quotient by a subspace that is not an ideal".into()));
                }
            }
        }
        let mut table = vec![vec![Vec::new(); keep.len()]; keep.len()];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                table[a][b] = to_sparse(&reduce(&self.table[i][j]));
            }
        }
        let labels = keep.iter().map(|&j| self.label(j).to_string()).collect();
        let parities = keep.iter().map(|&j| self.parity(j)).collect();
        let weights = keep.iter().map(|&j| self.weights[j].clone()).collect();
        let mut q = LieSuperAlgebra::from_table(name, SuperSpace::new(labels, parities), table, weights, self.weight_labels.clone())?;
        q.cartan = self.cartan.iter().map(|h| reduce(&to_sparse(h))).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        q.raising = self.raising.iter().map(|h| reduce(&to_sparse(h))).filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        Ok(q)
    }

    /// Basis of `[g, g]` made of weight vectors of fixed parity.
    pub fn derived_basis(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut groups: std::collections::BTreeMap<(Vector, bool), Vec<Vector>> = std::collections::BTreeMap::new();
        for i in 0..n {
            for j in i..n {
                let b = &self.table[i][j];
                if b.is_empty() {
                    continue;
                }
                let w: Vec<Scalar> = self.weights[i].iter().zip(&self.weights[j]).map(|(a, c)| a + c).collect();
                groups.entry((w, self.parity(i) ^ self.parity(j))).or_default().push(to_dense(b, n));
            }
        }
        let mut out: Vec<Vector> = groups.values().flat_map(|vs| crate::linalg::span_basis(vs, n)).collect();
        out.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
        out
    }

    /// Weight of a vector that is a combination of basis elements of one weight.
    pub fn weight_of(&self, v: &[Scalar]) -> Result<Vector> {
        let mut w: Option<&Vector> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match w {
                None => w = Some(&self.weights[i]),
                Some(u) if u != &self.weights[i] => {
                    return Err(Error::NonDiagonalizableAction("vector is not a weight vector".into()))
                }
                _ => {}
            }
        }
        Ok(w.cloned().unwrap_or_else(|| vec![Scalar::zero(); self.weight_labels.len()]))
    }

    /// Basis element index by label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.space.labels().iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::linalg::unit_vec(self.dim(), i)
    }

    pub fn with_raising(mut self, raising: Vec<Vector>) -> LieSuperAlgebra {
        self.raising = raising;
        self
    }

    /// Direct sum with an abelian algebra spanned by extra even central elements.
    pub fn with_center(&self, name: impl Into<String>, labels: &[&str]) -> LieSuperAlgebra {
        let n = self.dim();
        let m = n + labels.len();
        let mut table = vec![vec![Vec::new(); m]; m];
        for (i, row) in self.table.iter().enumerate() {
            table[i][..n].clone_from_slice(row);
        }
        let mut space_labels = self.space.labels().to_vec();
        space_labels.extend(labels.iter().map(|s| s.to_string()));
        let mut parities = self.space.parities().to_vec();
        parities.extend(labels.iter().map(|_| false));
        let mut weights = self.weights.clone();
        weights.extend(labels.iter().map(|_| vec![Scalar::zero(); self.weight_labels.len()]));
        let pad = |v: &Vector| {
            let mut v = v.clone();
            v.resize(m, Scalar::zero());
            v
        };
        LieSuperAlgebra {
            name: name.into(),
            space: SuperSpace::new(space_labels, parities),
            table,
            weights,
            weight_labels: self.weight_labels.clone(),
            cartan: self.cartan.iter().map(pad).collect(),
            raising: self.raising.iter().map(pad).collect(),
        }
    }
}

/// A representation `rho` of a Lie superalgebra on a superspace.
#[derive(Clone, Debug)]
pub struct Representation {
    pub space: SuperSpace,
    /// `action[i]` is the matrix of `rho(b_i)`.
    pub action: Vec<SparseMatrix>,
    /// Torus weights of the module basis.
    pub weights: Vec<Vector>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis pairs `(i, j)` with `rho([b_i,b_j]) != [rho(b_i), rho(b_j)]`.
    pub fn check(&self, g: &LieSuperAlgebra) -> Vec<(usize, usize)> {
        let n = g.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let s = if g.parity(i) && g.parity(j) { Scalar::int(-1) } else { Scalar::one() };
                let rhs = self.action[i].mul(&self.action[j]).add_scaled(&(-&s), &self.action[j].mul(&self.action[i]));
                let mut lhs = SparseMatrix::zeros(self.dim(), self.dim());
                for (k, c) in g.bracket_basis(i, j) {
                    lhs = lhs.add_scaled(c, &self.action[*k]);
                }
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Elements of the algebra acting by zero.
    pub fn kernel(&self, g: &LieSuperAlgebra) -> Vec<Vector> {
        let d = self.dim();
        let n = g.dim();
        let rows: Vec<Vector> = (0..d * d)
            .map(|idx| (0..n).map(|i| self.action[i].get(idx / d, idx % d)).collect())
            .collect();
        crate::linalg::kernel_from_rows(rows, n)
    }

    pub fn is_faithful(&self, g: &LieSuperAlgebra) -> bool {
        self.kernel(g).is_empty()
    }

    pub fn act(&self, x: &SparseVec, v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, c) in x {
            let w = self.action[*i].mul_vec(v);
            for (o, y) in out.iter_mut().zip(w) {
                if !y.is_zero() {
                    *o += &(c * &y);
                }
            }
        }
        out
    }
}

/// Supertrace `sum (-1)^{p_i} A_ii`.
pub fn supertrace(a: &Matrix, par: &[bool]) -> Result<Scalar> {
    if a.nrows() != a.ncols() || a.nrows() != par.len() {
        return Err(Error::ShapeMismatch("supertrace needs a square matrix in the given format".into()));
    }
    Ok((0..par.len()).map(|i| if par[i] { -a.get(i, i) } else { a.get(i, i).clone() }).sum())
}

/// Queer trace of `(A B; B A)`: `tr B`.
pub fn queertrace(a: &Matrix) -> Result<Scalar> {
    let m = a.nrows();
    if m != a.ncols() || m % 2 == 1 {
        return Err(Error::ShapeMismatch("queer trace needs a 2n x 2n matrix".into()));
    }
    let n = m / 2;
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) != a.get(n + i, n + j) || a.get(i, n + j) != a.get(n + i, j) {
                return Err(Error::ShapeMismatch("matrix does not commute with J".into()));
            }
        }
    }
    Ok((0..n).map(|i| a.get(i, n + i).clone()).sum())
}

/// Supercommutator of homogeneous matrices.
pub fn supercommutator(x: &Matrix, px: bool, y: &Matrix, py: bool) -> Matrix {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if px && py {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieSuperAlgebra {
        // e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
        let s = |i: usize, c: i64| vec![(i, Scalar::int(c))];
        let mut t = vec![vec![Vec::new(); 3]; 3];
        t[1][0] = s(0, 2);
        t[0][1] = s(0, -2);
        t[1][2] = s(2, -2);
        t[2][1] = s(2, 2);
        t[0][2] = s(1, 1);
        t[2][0] = s(1, -1);
        let w = vec![vec![Scalar::int(2)], vec![Scalar::int(0)], vec![Scalar::int(-2)]];
        LieSuperAlgebra::from_table("sl(2)", SuperSpace::new(vec!["e".into(), "h".into(), "f".into()], vec![false; 3]), t, w, vec!["a".into()]).unwrap()
    }

    #[test]
    fn sl2_jacobi_and_corruption() {
        let g = sl2();
        assert!(g.check_jacobi().is_empty());
        g.check_weights().unwrap();
        let mut t = g.table().to_vec();
        t[0][2] = vec![(1, Scalar::int(2))];
        t[2][0] = vec![(1, Scalar::int(-2))];
        t[1][0] = vec![(0, Scalar::int(3))];
        t[0][1] = vec![(0, Scalar::int(-3))];
        let bad = LieSuperAlgebra::from_table("bad", g.space.clone(), t, g.weights.clone(), g.weight_labels.clone()).unwrap();
        assert!(!bad.check_jacobi().is_empty());
    }

    #[test]
    fn even_square_vanishes() {
        let g = sl2();
        let x = vec![Scalar::int(1), Scalar::int(3), Scalar::int(-2)];
        assert!(g.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
        assert!(g.bracket(&x, &[Scalar::one()]).is_err());
    }

    #[test]
    fn traces() {
        let par = [false, false, true];
        assert_eq!(supertrace(&Matrix::identity(3), &par).unwrap(), Scalar::int(1));
        let mut q = Matrix::zeros(4, 4);
        // B = 1_2
        q.set(0, 2, Scalar::one());
        q.set(1, 3, Scalar::one());
        q.set(2, 0, Scalar::one());
        q.set(3, 1, Scalar::one());
        assert_eq!(queertrace(&q).unwrap(), Scalar::int(2));
        assert!(queertrace(&Matrix::identity(3)).is_err());
    }
}
