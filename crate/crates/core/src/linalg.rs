//! Exact dense and sparse linear algebra over [`Scalar`].

use std::fmt;

use crate::field::Scalar;

pub type Vector = Vec<Scalar>;

/// Sparse vector: strictly increasing indices, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vector {
    let mut out = zero_vec(n);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `acc += c * v` on a sparse accumulator kept sorted.
pub fn sparse_axpy(acc: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    if c.is_zero() || v.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(acc.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < v.len() {
        if j >= v.len() || (i < acc.len() && acc[i].0 < v[j].0) {
            out.push(acc[i].clone());
            i += 1;
        } else if i >= acc.len() || v[j].0 < acc[i].0 {
            out.push((v[j].0, c * &v[j].1));
            j += 1;
        } else {
            let s = &acc[i].1 + &(c * &v[j].1);
            if !s.is_zero() {
                out.push((acc[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    *acc = out;
}

pub fn sparse_scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// Collects `(index, coefficient)` terms, merging duplicates and dropping zeros.
pub fn sparse_from_terms(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    terms.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, x) in terms {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Scalar) {
        self.data[i * self.cols + j] += x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: (0..self.rows).map(|i| to_sparse(self.row(i))).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row-wise sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_rows(data: Vec<SparseVec>, cols: usize) -> SparseMatrix {
        SparseMatrix { rows: data.len(), cols, data }
    }

    /// Builds from columns given as sparse vectors.
    pub fn from_columns(columns: &[SparseVec], rows: usize) -> SparseMatrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c {
                data[*i].push((j, x.clone()));
            }
        }
        SparseMatrix { rows, cols: columns.len(), data }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, Scalar)>) -> SparseMatrix {
        let mut per_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, x) in triplets {
            assert!(i < rows && j < cols, "triplet out of bounds");
            per_row[i].push((j, x));
        }
        SparseMatrix { rows, cols, data: per_row.into_iter().map(sparse_from_terms).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        self.data[i]
            .binary_search_by_key(&j, |t| t.0)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                data[*j].push((i, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        self.data
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        acc += &(a * &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_sparse_vec(&self, v: &SparseVec) -> SparseVec {
        let t = self.transpose();
        let mut acc: SparseVec = Vec::new();
        for (j, x) in v {
            sparse_axpy(&mut acc, x, &t.data[*j]);
        }
        acc
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: SparseVec = Vec::new();
                for (k, a) in row {
                    sparse_axpy(&mut acc, a, &other.data[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn add_scaled(&self, c: &Scalar, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc = a.clone();
                sparse_axpy(&mut acc, c, b);
                acc
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.data.iter().map(|r| to_dense(r, self.cols)).collect(), self.cols).1.len()
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Matrix,
}

/// Gauss-Jordan elimination of a row list in place; returns the nonzero rows and pivots.
pub fn rref_rows(mut rows: Vec<Vector>, cols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                let t = &f * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Reduced row-echelon form. Pivot rule: first nonzero column, first nonzero row.
pub fn rref(m: &Matrix) -> Rref {
    let (rows, pivots) = rref_rows(m.rows_vec(), m.ncols());
    let rank = rows.len();
    let mut reduced = Matrix::zeros(m.nrows(), m.ncols());
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            if !x.is_zero() {
                reduced.set(i, j, x);
            }
        }
    }
    Rref { rank, pivots, reduced }
}

pub fn rank(m: &Matrix) -> usize {
    rref_rows(m.rows_vec(), m.ncols()).1.len()
}

pub fn rank_of_vectors(vs: &[Vector], dim: usize) -> usize {
    rref_rows(vs.to_vec(), dim).1.len()
}

/// Null space basis; one vector per free column, with a 1 in that column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    kernel_from_rows(m.rows_vec(), m.ncols())
}

pub fn kernel_from_rows(rows: Vec<Vector>, cols: usize) -> Vec<Vector> {
    let (red, pivots) = rref_rows(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = zero_vec(cols);
        v[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            let x = &red[r][f];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        out.push(v);
    }
    out
}

/// Reduced echelon basis of the span of `vs`.
pub fn span_basis(vs: &[Vector], dim: usize) -> Vec<Vector> {
    rref_rows(vs.to_vec(), dim).0
}

/// Basis of the intersection of two subspaces of a common ambient space.
pub fn intersect(a: &[Vector], b: &[Vector], dim: usize) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = (span_basis(a, dim), span_basis(b, dim));
    let na = a.len();
    // columns: a_1..a_na, b_1..b_nb; rows: ambient coordinates
    let rows: Vec<Vector> = (0..dim)
        .map(|i| a.iter().map(|v| v[i].clone()).chain(b.iter().map(|v| -&v[i])).collect())
        .collect();
    let ker = kernel_from_rows(rows, na + b.len());
    let vs: Vec<Vector> = ker
        .iter()
        .map(|k| {
            let mut v = zero_vec(dim);
            for (c, av) in k[..na].iter().zip(&a) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(av) {
                    if !y.is_zero() {
                        *x += &(c * y);
                    }
                }
            }
            v
        })
        .collect();
    span_basis(&vs, dim)
}

/// Some solution of `m x = b`, if one exists.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(m.nrows(), b.len());
    let cols = m.ncols();
    let rows: Vec<Vector> = (0..m.nrows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref_rows(rows, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = zero_vec(cols);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red[r][cols].clone();
    }
    Some(x)
}

/// Coordinates with respect to a fixed linearly independent list of vectors.
#[derive(Clone, Debug)]
pub struct SubspaceCoords {
    dim: usize,
    reduced: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vector>,
    len: usize,
}

impl SubspaceCoords {
    /// Panics if `basis` is linearly dependent.
    pub fn new(basis: &[Vector], dim: usize) -> SubspaceCoords {
        let n = basis.len();
        let rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert_eq!(v.len(), dim);
                let mut r = v.clone();
                r.extend(unit_vec(n, i));
                r
            })
            .collect();
        let (red, pivots) = rref_rows(rows, dim + n);
        assert!(
            pivots.len() == n && pivots.last().is_none_or(|&p| p < dim),
            "SubspaceCoords basis is linearly dependent"
        );
        let reduced = red.iter().map(|r| r[..dim].to_vec()).collect();
        let transform = red.iter().map(|r| r[dim..].to_vec()).collect();
        SubspaceCoords { dim, reduced, pivots, transform, len: n }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `v`, or `None` when `v` lies outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let mut w = v.to_vec();
        let mut c = zero_vec(self.len);
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(&self.reduced[r]) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in c.iter_mut().zip(&self.transform[r]) {
                if !y.is_zero() {
                    *x += &(&f * y);
                }
            }
        }
        if is_zero_vec(&w) {
            Some(c)
        } else {
            None
        }
    }

    pub fn coords_sparse(&self, v: &SparseVec) -> Option<Vector> {
        self.coords(&to_dense(v, self.dim))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }
}

/// A quotient `Z / B` of nested subspaces with a canonical complement basis.
///
/// Representatives are reduced against the echelon basis of `B` and then put in
/// echelon form themselves, so they are deterministic.
#[derive(Clone, Debug)]
pub struct Quotient {
    dim: usize,
    sub: Vec<Vector>,
    sub_pivots: Vec<usize>,
    reps: Vec<Vector>,
    rep_pivots: Vec<usize>,
}

impl Quotient {
    pub fn new(z: &[Vector], b: &[Vector], dim: usize) -> Quotient {
        let (sub, sub_pivots) = rref_rows(b.to_vec(), dim);
        let reduced: Vec<Vector> = z.iter().map(|v| reduce_against(v, &sub, &sub_pivots)).collect();
        let (reps, rep_pivots) = rref_rows(reduced, dim);
        Quotient { dim, sub, sub_pivots, reps, rep_pivots }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn representatives(&self) -> &[Vector] {
        &self.reps
    }

    pub fn sub_basis(&self) -> &[Vector] {
        &self.sub
    }

    /// Coordinates of the class of `v`; `v` must lie in `Z`.
    pub fn class_coords(&self, v: &[Scalar]) -> Vector {
        let w = reduce_against(v, &self.sub, &self.sub_pivots);
        let c: Vector = self.rep_pivots.iter().map(|&p| w[p].clone()).collect();
        debug_assert!({
            let mut back = w.clone();
            for (ci, r) in c.iter().zip(&self.reps) {
                for (x, y) in back.iter_mut().zip(r) {
                    *x -= &(ci * y);
                }
            }
            is_zero_vec(&back)
        });
        c
    }

    /// True when `v` lies in the subspace being divided out.
    pub fn is_trivial(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&reduce_against(v, &self.sub, &self.sub_pivots))
    }
}

/// Eliminates the pivot coordinates of an echelon basis from `v`.
pub fn reduce_against(v: &[Scalar], basis: &[Vector], pivots: &[usize]) -> Vector {
    let mut w = v.to_vec();
    for (r, &p) in pivots.iter().enumerate() {
        if w[p].is_zero() {
            continue;
        }
        let f = w[p].clone();
        for (x, y) in w.iter_mut().zip(&basis[r]) {
            if !y.is_zero() {
                *x -= &(&f * y);
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let r = rref(&Matrix::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        let r = rref(&Matrix::zeros(2, 4));
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&mat(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced, mat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(4)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&mat(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(k, vec![vec![Scalar::int(-1), Scalar::int(1), Scalar::int(0)]]);
    }

    #[test]
    fn intersections() {
        let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vector>();
        let a = vec![e(&[1, 0, 0]), e(&[0, 1, 0])];
        assert_eq!(intersect(&a, &a, 3).len(), 2);
        assert!(intersect(&[e(&[1, 0])], &[e(&[1, 1])], 2).is_empty());
        let b = vec![e(&[0, 1, 1]), e(&[1, 0, 1])];
        let i = intersect(&a, &b, 3);
        assert_eq!(i.len(), 1);
        // (1,-1,0) = (1,0,1) - (0,1,1)
        assert_eq!(i[0], e(&[1, -1, 0]));
    }

    #[test]
    fn coords_round_trip() {
        let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vector>();
        let basis = vec![e(&[1, 2, 0]), e(&[0, 1, 1])];
        let sc = SubspaceCoords::new(&basis, 3);
        assert_eq!(sc.coords(&e(&[2, 7, 3])), Some(e(&[2, 3])));
        assert_eq!(sc.coords(&e(&[0, 0, 1])), None);
    }

    #[test]
    fn quotient_representatives() {
        let e = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vector>();
        let z = vec![e(&[1, 0, 0]), e(&[0, 1, 0])];
        let b = vec![e(&[1, 1, 0])];
        let q = Quotient::new(&z, &b, 3);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.representatives()[0], e(&[0, 1, 0]));
        assert_eq!(q.class_coords(&e(&[1, 0, 0])), e(&[-1]));
        assert!(q.is_trivial(&e(&[2, 2, 0])));
    }

    #[test]
    fn sparse_dense_agree() {
        let m = mat(&[&[1, 0, 2], &[0, 3, 0]]);
        let s = m.to_sparse();
        let v = vec![Scalar::int(1), Scalar::int(2), Scalar::int(3)];
        assert_eq!(s.mul_vec(&v), m.mul_vec(&v));
        assert_eq!(s.to_dense(), m);
        assert_eq!(s.transpose().to_dense(), m.transpose());
        assert_eq!(s.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, 16).prop_map(|v| {
            let rows: Vec<Vector> = v.chunks(4).map(|c| c.iter().map(|&x| Scalar::int(x)).collect()).collect();
            Matrix::from_rows(rows, 4)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let r = rank(&m);
            let k = kernel_basis(&m);
            prop_assert_eq!(r + k.len(), m.ncols());
            for v in &k {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
            prop_assert_eq!(rank_of_vectors(&k, 4), k.len());
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let once = rref(&m).reduced;
            let twice = rref(&once).reduced;
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn intersection_dimension(a in small_matrix(), b in small_matrix()) {
            let av = span_basis(&a.rows_vec()[..2], 4);
            let bv = span_basis(&b.rows_vec()[..3], 4);
            let i = intersect(&av, &bv, 4);
            let mut sum = av.clone();
            sum.extend(bv.iter().cloned());
            let ds = rank_of_vectors(&sum, 4);
            prop_assert_eq!(i.len() + ds, av.len() + bv.len());
            if !av.is_empty() && !bv.is_empty() {
                let ca = SubspaceCoords::new(&av, 4);
                let cb = SubspaceCoords::new(&bv, 4);
                for v in &i {
                    prop_assert!(ca.contains(v) && cb.contains(v));
                }
            }
        }
    }
}
