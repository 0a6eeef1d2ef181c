//! Superspaces and the Sign Rule.
//!
//! All reordering signs in the crate come from [`koszul_sign`]. Conventions are
//! collected in `SIGNS.md` at the repository root.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_from_rows, Matrix, SparseMatrix, Vector};

/// Super dimension `even|odd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Sdim {
    pub even: usize,
    pub odd: usize,
}

impl serde::Serialize for Sdim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.even, self.odd].serialize(s)
    }
}

impl Sdim {
    pub fn new(even: usize, odd: usize) -> Sdim {
        Sdim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    /// Product in Z[e]/(e^2 - 1).
    pub fn times(&self, o: &Sdim) -> Sdim {
        Sdim::new(self.even * o.even + self.odd * o.odd, self.even * o.odd + self.odd * o.even)
    }

    pub fn plus(&self, o: &Sdim) -> Sdim {
        Sdim::new(self.even + o.even, self.odd + o.odd)
    }

    pub fn shift(&self) -> Sdim {
        Sdim::new(self.odd, self.even)
    }

    pub fn shift_by(&self, n: usize) -> Sdim {
        if n % 2 == 1 {
            self.shift()
        } else {
            *self
        }
    }
}

impl std::fmt::Display for Sdim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// Sign of reordering parity-tagged slots: the new sequence lists old slots
/// `perm[0], perm[1], ...`. Returns `true` when the sign is `-1`.
pub fn koszul_sign(parities: &[bool], perm: &[usize]) -> bool {
    let mut neg = false;
    for a in 0..perm.len() {
        if !parities[perm[a]] {
            continue;
        }
        for b in a + 1..perm.len() {
            if parities[perm[b]] && perm[a] > perm[b] {
                neg = !neg;
            }
        }
    }
    neg
}

/// Sign for moving an object of parity `p` past objects of parity `q`.
pub fn swap_sign(p: bool, q: bool) -> bool {
    p && q
}

/// A finite-dimensional superspace given by an ordered homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<bool>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parities: Vec<bool>) -> SuperSpace {
        assert_eq!(labels.len(), parities.len());
        SuperSpace { labels, parities }
    }

    /// Standard format: `p` even vectors followed by `q` odd ones.
    pub fn standard(p: usize, q: usize) -> SuperSpace {
        let labels = (0..p + q).map(|i| format!("e{}", i + 1)).collect();
        let parities = (0..p + q).map(|i| i >= p).collect();
        SuperSpace { labels, parities }
    }

    pub fn from_parities(parities: Vec<bool>) -> SuperSpace {
        let labels = (0..parities.len()).map(|i| format!("e{}", i + 1)).collect();
        SuperSpace { labels, parities }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn sdim(&self) -> Sdim {
        let odd = self.parities.iter().filter(|&&p| p).count();
        Sdim::new(self.dim() - odd, odd)
    }

    pub fn parity(&self, i: usize) -> bool {
        self.parities[i]
    }

    pub fn parities(&self) -> &[bool] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dual space with basis `e_i'`, same parities.
    pub fn dual(&self) -> SuperSpace {
        SuperSpace {
            labels: self.labels.iter().map(|l| dual_label(l)).collect(),
            parities: self.parities.clone(),
        }
    }

    pub fn parity_shift(&self) -> SuperSpace {
        SuperSpace {
            labels: self.labels.iter().map(|l| format!("Pi({l})")).collect(),
            parities: self.parities.iter().map(|p| !p).collect(),
        }
    }

    /// Basis `e_i (x) f_j` in lexicographic order.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut parities = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                labels.push(format!("{}*{}", self.labels[i], other.labels[j]));
                parities.push(self.parities[i] ^ other.parities[j]);
            }
        }
        SuperSpace { labels, parities }
    }

    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut parities = self.parities.clone();
        parities.extend(other.parities.iter().copied());
        SuperSpace { labels, parities }
    }

    /// Parity of a coordinate vector, `None` if inhomogeneous (zero counts as even).
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<bool> {
        let mut found: Option<bool> = None;
        for (x, &p) in v.iter().zip(&self.parities) {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(false))
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('\'') {
        Some(base) => base.to_string(),
        None => format!("{l}'"),
    }
}

/// Homogeneous or mixed vector in a superspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVector {
    pub coords: Vector,
    pub parity: Option<bool>,
}

impl SuperVector {
    pub fn new(space: &SuperSpace, coords: Vector) -> Result<SuperVector> {
        if coords.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!("{} coordinates for a space of dimension {}", coords.len(), space.dim())));
        }
        let parity = space.vector_parity(&coords);
        Ok(SuperVector { coords, parity })
    }

    pub fn basis(space: &SuperSpace, i: usize) -> SuperVector {
        let mut coords = vec![Scalar::zero(); space.dim()];
        coords[i] = Scalar::one();
        SuperVector { coords, parity: Some(space.parity(i)) }
    }
}

/// Pairing `<f, v>` of a dual vector with a vector, no extra sign.
pub fn pairing(f: &[Scalar], v: &[Scalar]) -> Scalar {
    f.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
}

/// Pairing between `Pi(V*)` and `Pi(V)`. The two shifts are identified so that
/// `<Pi(e_i'), Pi(e_j)> = delta_ij`; this is the only constant-sign choice that is
/// invariant under applying the shift twice.
pub fn shifted_pairing(f: &[Scalar], v: &[Scalar]) -> Scalar {
    pairing(f, v)
}

/// Value of `(f_1 (x) ... (x) f_k)` on `(v_1 (x) ... (x) v_k)` for basis tensors,
/// following the Sign Rule (each `f_a` moves past `v_b` for `b < a`).
pub fn tensor_pairing_sign(f_par: &[bool], v_par: &[bool]) -> bool {
    let mut neg = false;
    for a in 0..f_par.len() {
        for b in 0..a {
            neg ^= f_par[a] && v_par[b];
        }
    }
    neg
}

/// Matrix of the identification `V*(x)W* -> (V(x)W)*` in the lexicographic bases:
/// `e_i' (x) f_j'` maps to `(-1)^{p(e_i)p(f_j)} (e_i (x) f_j)'`.
pub fn dual_tensor_identification(v: &SuperSpace, w: &SuperSpace) -> SparseMatrix {
    let n = v.dim() * w.dim();
    let mut t = Vec::with_capacity(n);
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            let k = i * w.dim() + j;
            let s = if v.parity(i) && w.parity(j) { Scalar::int(-1) } else { Scalar::one() };
            t.push((k, k, s));
        }
    }
    SparseMatrix::from_triplets(n, n, t)
}

/// Symmetric or exterior power with a multiset basis and its embedding into `V^{(x)k}`.
#[derive(Clone, Debug)]
pub struct Power {
    pub space: SuperSpace,
    /// Sorted index multisets; odd generators (after the shift for exterior powers) repeat at most once.
    pub multisets: Vec<Vec<usize>>,
    /// Columns: images of multiset basis elements in `V^{(x)k}` (dimension `dim V ^ k`).
    pub embedding: SparseMatrix,
}

impl Power {
    pub fn sdim(&self) -> Sdim {
        self.space.sdim()
    }

    pub fn index_of(&self, ms: &[usize]) -> Option<usize> {
        self.multisets.binary_search_by(|m| m.as_slice().cmp(ms)).ok()
    }
}

/// Sorted multisets of size `k` from `0..n`; entries flagged `odd` appear at most once.
pub fn multisets(n: usize, k: usize, odd: &[bool]) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, odd: &[bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if odd[i] && cur.last() == Some(&i) {
                continue;
            }
            cur.push(i);
            rec(i, n, k, odd, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, odd, &mut Vec::new(), &mut out);
    out
}

/// All distinct orderings of a sorted multiset, each with the reordering
/// permutation (positions into the sorted list).
fn distinct_orderings(ms: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn rec(ms: &[usize], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        if cur.len() == ms.len() {
            out.push((cur.iter().map(|&p| ms[p]).collect(), cur.clone()));
            return;
        }
        for p in 0..ms.len() {
            if used[p] {
                continue;
            }
            // take equal entries in order only, so each distinct word appears once
            if p > 0 && ms[p] == ms[p - 1] && !used[p - 1] {
                continue;
            }
            used[p] = true;
            cur.push(p);
            rec(ms, used, cur, out);
            cur.pop();
            used[p] = false;
        }
    }
    let mut out = Vec::new();
    rec(ms, &mut vec![false; ms.len()], &mut Vec::new(), &mut out);
    out
}

fn power(v: &SuperSpace, k: usize, gen_odd: &[bool], exterior: bool) -> Power {
    let n = v.dim();
    let sets = multisets(n, k, gen_odd);
    let tdim = n.pow(k as u32);
    let mut labels = Vec::with_capacity(sets.len());
    let mut parities = Vec::with_capacity(sets.len());
    let mut columns = Vec::with_capacity(sets.len());
    let sep = if exterior { "^" } else { "." };
    for ms in &sets {
        labels.push(if ms.is_empty() {
            "1".to_string()
        } else {
            ms.iter().map(|&i| v.label(i).to_string()).collect::<Vec<_>>().join(sep)
        });
        parities.push(ms.iter().fold(false, |acc, &i| acc ^ v.parity(i)));
        let slot_par: Vec<bool> = ms.iter().map(|&i| gen_odd[i]).collect();
        let mut col = Vec::new();
        for (word, perm) in distinct_orderings(ms) {
            let idx = word.iter().fold(0usize, |acc, &i| acc * n + i);
            let s = if koszul_sign(&slot_par, &perm) { Scalar::int(-1) } else { Scalar::one() };
            col.push((idx, s));
        }
        col.sort_by_key(|t| t.0);
        columns.push(col);
    }
    Power {
        space: SuperSpace::new(labels, parities),
        multisets: sets,
        embedding: SparseMatrix::from_columns(&columns, tdim),
    }
}

/// `S^k(V)`: supersymmetric tensors, transposition of slots of parities `p, q` carries `(-1)^{pq}`.
pub fn sym_power(v: &SuperSpace, k: usize) -> Power {
    power(v, k, v.parities(), false)
}

/// `Lambda^k(V)`, defined as `S^k(Pi V)` transported back: generators have
/// parity `p_i + 1` for reordering purposes, and the basis element
/// `e_I` has parity `sum p_i`.
pub fn ext_power(v: &SuperSpace, k: usize) -> Power {
    let shifted: Vec<bool> = v.parities().iter().map(|p| !p).collect();
    power(v, k, &shifted, true)
}

/// Supersymmetric tensors in `V^{(x)k}` computed from the definition: the joint
/// fixed space of all signed adjacent transpositions.
pub fn symmetric_tensors(v: &SuperSpace, k: usize) -> Vec<Vector> {
    tensors_fixed_by_transpositions(v.dim(), k, v.parities())
}

/// Fixed space of signed adjacent transpositions where slots have parities `gen_odd`.
pub fn tensors_fixed_by_transpositions(n: usize, k: usize, gen_odd: &[bool]) -> Vec<Vector> {
    let tdim = n.pow(k as u32);
    let mut rows: Vec<Vector> = Vec::new();
    for pos in 0..k.saturating_sub(1) {
        for idx in 0..tdim {
            let word = unflatten(idx, n, k);
            let (a, b) = (word[pos], word[pos + 1]);
            let mut sw = word.clone();
            sw.swap(pos, pos + 1);
            let jdx = flatten(&sw, n);
            if jdx <= idx && a != b {
                continue;
            }
            // condition: t[sw] = sign * t[word]
            let sign = if gen_odd[a] && gen_odd[b] { Scalar::int(-1) } else { Scalar::one() };
            let mut row = vec![Scalar::zero(); tdim];
            row[jdx] += &Scalar::one();
            row[idx] -= &sign;
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    kernel_from_rows(rows, tdim)
}

fn unflatten(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut w = vec![0; k];
    for p in (0..k).rev() {
        w[p] = idx % n;
        idx /= n;
    }
    w
}

fn flatten(w: &[usize], n: usize) -> usize {
    w.iter().fold(0, |acc, &i| acc * n + i)
}

/// Parity of a matrix in format `par`, `None` when not homogeneous (zero is even).
pub fn matrix_parity(a: &Matrix, par: &[bool]) -> Option<bool> {
    let mut found = None;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if a.get(i, j).is_zero() {
                continue;
            }
            let p = par[i] ^ par[j];
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
    }
    Some(found.unwrap_or(false))
}

/// `(A^st)_ij = (-1)^{(p_i + p_j)(p_i + p(A))} A_ji`.
pub fn supertranspose(a: &Matrix, par: &[bool]) -> Result<Matrix> {
    if a.nrows() != a.ncols() || a.nrows() != par.len() {
        return Err(Error::ShapeMismatch("supertranspose needs a square matrix in the given format".into()));
    }
    let pa = matrix_parity(a, par).ok_or(Error::MixedParityMatrix)?;
    let n = par.len();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = a.get(j, i);
            if x.is_zero() {
                continue;
            }
            let neg = (par[i] ^ par[j]) && (par[i] ^ pa);
            out.set(i, j, if neg { -x } else { x.clone() });
        }
    }
    Ok(out)
}

/// Counts of basis parities, keyed for reports.
pub fn parity_histogram(space: &SuperSpace) -> BTreeMap<&'static str, usize> {
    let s = space.sdim();
    BTreeMap::from([("even", s.even), ("odd", s.odd)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dual_and_shift() {
        let v = SuperSpace::standard(2, 1);
        assert_eq!(v.dual().sdim(), Sdim::new(2, 1));
        assert_eq!(v.dual().dual(), v);
        assert_eq!(SuperSpace::standard(3, 0).parity_shift().sdim(), Sdim::new(0, 3));
        assert_eq!(v.parity_shift().parity_shift().sdim(), v.sdim());
        let one = SuperSpace::standard(1, 0);
        let mut s = one.clone();
        for n in 1..=5 {
            s = s.parity_shift();
            assert_eq!(s.parity(0), n % 2 == 1);
        }
    }

    #[test]
    fn shifted_pairing_round_trips() {
        let v = SuperSpace::standard(1, 1);
        for i in 0..2 {
            for j in 0..2 {
                let f: Vector = (0..2).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect();
                let w: Vector = (0..2).map(|k| if k == j { Scalar::one() } else { Scalar::zero() }).collect();
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(shifted_pairing(&f, &w), expect);
                assert_eq!(shifted_pairing(&f, &w), pairing(&f, &w));
            }
        }
        assert_eq!(v.parity_shift().dual().sdim(), v.dual().parity_shift().sdim());
    }

    #[test]
    fn tensor_sdims() {
        let s = |p, q| SuperSpace::standard(p, q);
        assert_eq!(s(1, 1).tensor(&s(1, 1)).sdim(), Sdim::new(2, 2));
        assert_eq!(s(3, 0).tensor(&s(2, 0)).sdim(), Sdim::new(6, 0));
        assert_eq!(s(2, 1).tensor(&s(1, 2)).sdim(), Sdim::new(4, 5));
    }

    #[test]
    fn small_powers() {
        let s = |p, q| SuperSpace::standard(p, q);
        assert_eq!(sym_power(&s(2, 0), 2).sdim(), Sdim::new(3, 0));
        assert_eq!(sym_power(&s(0, 2), 2).sdim(), Sdim::new(1, 0));
        assert_eq!(sym_power(&s(1, 1), 2).sdim(), Sdim::new(1, 1));
        assert_eq!(ext_power(&s(2, 0), 2).sdim(), Sdim::new(1, 0));
        assert_eq!(ext_power(&s(0, 2), 2).sdim(), Sdim::new(3, 0));
        assert_eq!(ext_power(&s(1, 1), 2).sdim(), Sdim::new(1, 1));
    }

    #[test]
    fn supertranspose_examples() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(supertranspose(&d, &[false, false]).unwrap(), d.transpose());
        // even matrix in format (0,1): [[a,b],[c,d]] with b, c = 0 for homogeneity;
        // odd matrix exercises the off-diagonal signs
        let par = [false, true];
        let even = Matrix::from_i64(&[&[1, 0], &[0, 4]]);
        assert_eq!(supertranspose(&even, &par).unwrap(), even);
        let odd = Matrix::from_i64(&[&[0, 2], &[3, 0]]);
        // (st)_01 = (-1)^{1*(0+1)} A_10 = -3, (st)_10 = (-1)^{1*(1+1)} A_01 = 2
        assert_eq!(supertranspose(&odd, &par).unwrap(), Matrix::from_i64(&[&[0, -3], &[2, 0]]));
        let mixed = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        assert_eq!(supertranspose(&mixed, &par), Err(Error::MixedParityMatrix));
    }

    #[test]
    fn supertranspose_even_block_signs() {
        // over a field an even matrix has zero off-diagonal blocks, so the
        // off-diagonal sign pattern is exercised by an odd matrix
        let par3 = [false, false, true];
        let a = Matrix::from_i64(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        assert_eq!(supertranspose(&a, &par3).unwrap(), a.transpose());
        let b = Matrix::from_i64(&[&[0, 0, 2], &[0, 0, 3], &[7, 11, 0]]);
        let st = supertranspose(&b, &par3).unwrap();
        assert_eq!(st, Matrix::from_i64(&[&[0, 0, -7], &[0, 0, -11], &[2, 3, 0]]));
    }

    #[test]
    fn supertranspose_order_four() {
        let par = [false, true, true];
        let b = Matrix::from_i64(&[&[0, 1, 2], &[3, 0, 0], &[4, 0, 0]]);
        let mut x = b.clone();
        for _ in 0..4 {
            x = supertranspose(&x, &par).unwrap();
        }
        assert_eq!(x, b);
        let twice = supertranspose(&supertranspose(&b, &par).unwrap(), &par).unwrap();
        assert_ne!(twice, b);
    }

    #[test]
    fn supertranspose_reverses_bracket() {
        // gl(1|1): -X^st is a Lie superalgebra automorphism, [X,Y]^st = -[X^st, Y^st]
        let par = [false, true];
        let e = |i: usize, j: usize| {
            let mut m = Matrix::zeros(2, 2);
            m.set(i, j, Scalar::one());
            m
        };
        let basis = [e(0, 0), e(0, 1), e(1, 0), e(1, 1)];
        for x in &basis {
            for y in &basis {
                let px = matrix_parity(x, &par).unwrap();
                let py = matrix_parity(y, &par).unwrap();
                let br = |a: &Matrix, b: &Matrix| {
                    let s = if px && py { Scalar::int(-1) } else { Scalar::one() };
                    a.mul(b).sub(&b.mul(a).scale(&s))
                };
                let lhs = supertranspose(&br(x, y), &par).unwrap();
                let xs = supertranspose(x, &par).unwrap();
                let ys = supertranspose(y, &par).unwrap();
                assert_eq!(lhs, br(&xs, &ys).scale(&Scalar::int(-1)));
                // (XY)^st = (-1)^{p(X)p(Y)} Y^st X^st
                let prod_sign = if px && py { Scalar::int(-1) } else { Scalar::one() };
                assert_eq!(supertranspose(&x.mul(y), &par).unwrap(), ys.mul(&xs).scale(&prod_sign));
            }
        }
    }

    #[test]
    fn powers_match_definition() {
        for (p, q) in [(2, 0), (0, 2), (1, 1), (2, 1), (1, 2)] {
            let v = SuperSpace::standard(p, q);
            for k in 0..=3 {
                let sp = sym_power(&v, k);
                assert_eq!(symmetric_tensors(&v, k).len(), sp.space.dim(), "S^{k}({p}|{q})");
                // embedded multiset tensors are supersymmetric
                let fixed = symmetric_tensors(&v, k);
                let dim = v.dim().pow(k as u32);
                let sc = crate::linalg::SubspaceCoords::new(&fixed, dim);
                let emb = sp.embedding.to_dense();
                for c in 0..emb.ncols() {
                    assert!(sc.contains(&emb.column(c)));
                }
                let shifted: Vec<bool> = v.parities().iter().map(|x| !x).collect();
                let ext = ext_power(&v, k);
                assert_eq!(tensors_fixed_by_transpositions(v.dim(), k, &shifted).len(), ext.space.dim());
            }
        }
    }

    #[test]
    fn dual_commutes_with_tensor() {
        let v = SuperSpace::standard(1, 2);
        let w = SuperSpace::standard(2, 1);
        let m = dual_tensor_identification(&v, &w);
        for i in 0..v.dim() {
            for j in 0..w.dim() {
                for k in 0..v.dim() {
                    for l in 0..w.dim() {
                        // <e_i' (x) f_j', e_k (x) f_l> by the Sign Rule
                        let neg = tensor_pairing_sign(&[v.parity(i), w.parity(j)], &[v.parity(k), w.parity(l)]);
                        let lhs = if i == k && j == l { if neg { Scalar::int(-1) } else { Scalar::one() } } else { Scalar::zero() };
                        // identification coefficient times <(e_i f_j)', e_k f_l>
                        let row = i * w.dim() + j;
                        let col = k * w.dim() + l;
                        let rhs = m.get(col, row);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_basic() {
        assert!(koszul_sign(&[true, true], &[1, 0]));
        assert!(!koszul_sign(&[true, false], &[1, 0]));
        assert!(!koszul_sign(&[true, true, true], &[1, 2, 0]));
        assert!(koszul_sign(&[true, true, true], &[2, 1, 0]));
    }

    fn sdim_s2(p: usize, q: usize) -> Sdim {
        Sdim::new(p * (p + 1) / 2 + q * q.saturating_sub(1) / 2, p * q)
    }

    fn sdim_l2(p: usize, q: usize) -> Sdim {
        Sdim::new(p * p.saturating_sub(1) / 2 + q * (q + 1) / 2, p * q)
    }

    proptest! {
        #[test]
        fn square_identities(p in 0usize..=4, q in 0usize..=4) {
            let v = SuperSpace::standard(p, q);
            let s2 = sym_power(&v, 2).sdim();
            let l2 = ext_power(&v, 2).sdim();
            prop_assert_eq!(s2, sdim_s2(p, q));
            prop_assert_eq!(l2, sdim_l2(p, q));
            prop_assert_eq!(s2.plus(&l2), v.sdim().times(&v.sdim()));
        }

        #[test]
        fn exterior_is_shifted_symmetric(p in 0usize..=3, q in 0usize..=3, k in 0usize..=3) {
            let v = SuperSpace::standard(p, q);
            let l = ext_power(&v, k).sdim();
            let s = sym_power(&v.parity_shift(), k).sdim().shift_by(k);
            prop_assert_eq!(l, s);
        }
    }
}
