//! Vectorial Lie superalgebras: polynomial vector fields on a superspace in the
//! standard grading (every coordinate has degree 1).

use std::collections::BTreeMap;

use crate::algebra::LieSuperAlgebra;
use crate::classical::lex_positive;
use crate::error::{Error, Result};
use crate::field::{sign, Scalar};
use crate::grading::GradedAlgebra;
use crate::linalg::{kernel_from_rows, to_sparse, SparseVec, SubspaceCoords, Vector};
use crate::superspace::SuperSpace;

/// Exponent vector; odd variables have exponent 0 or 1.
pub type Monomial = Vec<u8>;

/// A superpolynomial in the given variables.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    pub terms: BTreeMap<Monomial, Scalar>,
}

/// Coordinate ring data: parity and torus weight of each variable.
#[derive(Clone, Debug)]
pub struct Coords {
    pub names: Vec<String>,
    pub odd: Vec<bool>,
    pub weights: Vec<Vector>,
    pub weight_labels: Vec<String>,
}

impl Coords {
    pub fn n(&self) -> usize {
        self.odd.len()
    }

    pub fn mono_parity(&self, m: &Monomial) -> bool {
        m.iter().zip(&self.odd).fold(false, |acc, (e, o)| acc ^ (*o && *e == 1))
    }

    pub fn mono_weight(&self, m: &Monomial) -> Vector {
        let k = self.weight_labels.len();
        let mut w = vec![Scalar::zero(); k];
        for (i, e) in m.iter().enumerate() {
            if *e > 0 {
                let c = Scalar::int(*e as i64);
                for t in 0..k {
                    w[t] += &(&c * &self.weights[i][t]);
                }
            }
        }
        w
    }

    /// All monomials of total degree `d`.
    pub fn monomials(&self, d: usize) -> Vec<Monomial> {
        fn rec(c: &Coords, i: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == c.n() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let max = if c.odd[i] { left.min(1) } else { left };
            for e in (0..=max).rev() {
                cur[i] = e as u8;
                rec(c, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(self, 0, d, &mut vec![0; self.n()], &mut out);
        out
    }

    pub fn mono_label(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| if *e == 1 { self.names[i].clone() } else { format!("{}^{e}", self.names[i]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn mono(m: Monomial, c: Scalar) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        for (m, x) in &other.terms {
            let e = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *e += &(c * x);
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn mul(&self, other: &Poly, c: &Coords) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, neg)) = mono_mul(a, b, c) {
                    let v = &(x * y) * &sign(neg);
                    out.add_scaled(&Scalar::one(), &Poly::mono(m, v));
                }
            }
        }
        out
    }

    /// Left partial derivative in variable `i`.
    pub fn deriv(&self, i: usize, c: &Coords) -> Poly {
        let mut out = Poly::zero();
        for (m, x) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut r = m.clone();
            r[i] -= 1;
            let coef = if c.odd[i] {
                let before = (0..i).filter(|&k| c.odd[k] && m[k] == 1).count();
                sign(before % 2 == 1)
            } else {
                Scalar::int(m[i] as i64)
            };
            out.add_scaled(&Scalar::one(), &Poly::mono(r, x * &coef));
        }
        out
    }

    /// Parity, if homogeneous.
    pub fn parity(&self, c: &Coords) -> Option<bool> {
        let mut it = self.terms.keys().map(|m| c.mono_parity(m));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

fn mono_mul(a: &Monomial, b: &Monomial, c: &Coords) -> Option<(Monomial, bool)> {
    let mut neg = false;
    for i in 0..c.n() {
        if c.odd[i] && a[i] == 1 && b[i] == 1 {
            return None;
        }
    }
    // move each odd variable of b left past the odd variables of a with larger index
    for j in 0..c.n() {
        if c.odd[j] && b[j] == 1 {
            let passed = (j + 1..c.n()).filter(|&i| c.odd[i] && a[i] == 1).count();
            neg ^= passed % 2 == 1;
        }
    }
    Some((a.iter().zip(b).map(|(x, y)| x + y).collect(), neg))
}

/// A vector field `sum_i f_i d_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    pub comps: Vec<Poly>,
}

impl Field {
    pub fn zero(n: usize) -> Field {
        Field { comps: vec![Poly::zero(); n] }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn parity(&self, c: &Coords) -> Option<bool> {
        let mut out: Option<bool> = None;
        for (i, f) in self.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let p = f.parity(c)? ^ c.odd[i];
            if out.is_some_and(|q| q != p) {
                return None;
            }
            out = Some(p);
        }
        out
    }

    /// Standard degree: `deg f - 1`.
    pub fn degree(&self) -> Option<i64> {
        let mut out = None;
        for f in &self.comps {
            for m in f.terms.keys() {
                let d = m.iter().map(|&e| e as i64).sum::<i64>() - 1;
                if out.is_some_and(|x| x != d) {
                    return None;
                }
                out = Some(d);
            }
        }
        out
    }

    /// `X(f) = sum_i X^i d_i f`.
    pub fn apply(&self, f: &Poly, c: &Coords) -> Poly {
        let mut out = Poly::zero();
        for (i, xi) in self.comps.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            out.add_scaled(&Scalar::one(), &xi.mul(&f.deriv(i, c), c));
        }
        out
    }

    /// Super bracket of homogeneous fields.
    pub fn bracket(&self, other: &Field, c: &Coords) -> Field {
        let (Some(p), Some(q)) = (self.parity(c), other.parity(c)) else {
            return Field::zero(c.n());
        };
        let s = -&sign(p && q);
        let comps = (0..c.n())
            .map(|j| {
                let mut a = self.apply(&other.comps[j], c);
                a.add_scaled(&s, &other.apply(&self.comps[j], c));
                a
            })
            .collect();
        Field { comps }
    }

    pub fn weight(&self, c: &Coords) -> Option<Vector> {
        let mut out: Option<Vector> = None;
        for (i, f) in self.comps.iter().enumerate() {
            for m in f.terms.keys() {
                let w: Vector = c.mono_weight(m).iter().zip(&c.weights[i]).map(|(a, b)| a - b).collect();
                if out.as_ref().is_some_and(|x| *x != w) {
                    return None;
                }
                out = Some(w);
            }
        }
        out
    }

    /// Divergence `sum_i (-1)^{p_i p(X)} d_i f_i`.
    pub fn divergence(&self, c: &Coords) -> Poly {
        let p = self.parity(c).unwrap_or(false);
        let mut out = Poly::zero();
        for (i, f) in self.comps.iter().enumerate() {
            out.add_scaled(&sign(c.odd[i] && p), &f.deriv(i, c));
        }
        out
    }

    pub fn label(&self, c: &Coords) -> String {
        let mut parts = Vec::new();
        for (i, f) in self.comps.iter().enumerate() {
            for (m, x) in &f.terms {
                let coef = if x.is_one() { String::new() } else { format!("({x})") };
                parts.push(format!("{coef}{}*d{}", c.mono_label(m), c.names[i]));
            }
        }
        parts.join("+")
    }
}

/// Builds a graded algebra from a homogeneous spanning set of fields.
///
/// With `cutoff = Some(d)` the span must contain everything of degree `<= d`
/// that brackets can produce; brackets above `d` are dropped.
pub fn from_fields(name: &str, c: &Coords, fields: Vec<(String, Field)>, cutoff: Option<i64>) -> Result<GradedAlgebra> {
    let mut items: Vec<(i64, String, Field, bool, Vector)> = Vec::new();
    for (l, f) in fields {
        let d = f.degree().ok_or_else(|| Error::BadParams(format!("{name}: field {l} is not degree-homogeneous")))?;
        let p = f.parity(c).ok_or(Error::MixedParityMatrix)?;
        let w = f.weight(c).ok_or_else(|| Error::NonDiagonalizableAction(format!("{name}: field {l} is not a weight vector")))?;
        items.push((d, l, f, p, w));
    }
    items.sort_by_key(|x| x.0);
    let n = items.len();
    // local coordinates per degree
    let mut local: BTreeMap<i64, BTreeMap<(usize, Monomial), usize>> = BTreeMap::new();
    let vectorize = |local: &mut BTreeMap<i64, BTreeMap<(usize, Monomial), usize>>, d: i64, f: &Field| -> SparseVec {
        let map = local.entry(d).or_default();
        let mut v = Vec::new();
        for (i, p) in f.comps.iter().enumerate() {
            for (m, x) in &p.terms {
                let next = map.len();
                let k = *map.entry((i, m.clone())).or_insert(next);
                v.push((k, x.clone()));
            }
        }
        v.sort_by_key(|e| e.0);
        v
    };
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (idx, it) in items.iter().enumerate() {
        by_degree.entry(it.0).or_default().push(idx);
    }
    // all monomial coordinates of each degree are registered up front
    for &d in by_degree.keys() {
        let map = local.entry(d).or_default();
        for i in 0..c.n() {
            for m in c.monomials((d + 1) as usize) {
                let next = map.len();
                map.entry((i, m)).or_insert(next);
            }
        }
    }
    let mut coords: BTreeMap<i64, (SubspaceCoords, usize)> = BTreeMap::new();
    for (&d, idxs) in &by_degree {
        let vecs: Vec<SparseVec> = idxs.iter().map(|&i| vectorize(&mut local, d, &items[i].2)).collect();
        let width = local[&d].len();
        let dense: Vec<Vector> = vecs.iter().map(|v| crate::linalg::to_dense(v, width)).collect();
        if crate::linalg::rank_of_vectors(&dense, width) != dense.len() {
            return Err(Error::BadParams(format!("{name}: spanning fields of degree {d} are dependent")));
        }
        coords.insert(d, (SubspaceCoords::new(&dense, width), idxs[0]));
    }
    let top = cutoff.unwrap_or(i64::MAX);
    let mut table = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let d = items[a].0 + items[b].0;
            if d > top || d < -1 {
                continue;
            }
            let br = items[a].2.bracket(&items[b].2, c);
            if br.is_zero() {
                continue;
            }
            let Some((sc, first)) = coords.get(&d) else {
                return Err(Error::BadParams(format!("{name}: bracket of {} and {} has no component to land in", items[a].1, items[b].1)));
            };
            let width = local[&d].len();
            let v = vectorize(&mut local, d, &br);
            if local[&d].len() != width {
                return Err(Error::BadParams(format!("{name}: bracket left the coordinate range")));
            }
            let x = sc
                .coords(&crate::linalg::to_dense(&v, width))
                .ok_or_else(|| Error::BadParams(format!("{name}: span not closed at [{}, {}]", items[a].1, items[b].1)))?;
            table[a][b] = to_sparse(&x).into_iter().map(|(k, s)| (k + first, s)).collect();
        }
    }
    let labels = items.iter().map(|x| x.1.clone()).collect();
    let parities = items.iter().map(|x| x.3).collect();
    let weights: Vec<Vector> = items.iter().map(|x| x.4.clone()).collect();
    let mut alg = LieSuperAlgebra::from_table(name, SuperSpace::new(labels, parities), table, weights, c.weight_labels.clone())?;
    alg.raising = (0..n).filter(|&i| items[i].0 == 0 && lex_positive(&alg.weights[i])).map(|i| alg.basis_vector(i)).collect();
    alg.cartan = (0..n)
        .filter(|&i| items[i].0 == 0 && !items[i].3 && alg.weights[i].iter().all(Scalar::is_zero))
        .map(|i| alg.basis_vector(i))
        .collect();
    let degrees = items.iter().map(|x| x.0).collect();
    GradedAlgebra::new(name, alg, degrees, cutoff)
}

fn unit_weight(k: usize, i: usize, s: i64) -> Vector {
    let mut w = vec![Scalar::zero(); k];
    w[i] = Scalar::int(s);
    w
}

/// Coordinates `x_1..x_m | xi_1..xi_n` with `gl(m|n)` weights.
pub fn gl_coords(m: usize, n: usize) -> Coords {
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("xi{i}")));
    let mut wl: Vec<String> = (1..=m).map(|i| format!("eps{i}")).collect();
    wl.extend((1..=n).map(|i| format!("del{i}")));
    Coords {
        names,
        odd: (0..m + n).map(|i| i >= m).collect(),
        weights: (0..m + n).map(|i| unit_weight(m + n, i, 1)).collect(),
        weight_labels: wl,
    }
}

fn monomial_fields(c: &Coords, max_field_degree: i64) -> Vec<(String, Field)> {
    let mut out = Vec::new();
    for d in 0..=(max_field_degree + 1) {
        for m in c.monomials(d as usize) {
            for i in 0..c.n() {
                let mut f = Field::zero(c.n());
                f.comps[i] = Poly::mono(m.clone(), Scalar::one());
                out.push((f.label(c), f));
            }
        }
    }
    out
}

fn natural_top(c: &Coords, max_degree: i64) -> (i64, Option<i64>) {
    let even = c.odd.iter().filter(|o| !**o).count();
    let odd = c.n() - even;
    if even == 0 {
        let top = odd as i64 - 1;
        if max_degree >= top {
            (top, None)
        } else {
            (max_degree, Some(max_degree))
        }
    } else {
        (max_degree, Some(max_degree))
    }
}

/// `vect(m|n)`, truncated at `max_degree` when `m > 0`.
pub fn vect(m: usize, n: usize, max_degree: i64) -> Result<GradedAlgebra> {
    let c = gl_coords(m, n);
    let (top, cutoff) = natural_top(&c, max_degree);
    from_fields(&format!("vect({m}|{n})"), &c, monomial_fields(&c, top), cutoff)
}

/// Divergence-free fields, one weight block at a time.
pub fn svect(m: usize, n: usize, max_degree: i64) -> Result<GradedAlgebra> {
    let c = gl_coords(m, n);
    let (top, cutoff) = natural_top(&c, max_degree);
    let fields = kernel_fields(&c, monomial_fields(&c, top), |f| f.divergence(&c));
    from_fields(&format!("svect({m}|{n})"), &c, fields, cutoff)
}

/// Kernel of a linear map on fields, computed per (degree, weight, parity) block.
fn kernel_fields(c: &Coords, fields: Vec<(String, Field)>, map: impl Fn(&Field) -> Poly) -> Vec<(String, Field)> {
    let mut blocks: BTreeMap<(i64, Vector, bool), Vec<Field>> = BTreeMap::new();
    let mut order = Vec::new();
    for (_, f) in fields {
        let key = (f.degree().expect("homogeneous"), f.weight(c).expect("weight"), f.parity(c).expect("parity"));
        if !blocks.contains_key(&key) {
            order.push(key.clone());
        }
        blocks.entry(key).or_default().push(f);
    }
    order.sort_by_key(|k| k.0);
    let mut out = Vec::new();
    for key in order {
        let fs = &blocks[&key];
        let images: Vec<Poly> = fs.iter().map(&map).collect();
        let mut monos: Vec<Monomial> = images.iter().flat_map(|p| p.terms.keys().cloned()).collect();
        monos.sort();
        monos.dedup();
        let rows: Vec<Vector> = monos
            .iter()
            .map(|m| images.iter().map(|p| p.terms.get(m).cloned().unwrap_or_else(Scalar::zero)).collect())
            .collect();
        let ker = if rows.is_empty() {
            (0..fs.len()).map(|i| crate::linalg::unit_vec(fs.len(), i)).collect()
        } else {
            kernel_from_rows(rows, fs.len())
        };
        for v in ker {
            let mut f = Field::zero(c.n());
            for (x, g) in v.iter().zip(fs) {
                if x.is_zero() {
                    continue;
                }
                for (i, p) in g.comps.iter().enumerate() {
                    f.comps[i].add_scaled(x, p);
                }
            }
            out.push((f.label(c), f));
        }
    }
    out
}

/// Coordinates for `h(2n|m)`: `p_i, q_i` even, then `xi_j, eta_j` (and `theta` for odd `m`).
///
/// Weights: `p_i -> del_i`, `q_i -> -del_i`, `xi_j -> eps_j`, `eta_j -> -eps_j`, `theta -> 0`.
pub fn hamiltonian_coords(n: usize, m: usize) -> Coords {
    let k = m / 2;
    let mut names = Vec::new();
    let mut odd = Vec::new();
    let mut weights = Vec::new();
    let nw = k + n;
    for i in 0..n {
        names.push(format!("p{}", i + 1));
        odd.push(false);
        weights.push(unit_weight(nw, k + i, 1));
    }
    for i in 0..n {
        names.push(format!("q{}", i + 1));
        odd.push(false);
        weights.push(unit_weight(nw, k + i, -1));
    }
    for j in 0..k {
        names.push(format!("xi{}", j + 1));
        odd.push(true);
        weights.push(unit_weight(nw, j, 1));
    }
    for j in 0..k {
        names.push(format!("eta{}", j + 1));
        odd.push(true);
        weights.push(unit_weight(nw, j, -1));
    }
    if m % 2 == 1 {
        names.push("theta".into());
        odd.push(true);
        weights.push(vec![Scalar::zero(); nw]);
    }
    let mut wl: Vec<String> = (1..=k).map(|i| format!("eps{i}")).collect();
    wl.extend((1..=n).map(|i| format!("del{i}")));
    Coords { names, odd, weights, weight_labels: wl }
}

/// Hamiltonian field `H_f`.
pub fn hamiltonian_field(f: &Poly, n: usize, m: usize, c: &Coords) -> Field {
    let k = m / 2;
    let mut out = Field::zero(c.n());
    let one = Scalar::one();
    let m1 = Scalar::int(-1);
    for i in 0..n {
        let (p, q) = (i, n + i);
        out.comps[q].add_scaled(&one, &f.deriv(p, c));
        out.comps[p].add_scaled(&m1, &f.deriv(q, c));
    }
    let s = -&sign(f.parity(c).unwrap_or(false));
    for j in 0..k {
        let (x, e) = (2 * n + j, 2 * n + k + j);
        out.comps[e].add_scaled(&s, &f.deriv(x, c));
        out.comps[x].add_scaled(&s, &f.deriv(e, c));
    }
    if m % 2 == 1 {
        let t = 2 * n + 2 * k;
        out.comps[t].add_scaled(&s, &f.deriv(t, c));
    }
    out
}

fn hamiltonian_fields(n: usize, m: usize, c: &Coords, top: i64, skip_top_form: bool) -> Vec<(String, Field)> {
    let mut out = Vec::new();
    for d in 1..=(top + 2) {
        for mono in c.monomials(d as usize) {
            if skip_top_form && n == 0 && mono.iter().all(|&e| e == 1) {
                continue;
            }
            let f = Poly::mono(mono.clone(), Scalar::one());
            out.push((format!("H[{}]", c.mono_label(&mono)), hamiltonian_field(&f, n, m, c)));
        }
    }
    out
}

/// `h(2n|m)`, truncated at `max_degree` when `n > 0`.
pub fn h(n: usize, m: usize, max_degree: i64) -> Result<GradedAlgebra> {
    let c = hamiltonian_coords(n, m);
    let (top, cutoff) = if n == 0 {
        let t = m as i64 - 2;
        if max_degree >= t {
            (t, None)
        } else {
            (max_degree, Some(max_degree))
        }
    } else {
        (max_degree, Some(max_degree))
    };
    from_fields(&format!("h({}|{m})", 2 * n), &c, hamiltonian_fields(n, m, &c, top, false), cutoff)
}

/// `h(0|m)` with the top Hamiltonian `H[xi_1...xi_m]` removed; this is the derived algebra.
pub fn h_circ(m: usize) -> Result<GradedAlgebra> {
    let c = hamiltonian_coords(0, m);
    from_fields(&format!("h_o({m})"), &c, hamiltonian_fields(0, m, &c, m as i64 - 2, true), None)
}

/// Coordinates for `le(n)`: `x_i` even with weight `eps_i`, `xi_i` odd with weight `-eps_i`.
pub fn le_coords(n: usize) -> Coords {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("xi{i}")));
    Coords {
        names,
        odd: (0..2 * n).map(|i| i >= n).collect(),
        weights: (0..2 * n).map(|i| if i < n { unit_weight(n, i, 1) } else { unit_weight(n, i - n, -1) }).collect(),
        weight_labels: (1..=n).map(|i| format!("eps{i}")).collect(),
    }
}

/// `Le_f = sum_i (d_{x_i} f d_{xi_i} + (-1)^{p(f)} d_{xi_i} f d_{x_i})`.
pub fn le_field(f: &Poly, n: usize, c: &Coords) -> Field {
    let mut out = Field::zero(c.n());
    let s = sign(f.parity(c).unwrap_or(false));
    for i in 0..n {
        out.comps[n + i].add_scaled(&Scalar::one(), &f.deriv(i, c));
        out.comps[i].add_scaled(&s, &f.deriv(n + i, c));
    }
    out
}

fn le_generating(n: usize, c: &Coords, top: i64) -> Vec<(Poly, String)> {
    let mut out = Vec::new();
    for d in 1..=(top + 2) {
        for mono in c.monomials(d as usize) {
            out.push((Poly::mono(mono.clone(), Scalar::one()), format!("Le[{}]", c.mono_label(&mono))));
        }
    }
    let _ = n;
    out
}

/// `le(n)` truncated at `max_degree`.
pub fn le(n: usize, max_degree: i64) -> Result<GradedAlgebra> {
    let c = le_coords(n);
    let fields = le_generating(n, &c, max_degree).into_iter().map(|(f, l)| (l, le_field(&f, n, &c))).collect();
    from_fields(&format!("le({n})"), &c, fields, Some(max_degree))
}

/// Odd Laplacian `sum_i d^2 f / dx_i dxi_i`.
pub fn odd_laplacian(f: &Poly, n: usize, c: &Coords) -> Poly {
    let mut out = Poly::zero();
    for i in 0..n {
        out.add_scaled(&Scalar::one(), &f.deriv(n + i, c).deriv(i, c));
    }
    out
}

/// `sle(n)`: `Le_f` with harmonic generating function, truncated at `max_degree`.
pub fn sle(n: usize, max_degree: i64) -> Result<GradedAlgebra> {
    let c = le_coords(n);
    // harmonic generating functions per (degree, weight, parity) block
    let mut blocks: BTreeMap<(usize, Vector, bool), Vec<Monomial>> = BTreeMap::new();
    for d in 1..=(max_degree + 2) as usize {
        for mono in c.monomials(d) {
            blocks.entry((d, c.mono_weight(&mono), c.mono_parity(&mono))).or_default().push(mono);
        }
    }
    let mut fields = Vec::new();
    for (_, monos) in blocks {
        let images: Vec<Poly> = monos.iter().map(|m| odd_laplacian(&Poly::mono(m.clone(), Scalar::one()), n, &c)).collect();
        let mut keys: Vec<Monomial> = images.iter().flat_map(|p| p.terms.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let rows: Vec<Vector> =
            keys.iter().map(|k| images.iter().map(|p| p.terms.get(k).cloned().unwrap_or_else(Scalar::zero)).collect()).collect();
        let ker = if rows.is_empty() {
            (0..monos.len()).map(|i| crate::linalg::unit_vec(monos.len(), i)).collect()
        } else {
            kernel_from_rows(rows, monos.len())
        };
        for v in ker {
            let mut f = Poly::zero();
            for (x, m) in v.iter().zip(&monos) {
                if !x.is_zero() {
                    f.add_scaled(x, &Poly::mono(m.clone(), Scalar::one()));
                }
            }
            let label = format!("Le[{}]", poly_label(&f, &c));
            fields.push((label, le_field(&f, n, &c)));
        }
    }
    from_fields(&format!("sle({n})"), &c, fields, Some(max_degree))
}

fn poly_label(f: &Poly, c: &Coords) -> String {
    f.terms
        .iter()
        .map(|(m, x)| if x.is_one() { c.mono_label(m) } else { format!("({x}){}", c.mono_label(m)) })
        .collect::<Vec<_>>()
        .join("+")
}
