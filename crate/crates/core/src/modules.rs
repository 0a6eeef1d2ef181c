//! Finite-dimensional `g_0`-modules given by action matrices on a weight basis:
//! highest-weight vectors, generated submodules, socle filtration.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_from_rows, sparse_axpy, SparseMatrix, SparseVec, Vector};
use crate::superspace::Sdim;

/// A module over `g_0` whose basis vectors are weight vectors of fixed parity.
#[derive(Clone, Debug)]
pub struct Module {
    pub name: String,
    pub labels: Vec<String>,
    pub parities: Vec<bool>,
    pub weights: Vec<Vector>,
    pub weight_labels: Vec<String>,
    /// One matrix per `g_0` basis element; column `j` is the image of basis vector `j`.
    pub actions: Vec<SparseMatrix>,
    pub action_parities: Vec<bool>,
    pub action_labels: Vec<String>,
    /// Raising operators as `g_0` coordinate vectors.
    pub raising: Vec<Vector>,
    pub cartan: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub vector: SparseVec,
    pub weight: Vector,
    pub parity: bool,
}

/// An irreducible constituent of a filtration layer.
#[derive(Clone, Debug, PartialEq)]
pub struct Constituent {
    pub weight: Vector,
    pub parity: bool,
    pub sdim: Sdim,
    pub q_type: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub sdim: Sdim,
    pub constituents: Vec<Constituent>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleReport {
    pub sdim: Sdim,
    pub hwvs: Vec<WeightVector>,
    pub layers: Vec<Layer>,
    pub split: bool,
    /// False when some layer was not a sum of certified irreducibles.
    pub complete: bool,
}

type Key = (Vector, bool);

/// Echelon bases kept per (weight, parity) block.
#[derive(Clone, Debug, Default)]
pub struct BlockSpan {
    rows: BTreeMap<Key, Vec<SparseVec>>,
}

impl BlockSpan {
    pub fn dim(&self) -> usize {
        self.rows.values().map(Vec::len).sum()
    }

    fn reduce(rows: &[SparseVec], v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        for r in rows {
            let p = r[0].0;
            if let Some((_, c)) = w.iter().find(|(i, _)| *i == p) {
                let c = -c;
                sparse_axpy(&mut w, &c, r);
            }
        }
        w
    }

    /// Adds a homogeneous vector; returns the new row if it enlarged the span.
    pub fn insert(&mut self, key: &Key, v: &SparseVec) -> Option<SparseVec> {
        let rows = self.rows.entry(key.clone()).or_default();
        let w = Self::reduce(rows, v);
        if w.is_empty() {
            return None;
        }
        let inv = w[0].1.inv();
        let w: SparseVec = w.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        rows.push(w.clone());
        Some(w)
    }

    pub fn contains(&self, key: &Key, v: &SparseVec) -> bool {
        v.is_empty() || self.rows.get(key).is_some_and(|rows| Self::reduce(rows, v).is_empty())
    }

    pub fn sdim(&self) -> Sdim {
        let mut s = Sdim::new(0, 0);
        for ((_, p), rows) in &self.rows {
            s = s.plus(&if *p { Sdim::new(0, rows.len()) } else { Sdim::new(rows.len(), 0) });
        }
        s
    }

    pub fn basis(&self) -> Vec<(Key, SparseVec)> {
        self.rows.iter().flat_map(|(k, rows)| rows.iter().map(move |r| (k.clone(), r.clone()))).collect()
    }
}

impl Module {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn sdim(&self) -> Sdim {
        let odd = self.parities.iter().filter(|p| **p).count();
        Sdim::new(self.dim() - odd, odd)
    }

    fn key(&self, i: usize) -> Key {
        (self.weights[i].clone(), self.parities[i])
    }

    /// Linear combination of action matrices.
    pub fn operator(&self, x: &[Scalar]) -> SparseMatrix {
        let mut acc = SparseMatrix::zeros(self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add_scaled(c, &self.actions[i]);
            }
        }
        acc
    }

    /// Basis indices per (weight, parity).
    pub fn weight_spaces(&self) -> BTreeMap<Key, Vec<usize>> {
        let mut out: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry(self.key(i)).or_default().push(i);
        }
        out
    }

    /// Checks that the Cartan elements act diagonally on the weight basis.
    pub fn check_weights(&self) -> Result<()> {
        for h in &self.cartan {
            let m = self.operator(h);
            for j in 0..self.dim() {
                for (i, _) in m.transpose().row(j) {
                    if *i != j {
                        return Err(Error::NonDiagonalizableAction(format!("{}: Cartan element mixes basis vectors", self.name)));
                    }
                }
            }
        }
        Ok(())
    }

    fn apply(m: &SparseMatrix, v: &SparseVec) -> SparseVec {
        m.mul_sparse_vec(v)
    }

    fn split_by_key(&self, v: &SparseVec) -> BTreeMap<Key, SparseVec> {
        let mut out: BTreeMap<Key, SparseVec> = BTreeMap::new();
        for (i, x) in v {
            out.entry(self.key(*i)).or_default().push((*i, x.clone()));
        }
        out
    }

    /// Raising operators as matrices.
    pub fn raising_operators(&self) -> Vec<SparseMatrix> {
        self.raising.iter().map(|x| self.operator(x)).collect()
    }

    /// Joint kernel of the raising operators, per (weight, parity) block.
    pub fn highest_weight_vectors(&self) -> Vec<WeightVector> {
        let ops = self.raising_operators();
        let mut out = Vec::new();
        for ((w, p), idx) in self.weight_spaces() {
            let mut rows: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
            for (col, &j) in idx.iter().enumerate() {
                for (o, m) in ops.iter().enumerate() {
                    let img = Self::apply(m, &vec![(j, Scalar::one())]);
                    for (i, x) in img {
                        rows.entry((o, i)).or_insert_with(|| vec![Scalar::zero(); idx.len()])[col] = x;
                    }
                }
            }
            let ker = if rows.is_empty() {
                (0..idx.len()).map(|i| crate::linalg::unit_vec(idx.len(), i)).collect()
            } else {
                kernel_from_rows(rows.into_values().collect(), idx.len())
            };
            for v in ker {
                let vector = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(a, x)| (idx[a], x.clone())).collect();
                out.push(WeightVector { vector, weight: w.clone(), parity: p });
            }
        }
        out
    }

    /// Smallest submodule containing the given homogeneous vectors.
    pub fn submodule_generated(&self, gens: &[SparseVec]) -> BlockSpan {
        self.closure(gens, None)
    }

    /// Closure; stops early once `target` is reached.
    fn closure(&self, gens: &[SparseVec], target: Option<(&Key, &SparseVec)>) -> BlockSpan {
        let mut span = BlockSpan::default();
        let mut queue = Vec::new();
        for g in gens {
            for (k, part) in self.split_by_key(g) {
                if let Some(r) = span.insert(&k, &part) {
                    queue.push(r);
                }
            }
        }
        while let Some(v) = queue.pop() {
            if let Some((tk, tv)) = target {
                if span.contains(tk, tv) {
                    return span;
                }
            }
            for m in &self.actions {
                let img = Self::apply(m, &v);
                if img.is_empty() {
                    continue;
                }
                for (k, part) in self.split_by_key(&img) {
                    if let Some(r) = span.insert(&k, &part) {
                        queue.push(r);
                    }
                }
            }
        }
        span
    }

    /// `S(v)` is irreducible when every highest-weight vector of `S(v)` generates `v` back.
    /// Any nonzero submodule contains a highest-weight vector, so only those are tested;
    /// `hwvs` must be the full list for this module. Also returns the number of
    /// independent highest-weight vectors of `S(v)` at the weight of `v`.
    pub fn generates_irreducible(&self, v: &WeightVector, hwvs: &[WeightVector]) -> (bool, BlockSpan, usize) {
        let s = self.submodule_generated(std::slice::from_ref(&v.vector));
        let key = (v.weight.clone(), v.parity);
        let mut grouped: BTreeMap<Key, Vec<&SparseVec>> = BTreeMap::new();
        for h in hwvs {
            grouped.entry((h.weight.clone(), h.parity)).or_default().push(&h.vector);
        }
        let mut top = 0;
        let mut irreducible = true;
        for (k, hs) in grouped {
            let inside = match s.rows.get(&k) {
                Some(rows) => intersect_block(rows, &hs),
                None => continue,
            };
            if k.0 == v.weight {
                top += inside.len();
            }
            if !irreducible || k == key && inside.len() == 1 {
                continue;
            }
            let mut tests = inside.clone();
            if inside.len() > 1 {
                let mut generic = SparseVec::new();
                for (a, u) in inside.iter().enumerate() {
                    sparse_axpy(&mut generic, &Scalar::int(a as i64 + 1), u);
                }
                tests.push(generic);
            }
            for u in tests {
                let back = self.closure(&[u], Some((&key, &v.vector)));
                if !back.contains(&key, &v.vector) {
                    irreducible = false;
                    break;
                }
            }
        }
        (irreducible, s, top)
    }

    /// Submodule on a homogeneous basis given as a span.
    pub fn submodule(&self, span: &BlockSpan) -> Module {
        let basis: Vec<(Key, SparseVec)> = span.basis();
        let coords = SpanCoords::new(&basis);
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<SparseVec> = basis.iter().map(|(_, b)| coords.coords(&self.split_by_key(&Self::apply(m, b)))).collect();
                SparseMatrix::from_columns(&cols, basis.len())
            })
            .collect();
        Module {
            name: format!("sub({})", self.name),
            labels: basis.iter().map(|(_, b)| self.render(b)).collect(),
            parities: basis.iter().map(|(k, _)| k.1).collect(),
            weights: basis.iter().map(|(k, _)| k.0.clone()).collect(),
            weight_labels: self.weight_labels.clone(),
            actions,
            action_parities: self.action_parities.clone(),
            action_labels: self.action_labels.clone(),
            raising: self.raising.clone(),
            cartan: self.cartan.clone(),
        }
    }

    /// Quotient by a submodule, on complement basis vectors.
    pub fn quotient(&self, span: &BlockSpan) -> Module {
        let mut keep = Vec::new();
        for (key, idx) in self.weight_spaces() {
            let pivots: Vec<usize> = span.rows.get(&key).map(|rows| rows.iter().map(|r| r[0].0).collect()).unwrap_or_default();
            for i in idx {
                if !pivots.contains(&i) {
                    keep.push(i);
                }
            }
        }
        keep.sort_unstable();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let reduce = |v: &SparseVec| -> SparseVec {
            let mut out = Vec::new();
            for (k, part) in self.split_by_key(v) {
                let r = match span.rows.get(&k) {
                    Some(rows) => BlockSpan::reduce(rows, &part),
                    None => part,
                };
                out.extend(r.into_iter().map(|(i, x)| (pos[&i], x)));
            }
            out.sort_by_key(|e| e.0);
            out
        };
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols: Vec<SparseVec> = keep.iter().map(|&j| reduce(&Self::apply(m, &vec![(j, Scalar::one())]))).collect();
                SparseMatrix::from_columns(&cols, keep.len())
            })
            .collect();
        Module {
            name: format!("quot({})", self.name),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            parities: keep.iter().map(|&i| self.parities[i]).collect(),
            weights: keep.iter().map(|&i| self.weights[i].clone()).collect(),
            weight_labels: self.weight_labels.clone(),
            actions,
            action_parities: self.action_parities.clone(),
            action_labels: self.action_labels.clone(),
            raising: self.raising.clone(),
            cartan: self.cartan.clone(),
        }
    }

    /// Restriction to the `g_0` basis elements in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Module {
        let inside = |v: &Vector| v.iter().enumerate().all(|(i, x)| x.is_zero() || keep.contains(&i));
        let project = |v: &Vector| keep.iter().map(|&i| v[i].clone()).collect::<Vector>();
        Module {
            name: self.name.clone(),
            labels: self.labels.clone(),
            parities: self.parities.clone(),
            weights: self.weights.clone(),
            weight_labels: self.weight_labels.clone(),
            actions: keep.iter().map(|&i| self.actions[i].clone()).collect(),
            action_parities: keep.iter().map(|&i| self.action_parities[i]).collect(),
            action_labels: keep.iter().map(|&i| self.action_labels[i].clone()).collect(),
            raising: self.raising.iter().filter(|v| inside(v)).map(project).collect(),
            cartan: self.cartan.iter().filter(|v| inside(v)).map(project).collect(),
        }
    }

    /// Restriction to the even part of `g_0`.
    pub fn restrict_even(&self) -> Module {
        let keep: Vec<usize> = (0..self.action_parities.len()).filter(|&i| !self.action_parities[i]).collect();
        self.restrict(&keep)
    }

    /// Sum of the irreducible submodules generated by highest-weight vectors.
    pub fn socle(&self) -> (BlockSpan, Vec<Constituent>, bool) {
        let hwvs = self.highest_weight_vectors();
        let mut span = BlockSpan::default();
        let mut parts = Vec::new();
        let mut certified = true;
        for v in &hwvs {
            let key = (v.weight.clone(), v.parity);
            if span.contains(&key, &v.vector) {
                continue;
            }
            let (irr, s, top) = self.generates_irreducible(v, &hwvs);
            if !irr {
                continue;
            }
            let grew = s.basis().into_iter().fold(false, |acc, (k, b)| span.insert(&k, &b).is_some() || acc);
            if grew {
                parts.push(Constituent { weight: v.weight.clone(), parity: v.parity, sdim: s.sdim(), q_type: top > 1 });
            }
        }
        if span.dim() == 0 && self.dim() > 0 {
            certified = false;
        }
        (span, parts, certified)
    }

    /// Iterated socle filtration.
    pub fn composition_report(&self) -> ModuleReport {
        let hwvs = self.highest_weight_vectors();
        let mut layers = Vec::new();
        let mut complete = true;
        let mut cur = self.clone();
        while cur.dim() > 0 {
            let (span, parts, ok) = cur.socle();
            if !ok {
                complete = false;
                layers.push(Layer { sdim: cur.sdim(), constituents: Vec::new() });
                break;
            }
            layers.push(Layer { sdim: span.sdim(), constituents: parts });
            cur = cur.quotient(&span);
        }
        ModuleReport { sdim: self.sdim(), hwvs, split: layers.len() <= 1, layers, complete }
    }

    pub fn render(&self, v: &SparseVec) -> String {
        v.iter()
            .map(|(i, x)| if x.is_one() { self.labels[*i].clone() } else { format!("({x})*[{}]", self.labels[*i]) })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Super representation check `[A_x, A_y] = A_[x,y]` against a bracket table.
    pub fn check_representation(&self, bracket: impl Fn(usize, usize) -> SparseVec) -> Vec<(usize, usize)> {
        let n = self.actions.len();
        let mut bad = Vec::new();
        for x in 0..n {
            for y in x..n {
                let s = crate::field::sign(self.action_parities[x] && self.action_parities[y]);
                let lhs = self.actions[x].mul(&self.actions[y]).add_scaled(&-&s, &self.actions[y].mul(&self.actions[x]));
                let mut rhs = SparseMatrix::zeros(self.dim(), self.dim());
                for (k, c) in bracket(x, y) {
                    rhs = rhs.add_scaled(&c, &self.actions[k]);
                }
                if lhs.add_scaled(&Scalar::int(-1), &rhs).nnz() != 0 {
                    bad.push((x, y));
                }
            }
        }
        bad
    }
}

/// Basis of `span(hs)` intersected with the span of echelon `rows`.
fn intersect_block(rows: &[SparseVec], hs: &[&SparseVec]) -> Vec<SparseVec> {
    let residues: Vec<SparseVec> = hs.iter().map(|h| BlockSpan::reduce(rows, h)).collect();
    let mut eqs: BTreeMap<usize, Vector> = BTreeMap::new();
    for (a, r) in residues.iter().enumerate() {
        for (i, x) in r {
            eqs.entry(*i).or_insert_with(|| vec![Scalar::zero(); hs.len()])[a] = x.clone();
        }
    }
    let ker = if eqs.is_empty() {
        (0..hs.len()).map(|i| crate::linalg::unit_vec(hs.len(), i)).collect()
    } else {
        kernel_from_rows(eqs.into_values().collect(), hs.len())
    };
    ker.into_iter()
        .map(|c| {
            let mut u = SparseVec::new();
            for (a, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    sparse_axpy(&mut u, x, hs[a]);
                }
            }
            u
        })
        .filter(|u| !u.is_empty())
        .collect()
}

/// Coordinates with respect to block echelon rows (pivot elimination).
struct SpanCoords {
    rows: BTreeMap<Key, Vec<(usize, SparseVec)>>,
}

impl SpanCoords {
    fn new(basis: &[(Key, SparseVec)]) -> SpanCoords {
        let mut rows: BTreeMap<Key, Vec<(usize, SparseVec)>> = BTreeMap::new();
        for (i, (k, v)) in basis.iter().enumerate() {
            rows.entry(k.clone()).or_default().push((i, v.clone()));
        }
        SpanCoords { rows }
    }

    fn coords(&self, parts: &BTreeMap<Key, SparseVec>) -> SparseVec {
        let mut out = Vec::new();
        for (k, v) in parts {
            let mut w = v.clone();
            if let Some(rows) = self.rows.get(k) {
                for (idx, r) in rows {
                    let p = r[0].0;
                    if let Some((_, c)) = w.iter().find(|(i, _)| *i == p) {
                        let c = c.clone();
                        out.push((*idx, c.clone()));
                        sparse_axpy(&mut w, &-&c, r);
                    }
                }
            }
            debug_assert!(w.is_empty(), "vector outside the submodule");
        }
        out.sort_by_key(|e| e.0);
        out
    }
}

/// Module given by a representation of a Lie superalgebra with weights.
pub fn from_representation(
    name: &str,
    rep: &crate::algebra::Representation,
    g: &crate::algebra::LieSuperAlgebra,
) -> Module {
    Module {
        name: name.into(),
        labels: rep.space.labels().to_vec(),
        parities: rep.space.parities().to_vec(),
        weights: rep.weights.clone(),
        weight_labels: g.weight_labels.clone(),
        actions: rep.action.clone(),
        action_parities: (0..g.dim()).map(|i| g.parity(i)).collect(),
        action_labels: (0..g.dim()).map(|i| g.label(i).to_string()).collect(),
        raising: g.raising.clone(),
        cartan: g.cartan.clone(),
    }
}

/// `S^d(V)` for a representation `V`, on monomials in a weight basis of `V`.
pub fn symmetric_power(
    name: &str,
    rep: &crate::algebra::Representation,
    g: &crate::algebra::LieSuperAlgebra,
    d: usize,
) -> Module {
    use crate::vectorial::{Coords, Field, Poly};
    let n = rep.space.dim();
    let coords = Coords {
        names: rep.space.labels().to_vec(),
        odd: rep.space.parities().to_vec(),
        weights: rep.weights.clone(),
        weight_labels: g.weight_labels.clone(),
    };
    let monos = coords.monomials(d);
    let index: BTreeMap<Vec<u8>, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let actions = rep
        .action
        .iter()
        .map(|a| {
            let mut f = Field::zero(n);
            for k in 0..n {
                for l in 0..n {
                    let c = a.get(l, k);
                    if !c.is_zero() {
                        let mut e = vec![0u8; n];
                        e[l] = 1;
                        f.comps[k].add_scaled(&c, &Poly::mono(e, Scalar::one()));
                    }
                }
            }
            let cols: Vec<SparseVec> = monos
                .iter()
                .map(|m| {
                    let img = f.apply(&Poly::mono(m.clone(), Scalar::one()), &coords);
                    let mut v: SparseVec = img.terms.into_iter().map(|(mm, x)| (index[&mm], x)).collect();
                    v.sort_by_key(|e| e.0);
                    v
                })
                .collect();
            SparseMatrix::from_columns(&cols, monos.len())
        })
        .collect();
    Module {
        name: name.into(),
        labels: monos.iter().map(|m| coords.mono_label(m)).collect(),
        parities: monos.iter().map(|m| coords.mono_parity(m)).collect(),
        weights: monos.iter().map(|m| coords.mono_weight(m)).collect(),
        weight_labels: g.weight_labels.clone(),
        actions,
        action_parities: (0..g.dim()).map(|i| g.parity(i)).collect(),
        action_labels: (0..g.dim()).map(|i| g.label(i).to_string()).collect(),
        raising: g.raising.clone(),
        cartan: g.cartan.clone(),
    }
}

/// The adjoint module.
pub fn adjoint(g: &crate::algebra::LieSuperAlgebra) -> Module {
    let rep = crate::algebra::Representation {
        space: g.space.clone(),
        action: (0..g.dim()).map(|i| g.ad_basis(i)).collect(),
        weights: g.weights.clone(),
    };
    from_representation(&format!("ad({})", g.name), &rep, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;

    #[test]
    fn adjoint_sl3_is_irreducible() {
        let g = classical::sl(3, 0).unwrap();
        let m = adjoint(&g.algebra);
        let r = m.composition_report();
        assert_eq!(r.layers.len(), 1);
        assert_eq!(r.layers[0].constituents.len(), 1);
        assert_eq!(r.hwvs.len(), 1);
        assert!(r.split && r.complete);
    }

    #[test]
    fn adjoint_gl11_weights() {
        let g = classical::gl(1, 1).unwrap();
        let m = adjoint(&g.algebra);
        let ws = m.weight_spaces();
        let zero = vec![Scalar::zero(); 2];
        assert_eq!(ws[&(zero, false)].len(), 2);
        assert_eq!(ws.len(), 3);
    }

    #[test]
    fn gl2_adjoint_splits() {
        let g = classical::gl(2, 0).unwrap();
        let r = adjoint(&g.algebra).composition_report();
        assert_eq!(r.layers.len(), 1);
        assert_eq!(r.layers[0].constituents.len(), 2);
    }

    #[test]
    fn gl11_adjoint_is_not_split() {
        // gl(1|1): center, then a 1|1 layer... the socle is the derived part sl(1|1)
        let g = classical::gl(1, 1).unwrap();
        let r = adjoint(&g.algebra).composition_report();
        assert!(!r.split);
        let total = r.layers.iter().fold(Sdim::new(0, 0), |a, l| a.plus(&l.sdim));
        assert_eq!(total, Sdim::new(2, 2));
    }

    #[test]
    fn generated_submodule_is_idempotent() {
        let g = classical::sl(3, 0).unwrap();
        let m = adjoint(&g.algebra);
        let s = m.submodule_generated(&[vec![(0, Scalar::one())]]);
        let again = m.submodule_generated(&s.basis().into_iter().map(|x| x.1).collect::<Vec<_>>());
        assert_eq!(s.dim(), again.dim());
        assert_eq!(m.submodule_generated(&[]).dim(), 0);
    }
}
