//! Spencer cochains `C^{k,s} = g_{k-s} (x) Lambda^s(g_{-1}')`, the differential, and cohomology.
//!
//! `Lambda(g_{-1}')` is modelled as the supercommutative algebra on `theta^i` with
//! shifted parity `p(a_i) + 1`, so `d` is odd and every sign is a Koszul sign.

use std::collections::BTreeMap;
use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{sign, Scalar};
use crate::grading::GradedAlgebra;
use crate::linalg::{kernel_from_rows, to_dense, Quotient, SparseMatrix, SparseVec, Vector};
use crate::modules::Module;
use crate::superspace::Sdim;
use crate::vectorial::{Coords, Field, Monomial, Poly};

/// A graded `g_{-1}`-module supplying coefficients.
pub trait Coefficients: Sync {
    /// Basis indices of degree `d`; `MissingComponent` beyond the known range.
    fn component(&self, d: i64) -> Result<Range<usize>>;
    fn parity(&self, m: usize) -> bool;
    fn weight(&self, m: usize) -> Vector;
    fn label(&self, m: usize) -> String;
    /// `a_i . m` for the `i`-th basis vector of `g_{-1}`.
    fn act_gm1(&self, i: usize, m: usize) -> SparseVec;
    /// `x . m` for the `x`-th basis vector of `g_0`.
    fn act_g0(&self, x: usize, m: usize) -> SparseVec;
}

impl Coefficients for GradedAlgebra {
    fn component(&self, d: i64) -> Result<Range<usize>> {
        if d < -1 {
            return Ok(0..0);
        }
        if self.cutoff.is_some_and(|c| d > c) {
            return Err(Error::MissingComponent(d as i32));
        }
        Ok(GradedAlgebra::component(self, d))
    }
    fn parity(&self, m: usize) -> bool {
        self.algebra.parity(m)
    }
    fn weight(&self, m: usize) -> Vector {
        self.algebra.weights[m].clone()
    }
    fn label(&self, m: usize) -> String {
        self.algebra.label(m).to_string()
    }
    fn act_gm1(&self, i: usize, m: usize) -> SparseVec {
        self.algebra.bracket_basis(GradedAlgebra::component(self, -1).start + i, m).clone()
    }
    fn act_g0(&self, x: usize, m: usize) -> SparseVec {
        self.algebra.bracket_basis(GradedAlgebra::component(self, 0).start + x, m).clone()
    }
}

/// The one-dimensional trivial module in degree 0.
pub struct TrivialModule {
    pub weight_len: usize,
}

impl Coefficients for TrivialModule {
    fn component(&self, d: i64) -> Result<Range<usize>> {
        Ok(if d == 0 { 0..1 } else { 0..0 })
    }
    fn parity(&self, _: usize) -> bool {
        false
    }
    fn weight(&self, _: usize) -> Vector {
        vec![Scalar::zero(); self.weight_len]
    }
    fn label(&self, _: usize) -> String {
        "1".into()
    }
    fn act_gm1(&self, _: usize, _: usize) -> SparseVec {
        Vec::new()
    }
    fn act_g0(&self, _: usize, _: usize) -> SparseVec {
        Vec::new()
    }
}

/// A cochain: coefficient basis index and `theta` monomial.
pub type CochainKey = (usize, Monomial);
pub type Cochain = BTreeMap<CochainKey, Scalar>;

/// Basis of `C^{k,s}` with weight and reported parity `p(m) + sum p(a_i)`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub k: i64,
    pub s: usize,
    pub basis: Vec<CochainKey>,
    pub parities: Vec<bool>,
    pub weights: Vec<Vector>,
    index: BTreeMap<CochainKey, usize>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sdim(&self) -> Sdim {
        let odd = self.parities.iter().filter(|p| **p).count();
        Sdim::new(self.dim() - odd, odd)
    }

    pub fn index_of(&self, key: &CochainKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn to_vector(&self, c: &Cochain) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (key, x) in c {
            v[self.index[key]] = x.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[Scalar]) -> Cochain {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (self.basis[i].clone(), x.clone())).collect()
    }

    /// Indices grouped by (weight, parity); the differential and the torus respect the blocks.
    pub fn blocks(&self) -> BTreeMap<(Vector, bool), Vec<usize>> {
        let mut out: BTreeMap<(Vector, bool), Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry((self.weights[i].clone(), self.parities[i])).or_default().push(i);
        }
        out
    }
}

/// One cohomology class with a cocycle representative.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    pub k: i64,
    pub s: usize,
    pub parity: bool,
    pub weight: Vector,
    pub representative: Cochain,
}

/// `H^{k,s}` per (weight, parity) block.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub k: i64,
    pub s: usize,
    pub space: CochainSpace,
    pub blocks: Vec<CohomologyBlock>,
    pub classes: Vec<CohomologyClass>,
}

#[derive(Clone, Debug)]
pub struct CohomologyBlock {
    pub weight: Vector,
    pub parity: bool,
    pub indices: Vec<usize>,
    pub quotient: Quotient,
    pub first_class: usize,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn sdim(&self) -> Sdim {
        let odd = self.classes.iter().filter(|c| c.parity).count();
        Sdim::new(self.dim() - odd, odd)
    }

    /// Class coordinates of a cocycle.
    pub fn class_coords(&self, c: &Cochain) -> Result<Vector> {
        let v = self.space.to_vector(c);
        let mut out = vec![Scalar::zero(); self.dim()];
        for b in &self.blocks {
            let local: Vector = b.indices.iter().map(|&i| v[i].clone()).collect();
            if local.iter().all(Scalar::is_zero) {
                continue;
            }
            if b.quotient.dim() == 0 {
                continue;
            }
            for (j, x) in b.quotient.class_coords(&local).into_iter().enumerate() {
                out[b.first_class + j] = x;
            }
        }
        Ok(out)
    }

    /// True when the cocycle `c` is a coboundary.
    pub fn is_exact(&self, c: &Cochain) -> bool {
        let v = self.space.to_vector(c);
        self.blocks.iter().all(|b| {
            let local: Vector = b.indices.iter().map(|&i| v[i].clone()).collect();
            local.iter().all(Scalar::is_zero) || b.quotient.is_trivial(&local)
        })
    }
}

/// The Spencer complex of a graded algebra with coefficients in itself or a module.
pub struct SpencerComplex<'a> {
    pub graded: &'a GradedAlgebra,
    coeff: &'a dyn Coefficients,
    theta: Coords,
    gm1_parity: Vec<bool>,
    /// `[x, a_l] = sum_j act[x][l] ...` as `(j, c)` lists, `x` in `g_0`.
    g0_on_gm1: Vec<Vec<SparseVec>>,
}

impl<'a> SpencerComplex<'a> {
    pub fn new(graded: &'a GradedAlgebra) -> SpencerComplex<'a> {
        SpencerComplex::with_coefficients(graded, graded)
    }

    pub fn with_coefficients(graded: &'a GradedAlgebra, coeff: &'a dyn Coefficients) -> SpencerComplex<'a> {
        let g = &graded.algebra;
        let m = GradedAlgebra::component(graded, -1);
        let z = GradedAlgebra::component(graded, 0);
        let gm1_parity: Vec<bool> = m.clone().map(|i| g.parity(i)).collect();
        let k = g.weight_labels.len();
        let theta = Coords {
            names: m.clone().map(|i| format!("d{}", g.label(i))).collect(),
            odd: gm1_parity.iter().map(|p| !p).collect(),
            weights: m.clone().map(|i| g.weights[i].iter().map(|x| -x).collect()).collect(),
            weight_labels: g.weight_labels.clone(),
        };
        debug_assert!(theta.weights.iter().all(|w| w.len() == k));
        let g0_on_gm1 = z
            .map(|x| {
                m.clone()
                    .map(|l| g.bracket_basis(x, l).iter().map(|(j, c)| (j - m.start, c.clone())).collect())
                    .collect()
            })
            .collect();
        SpencerComplex { graded, coeff, theta, gm1_parity, g0_on_gm1 }
    }

    pub fn n(&self) -> usize {
        self.gm1_parity.len()
    }

    pub fn theta(&self) -> &Coords {
        &self.theta
    }

    pub fn cochains(&self, k: i64, s: usize) -> Result<CochainSpace> {
        let r = self.coeff.component(k - s as i64)?;
        let monos = self.theta.monomials(s);
        let mut basis = Vec::new();
        let mut parities = Vec::new();
        let mut weights = Vec::new();
        for m in r {
            let pm = self.coeff.parity(m);
            let wm = self.coeff.weight(m);
            for om in &monos {
                let pw = om.iter().zip(&self.gm1_parity).fold(false, |acc, (e, p)| acc ^ (*p && e % 2 == 1));
                let ww = self.theta.mono_weight(om);
                basis.push((m, om.clone()));
                parities.push(pm ^ pw);
                weights.push(wm.iter().zip(&ww).map(|(a, b)| a + b).collect());
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Ok(CochainSpace { k, s, basis, parities, weights, index })
    }

    /// `d(m (x) w) = sum_i (-1)^{p(m)(p_i+1)} (a_i . m) (x) theta^i w`.
    pub fn d_basis(&self, key: &CochainKey) -> Cochain {
        let (m, om) = key;
        let pm = self.coeff.parity(*m);
        let mut out = Cochain::new();
        let w = Poly::mono(om.clone(), Scalar::one());
        for i in 0..self.n() {
            let img = self.coeff.act_gm1(i, *m);
            if img.is_empty() {
                continue;
            }
            let mut t = vec![0u8; self.n()];
            t[i] = 1;
            let prod = Poly::mono(t, Scalar::one()).mul(&w, &self.theta);
            let s = sign(pm && !self.gm1_parity[i]);
            for (mono, c) in &prod.terms {
                let cs = &s * c;
                for (j, x) in &img {
                    add_to(&mut out, (*j, mono.clone()), &(&cs * x));
                }
            }
        }
        out
    }

    pub fn d(&self, c: &Cochain) -> Cochain {
        let mut out = Cochain::new();
        for (key, x) in c {
            for (k2, y) in self.d_basis(key) {
                add_to(&mut out, k2, &(x * &y));
            }
        }
        out
    }

    /// Matrix of `d: C^{k,s} -> C^{k,s+1}`.
    pub fn differential(&self, k: i64, s: usize) -> Result<SparseMatrix> {
        let src = self.cochains(k, s)?;
        let dst = self.cochains(k, s + 1)?;
        let cols: Vec<SparseVec> = src
            .basis
            .par_iter()
            .map(|key| {
                let mut v: SparseVec = self.d_basis(key).into_iter().map(|(k2, x)| (dst.index[&k2], x)).collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Ok(SparseMatrix::from_columns(&cols, dst.dim()))
    }

    /// `x . theta^j` for a basis element `x` of `g_0`, as a polynomial in `theta`.
    fn act_theta(&self, x: usize, j: usize) -> Poly {
        let px = self.graded.algebra.parity(GradedAlgebra::component(self.graded, 0).start + x);
        let mut out = Poly::zero();
        for l in 0..self.n() {
            for (jj, c) in &self.g0_on_gm1[x][l] {
                if *jj == j {
                    let mut t = vec![0u8; self.n()];
                    t[l] = 1;
                    let coef = -&(&sign(px && self.gm1_parity[j]) * c);
                    out.add_scaled(&coef, &Poly::mono(t, Scalar::one()));
                }
            }
        }
        out
    }

    /// Action of the `x`-th basis element of `g_0` on cochains.
    pub fn act_g0(&self, x: usize, c: &Cochain) -> Cochain {
        let px = self.graded.algebra.parity(GradedAlgebra::component(self.graded, 0).start + x);
        let field = Field { comps: (0..self.n()).map(|j| self.act_theta(x, j)).collect() };
        let mut out = Cochain::new();
        for ((m, om), a) in c {
            for (j, y) in self.coeff.act_g0(x, *m) {
                add_to(&mut out, (j, om.clone()), &(a * &y));
            }
            let s = sign(px && self.coeff.parity(*m));
            let dw = field.apply(&Poly::mono(om.clone(), Scalar::one()), &self.theta);
            for (mono, y) in dw.terms {
                add_to(&mut out, (*m, mono), &(&(a * &y) * &s));
            }
        }
        out
    }

    /// `H^{k,s}` with representatives, computed block by block.
    pub fn cohomology(&self, k: i64, s: usize) -> Result<Cohomology> {
        let space = self.cochains(k, s)?;
        // the target and source components must be known
        self.coeff.component(k - s as i64 - 1)?;
        let prev = if s > 0 { Some(self.cochains(k, s - 1)?) } else { None };
        let prev_blocks = prev.as_ref().map(|p| p.blocks()).unwrap_or_default();
        let blocks: Vec<((Vector, bool), Vec<usize>)> = space.blocks().into_iter().collect();
        let computed: Vec<(Vector, bool, Vec<usize>, Quotient)> = blocks
            .into_par_iter()
            .map(|((w, p), idx)| {
                let local: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &b)| (b, a)).collect();
                let mut rows: BTreeMap<CochainKey, Vector> = BTreeMap::new();
                for (col, &i) in idx.iter().enumerate() {
                    for (key, x) in self.d_basis(&space.basis[i]) {
                        rows.entry(key).or_insert_with(|| vec![Scalar::zero(); idx.len()])[col] = x;
                    }
                }
                let z = if rows.is_empty() {
                    (0..idx.len()).map(|i| crate::linalg::unit_vec(idx.len(), i)).collect()
                } else {
                    kernel_from_rows(rows.into_values().collect(), idx.len())
                };
                let mut b = Vec::new();
                if let (Some(pv), Some(pidx)) = (prev.as_ref(), prev_blocks.get(&(w.clone(), p))) {
                    for &j in pidx {
                        let img = self.d_basis(&pv.basis[j]);
                        let sv: SparseVec = img.into_iter().map(|(key, x)| (local[&space.index[&key]], x)).collect();
                        b.push(to_dense(&sv, idx.len()));
                    }
                }
                let q = Quotient::new(&z, &b, idx.len());
                (w, p, idx, q)
            })
            .collect();
        let mut out_blocks = Vec::new();
        let mut classes = Vec::new();
        for (w, p, idx, q) in computed {
            let first = classes.len();
            for r in q.representatives() {
                let rep: Cochain =
                    r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(a, x)| (space.basis[idx[a]].clone(), x.clone())).collect();
                classes.push(CohomologyClass { k, s, parity: p, weight: w.clone(), representative: rep });
            }
            out_blocks.push(CohomologyBlock { weight: w, parity: p, indices: idx, quotient: q, first_class: first });
        }
        Ok(Cohomology { k, s, space, blocks: out_blocks, classes })
    }

    /// Only the dimension of `H^{k,s}`, via ranks.
    pub fn cohomology_sdim(&self, k: i64, s: usize) -> Result<Sdim> {
        Ok(self.cohomology(k, s)?.sdim())
    }

    /// `H^{k,s}` as a `g_0`-module.
    pub fn module(&self, h: &Cohomology) -> Result<Module> {
        let g = &self.graded.algebra;
        let z = GradedAlgebra::component(self.graded, 0);
        let actions: Vec<SparseMatrix> = z
            .clone()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&xi| -> Result<SparseMatrix> {
                let x = xi - z.start;
                let cols: Vec<SparseVec> = h
                    .classes
                    .iter()
                    .map(|c| -> Result<SparseVec> {
                        let img = self.act_g0(x, &c.representative);
                        Ok(crate::linalg::to_sparse(&h.class_coords(&img)?))
                    })
                    .collect::<Result<_>>()?;
                Ok(SparseMatrix::from_columns(&cols, h.dim()))
            })
            .collect::<Result<_>>()?;
        let raising = self.graded.g0_raising().into_iter().map(|v| v[z.clone()].to_vec()).collect();
        let cartan = g
            .cartan
            .iter()
            .filter(|v| v.iter().enumerate().all(|(i, x)| x.is_zero() || z.contains(&i)))
            .map(|v| v[z.clone()].to_vec())
            .collect();
        Ok(Module {
            name: format!("H^{{{},{}}}({})", h.k, h.s, self.graded.name),
            labels: h.classes.iter().map(|c| self.cochain_label(&c.representative)).collect(),
            parities: h.classes.iter().map(|c| c.parity).collect(),
            weights: h.classes.iter().map(|c| c.weight.clone()).collect(),
            weight_labels: g.weight_labels.clone(),
            actions,
            action_parities: z.clone().map(|i| g.parity(i)).collect(),
            action_labels: z.map(|i| g.label(i).to_string()).collect(),
            raising,
            cartan,
        })
    }

    /// `m dY_i dY_j`-style rendering.
    pub fn cochain_label(&self, c: &Cochain) -> String {
        if c.is_empty() {
            return "0".into();
        }
        c.iter()
            .map(|((m, om), x)| {
                let coef = if x.is_one() { String::new() } else { format!("({x})") };
                let t = if om.iter().all(|&e| e == 0) { String::new() } else { format!(" {}", self.theta.mono_label(om)) };
                let l = self.coeff.label(*m);
                let l = if l.contains('+') || l.starts_with('-') { format!("[{l}]") } else { l };
                format!("{coef}{l}{t}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Sum over `s` of `(-1)^s dim C^{k,s}` for all `s` with a nonzero component.
    pub fn euler_cochains(&self, k: i64) -> Result<i64> {
        let mut e = 0i64;
        for s in 0..=(k + 1).max(0) as usize {
            let d = self.cochains(k, s)?.dim() as i64;
            e += if s % 2 == 0 { d } else { -d };
        }
        Ok(e)
    }

    pub fn euler_cohomology(&self, k: i64) -> Result<i64> {
        let mut e = 0i64;
        for s in 0..=(k + 1).max(0) as usize {
            let d = self.cohomology(k, s)?.dim() as i64;
            e += if s % 2 == 0 { d } else { -d };
        }
        Ok(e)
    }
}

fn add_to(c: &mut Cochain, key: CochainKey, x: &Scalar) {
    if x.is_zero() {
        return;
    }
    let e = c.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += x;
    if e.is_zero() {
        c.remove(&key);
    }
}

/// Structure functions `H^{k,2}` for `k = 1..=k_max`.
pub fn structure_functions(graded: &GradedAlgebra, k_max: i64) -> Result<Vec<Cohomology>> {
    let cx = SpencerComplex::new(graded);
    (1..=k_max).map(|k| cx.cohomology(k, 2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::prolong::{cartan_prolong, ProlongInput};
    use crate::vectorial;

    fn check_d_squared(g: &GradedAlgebra, k: i64) {
        let cx = SpencerComplex::new(g);
        for s in 0..=(k + 1) as usize {
            let Ok(sp) = cx.cochains(k, s) else { continue };
            for key in &sp.basis {
                let dd = cx.d(&cx.d_basis(key));
                assert!(dd.is_empty(), "d^2 != 0 on {key:?}");
            }
        }
    }

    fn check_equivariance(g: &GradedAlgebra, k: i64, s: usize) {
        let cx = SpencerComplex::new(g);
        let sp = cx.cochains(k, s).unwrap();
        let z = GradedAlgebra::component(g, 0);
        for x in 0..z.len() {
            let px = g.algebra.parity(z.start + x);
            for key in &sp.basis {
                let c: Cochain = [(key.clone(), Scalar::one())].into_iter().collect();
                let lhs = cx.d(&cx.act_g0(x, &c));
                let mut rhs = cx.act_g0(x, &cx.d(&c));
                for v in rhs.values_mut() {
                    *v = &*v * &sign(px);
                }
                assert_eq!(lhs, rhs, "equivariance fails for {} on {key:?}", g.algebra.label(z.start + x));
            }
        }
    }

    #[test]
    fn d_squared_and_equivariance_super() {
        let g = vectorial::vect(0, 2, 5).unwrap();
        for k in 0..3 {
            check_d_squared(&g, k);
        }
        check_equivariance(&g, 1, 1);
        check_equivariance(&g, 2, 2);
        let h = vectorial::h(1, 2, 2).unwrap();
        check_d_squared(&h, 2);
        check_equivariance(&h, 1, 2);
    }

    #[test]
    fn gl2_first_differential_injective() {
        let gl2 = classical::gl(2, 0).unwrap();
        let input = ProlongInput::from_defining("gl2", &gl2);
        let g = cartan_prolong(&input, 2).unwrap().graded;
        // C^{1,1} = gl(2) -> C^{1,2}... the injection is C^{0,0}... d: g_0 -> g_{-1} (x) g_{-1}'
        let d = SpencerComplex::new(&g).differential(0, 0).unwrap();
        assert_eq!((d.ncols(), d.nrows()), (4, 4));
        assert_eq!(d.rank(), 4);
    }

    #[test]
    fn trivial_coefficients_give_exterior_powers() {
        let g = vectorial::vect(0, 2, 5).unwrap();
        let t = TrivialModule { weight_len: g.algebra.weight_labels.len() };
        let cx = SpencerComplex::with_coefficients(&g, &t);
        for s in 0..4 {
            let h = cx.cohomology(s as i64, s).unwrap();
            assert_eq!(h.dim(), cx.cochains(s as i64, s).unwrap().dim());
        }
        assert_eq!(cx.cohomology(3, 3).unwrap().sdim(), Sdim::new(0, 4));
    }

    #[test]
    fn vect_vanishes() {
        let g = vectorial::vect(0, 3, 5).unwrap();
        for h in structure_functions(&g, 4).unwrap() {
            assert_eq!(h.dim(), 0, "k = {}", h.k);
        }
    }

    #[test]
    fn svect_order_n() {
        let g = vectorial::svect(0, 3, 5).unwrap();
        let dims: Vec<Sdim> = structure_functions(&g, 4).unwrap().iter().map(Cohomology::sdim).collect();
        assert_eq!(dims, vec![Sdim::new(0, 0), Sdim::new(0, 0), Sdim::new(0, 1), Sdim::new(0, 0)]);
    }

    #[test]
    fn riemann_tensor_count() {
        let so5 = classical::osp_sy(5, 0).unwrap();
        let input = ProlongInput::from_defining("o5", &so5);
        let g = cartan_prolong(&input, 2).unwrap().graded;
        let cx = SpencerComplex::new(&g);
        assert_eq!(cx.cohomology(2, 2).unwrap().dim(), 50);
        assert_eq!(cx.euler_cochains(2).unwrap(), cx.euler_cohomology(2).unwrap());
    }
}
