//! Lie superalgebras generated from a Cartan matrix.
//!
//! Chevalley generators satisfy `[H_i, X_j^+-] = +-A_ij X_j^+-` and
//! `[X_i^+, X_j^-] = delta_ij H_i`. A root vector of height at least two is
//! represented by its images under `ad X_j^-` (positive side) or `ad X_j^+`
//! (negative side). An element with all images zero lies in the maximal ideal,
//! so this representation realizes the simple quotient without imposing Serre
//! relations. Structure constants are then read off the adjoint matrices,
//! which are built as supercommutators along the generation history.

use std::collections::BTreeMap;

use crate::algebra::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{rref_rows, to_sparse, SparseMatrix, SparseVec, SubspaceCoords, Vector};
use crate::superspace::{Sdim, SuperSpace};

type Root = Vec<i64>;

#[derive(Clone, Debug)]
struct RootSpace {
    dim: usize,
    parity: bool,
    /// `lower[j]`: columns are images of the basis under `ad X_j^{-sigma}`, in the
    /// basis of the space `root - sigma alpha_j` (or of the Cartan for simple roots).
    lower: Vec<Option<SparseMatrix>>,
    /// Provenance: basis element `k` equals `[X_i^sigma, u]` with `u` basis element of `root - sigma alpha_i`.
    origin: Vec<Option<(usize, usize)>>,
}

/// Result of generation: the algebra plus root bookkeeping.
#[derive(Clone, Debug)]
pub struct CartanMatrixAlgebra {
    pub algebra: LieSuperAlgebra,
    pub cartan_matrix: Vec<Vec<Scalar>>,
    pub gen_parities: Vec<bool>,
    /// Root coordinates (in simple roots) of each basis element; zero for the Cartan.
    pub roots: Vec<Root>,
    pub h: Vec<usize>,
    pub x_plus: Vec<usize>,
    pub x_minus: Vec<usize>,
}

/// A bracket word in the Chevalley generators of one sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Gen(usize),
    Br(Box<Word>, Box<Word>),
}

impl Word {
    /// Parses words such as `[[1,2],[3,4]]`; generators are 1-based.
    pub fn parse(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in word {s:?}")));
        }
        Ok(w)
    }

    pub fn root(&self, rank: usize) -> Root {
        match self {
            Word::Gen(i) => {
                let mut r = vec![0; rank];
                r[*i] = 1;
                r
            }
            Word::Br(a, b) => a.root(rank).iter().zip(b.root(rank)).map(|(x, y)| x + y).collect(),
        }
    }
}

fn parse_word(c: &[char], pos: &mut usize) -> Result<Word> {
    let err = || Error::Parse(format!("malformed bracket word {:?}", c.iter().collect::<String>()));
    if *pos < c.len() && c[*pos] == '[' {
        *pos += 1;
        let a = parse_word(c, pos)?;
        if c.get(*pos) != Some(&',') {
            return Err(err());
        }
        *pos += 1;
        let b = parse_word(c, pos)?;
        if c.get(*pos) != Some(&']') {
            return Err(err());
        }
        *pos += 1;
        Ok(Word::Br(Box::new(a), Box::new(b)))
    } else {
        if c.get(*pos) == Some(&'X') {
            *pos += 1;
        }
        let start = *pos;
        while *pos < c.len() && c[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let n: usize = c[start..*pos].iter().collect::<String>().parse().map_err(|_| err())?;
        if n == 0 {
            return Err(err());
        }
        Ok(Word::Gen(n - 1))
    }
}

fn sgn(neg: bool) -> Scalar {
    if neg {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

fn root_parity(r: &[i64], par: &[bool]) -> bool {
    r.iter().zip(par).fold(false, |acc, (c, p)| acc ^ (*p && c.rem_euclid(2) == 1))
}

fn eval_on_h(cm: &[Vec<Scalar>], i: usize, root: &[i64]) -> Scalar {
    root.iter().enumerate().map(|(k, c)| &cm[i][k] * &Scalar::int(*c)).sum()
}

fn sub_root(a: &[i64], j: usize) -> Root {
    let mut r = a.to_vec();
    r[j] -= 1;
    r
}

fn add_root(a: &[i64], j: usize) -> Root {
    let mut r = a.to_vec();
    r[j] += 1;
    r
}

/// One side (`sigma = +1` positive, `-1` negative) of the triangular decomposition.
struct Side {
    sigma: i64,
    spaces: BTreeMap<Root, RootSpace>,
    order: Vec<Root>,
    /// `raise[(root, i)]`: columns are `[X_i^sigma, b]` for `b` in `root`, in the basis of `root + alpha_i`.
    raise: BTreeMap<(Root, usize), SparseMatrix>,
}

impl Side {
    /// `c_sigma(i)`: `[X_i^{-sigma}, X_i^sigma] = c H_i`.
    fn c(&self, p: bool) -> Scalar {
        if self.sigma > 0 {
            -sgn(p)
        } else {
            Scalar::one()
        }
    }
}

fn generate_side(cm: &[Vec<Scalar>], par: &[bool], sigma: i64, budget: usize) -> Result<Side> {
    let r = cm.len();
    let mut side = Side { sigma, spaces: BTreeMap::new(), order: Vec::new(), raise: BTreeMap::new() };
    // height one
    let mut level: Vec<Root> = Vec::new();
    for i in 0..r {
        let root = Word::Gen(i).root(r);
        let mut lower = vec![None; r];
        let c = side.c(par[i]);
        lower[i] = Some(SparseMatrix::from_columns(&[vec![(i, c)]], r));
        side.spaces.insert(root.clone(), RootSpace { dim: 1, parity: par[i], lower, origin: vec![None] });
        side.order.push(root.clone());
        level.push(root);
    }
    let mut total = r;
    loop {
        // candidates grouped by target root
        let mut cands: BTreeMap<Root, Vec<(usize, usize)>> = BTreeMap::new();
        for beta in &level {
            let dim = side.spaces[beta].dim;
            for i in 0..r {
                let gamma = add_root(beta, i);
                for k in 0..dim {
                    cands.entry(gamma.clone()).or_default().push((i, k));
                }
            }
        }
        let mut next = Vec::new();
        for (gamma, list) in cands {
            let pg = root_parity(&gamma, par);
            // layout of the lowering tuple: blocks for each j with gamma - alpha_j a known space
            let mut offs = vec![None; r];
            let mut width = 0;
            for (j, off) in offs.iter_mut().enumerate() {
                if gamma[j] == 0 {
                    continue;
                }
                if let Some(sp) = side.spaces.get(&sub_root(&gamma, j)) {
                    *off = Some((width, sp.dim));
                    width += sp.dim;
                }
            }
            let mut vecs: Vec<Vector> = Vec::with_capacity(list.len());
            for &(i, k) in &list {
                let beta = sub_root(&gamma, i);
                let bsp = &side.spaces[&beta];
                let mut v = vec![Scalar::zero(); width];
                for j in 0..r {
                    let Some((off, _)) = offs[j] else { continue };
                    let pij = par[i] && par[j];
                    if i == j {
                        // c_sigma(i) * sigma * beta(H_i) * u
                        let coeff = &(&side.c(par[i]) * &Scalar::int(sigma)) * &eval_on_h(cm, i, &beta);
                        v[off + k] += &coeff;
                    }
                    // (-1)^{p_i p_j} [X_i^sigma, L_j(u)]
                    let Some(lj) = &bsp.lower[j] else { continue };
                    let col = lj.transpose();
                    let img: &SparseVec = col.row(k);
                    if img.is_empty() {
                        continue;
                    }
                    let s = sgn(pij);
                    if beta.iter().sum::<i64>() == 1 {
                        // L_j(u) lies in the Cartan: [X_i^sigma, H_m] = -sigma A_mi X_i^sigma
                        let mut acc = Scalar::zero();
                        for (m, x) in img {
                            acc += &(&(x * &cm[*m][i]) * &Scalar::int(-sigma));
                        }
                        // target space gamma - alpha_j = alpha_i has a single basis vector
                        v[off] += &(&s * &acc);
                    } else {
                        let lower_root = sub_root(&beta, j);
                        if let Some(rm) = side.raise.get(&(lower_root, i)) {
                            let img_dense = crate::linalg::to_dense(img, rm.ncols());
                            let up = rm.mul_vec(&img_dense);
                            for (t, x) in up.into_iter().enumerate() {
                                if !x.is_zero() {
                                    v[off + t] += &(&s * &x);
                                }
                            }
                        }
                    }
                }
                vecs.push(v);
            }
            // pick the first independent candidates
            let mut chosen: Vec<usize> = Vec::new();
            let mut chosen_vecs: Vec<Vector> = Vec::new();
            for (c, v) in vecs.iter().enumerate() {
                if v.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut trial = chosen_vecs.clone();
                trial.push(v.clone());
                if rref_rows(trial, width).1.len() == chosen_vecs.len() + 1 {
                    chosen.push(c);
                    chosen_vecs.push(v.clone());
                }
            }
            if chosen.is_empty() {
                continue;
            }
            let dim = chosen.len();
            total += dim;
            if 2 * total + r > budget {
                return Err(Error::GenerationDiverged { got: format!("at least {}", 2 * total + r), expected: budget.to_string() });
            }
            let coords = SubspaceCoords::new(&chosen_vecs, width);
            // raise maps into gamma
            let mut raise_cols: BTreeMap<usize, Vec<(usize, SparseVec)>> = BTreeMap::new();
            for (c, &(i, k)) in list.iter().enumerate() {
                let x = coords.coords(&vecs[c]).expect("candidate lies in the span of chosen candidates");
                raise_cols.entry(i).or_default().push((k, to_sparse(&x)));
            }
            for (i, cols) in raise_cols {
                let beta = sub_root(&gamma, i);
                let bdim = side.spaces[&beta].dim;
                let mut columns = vec![Vec::new(); bdim];
                for (k, col) in cols {
                    columns[k] = col;
                }
                side.raise.insert((beta, i), SparseMatrix::from_columns(&columns, dim));
            }
            let mut lower = vec![None; r];
            for j in 0..r {
                if let Some((off, w)) = offs[j] {
                    let cols: Vec<SparseVec> = chosen_vecs.iter().map(|v| to_sparse(&v[off..off + w])).collect();
                    lower[j] = Some(SparseMatrix::from_columns(&cols, w));
                }
            }
            let origin = chosen.iter().map(|&c| Some(list[c])).collect();
            side.spaces.insert(gamma.clone(), RootSpace { dim, parity: pg, lower, origin });
            side.order.push(gamma.clone());
            next.push(gamma);
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    // raise maps into nonexistent spaces are zero; record empty maps for completeness
    Ok(side)
}

/// Generates the algebra and checks that its super dimension is `expected`.
pub fn build_from_cartan_matrix(
    name: &str,
    cm: Vec<Vec<Scalar>>,
    gen_parities: Vec<bool>,
    expected: Sdim,
) -> Result<CartanMatrixAlgebra> {
    let r = cm.len();
    if cm.iter().any(|row| row.len() != r) || gen_parities.len() != r {
        return Err(Error::BadParams("Cartan matrix must be square and match the parity list".into()));
    }
    let budget = expected.total();
    let pos = generate_side(&cm, &gen_parities, 1, budget)?;
    let neg = generate_side(&cm, &gen_parities, -1, budget)?;
    // basis layout: Cartan, positive roots, negative roots
    let mut labels: Vec<String> = (1..=r).map(|i| format!("H{i}")).collect();
    let mut parities = vec![false; r];
    let mut roots: Vec<Root> = vec![vec![0; r]; r];
    let mut start: BTreeMap<(i64, Root), usize> = BTreeMap::new();
    for side in [&pos, &neg] {
        for root in &side.order {
            let sp = &side.spaces[root];
            start.insert((side.sigma, root.clone()), labels.len());
            for k in 0..sp.dim {
                let sign = if side.sigma > 0 { "+" } else { "-" };
                let coords: Vec<String> = root.iter().map(|c| c.to_string()).collect();
                let suffix = if sp.dim > 1 { format!("#{}", k + 1) } else { String::new() };
                labels.push(format!("X{sign}({}){suffix}", coords.join(",")));
                parities.push(sp.parity);
                roots.push(root.iter().map(|c| c * side.sigma).collect());
            }
        }
    }
    let n = labels.len();
    let got = Sdim::new(parities.iter().filter(|p| !**p).count(), parities.iter().filter(|p| **p).count());
    if got != expected {
        return Err(Error::GenerationDiverged { got: got.to_string(), expected: expected.to_string() });
    }
    let x_plus: Vec<usize> = (0..r).map(|i| start[&(1, Word::Gen(i).root(r))]).collect();
    let x_minus: Vec<usize> = (0..r).map(|i| start[&(-1, Word::Gen(i).root(r))]).collect();

    // adjoint matrices of generators, as triplets
    let gen_ad = |i: usize, sigma: i64| -> SparseMatrix {
        let (same, other) = if sigma > 0 { (&pos, &neg) } else { (&neg, &pos) };
        let xi = if sigma > 0 { x_plus[i] } else { x_minus[i] };
        let mut t: Vec<(usize, usize, Scalar)> = Vec::new();
        // on the Cartan: [X_i^sigma, H_j] = -sigma A_ji X_i^sigma
        for j in 0..r {
            let a = &cm[j][i];
            if !a.is_zero() {
                t.push((xi, j, a * &Scalar::int(-sigma)));
            }
        }
        // on its own side: raise maps
        for root in &same.order {
            let s0 = start[&(same.sigma, root.clone())];
            if let Some(m) = same.raise.get(&(root.clone(), i)) {
                let target = add_root(root, i);
                let t0 = start[&(same.sigma, target)];
                for (row, entries) in (0..m.nrows()).map(|a| (a, m.row(a))) {
                    for (col, x) in entries {
                        t.push((t0 + row, s0 + col, x.clone()));
                    }
                }
            }
        }
        // on the opposite side: lowering maps of that side
        for root in &other.order {
            let s0 = start[&(other.sigma, root.clone())];
            let sp = &other.spaces[root];
            if let Some(m) = &sp.lower[i] {
                let height: i64 = root.iter().sum();
                let t0 = if height == 1 { 0 } else { start[&(other.sigma, sub_root(root, i))] };
                for a in 0..m.nrows() {
                    for (col, x) in m.row(a) {
                        t.push((t0 + a, s0 + col, x.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(n, n, t)
    };
    let mut ad: Vec<Option<SparseMatrix>> = vec![None; n];
    for (k, slot) in ad.iter_mut().enumerate().take(r) {
        let t = (0..n)
            .filter_map(|b| {
                let e = eval_on_h(&cm, k, &roots[b]);
                (!e.is_zero()).then_some((b, b, e))
            })
            .collect();
        *slot = Some(SparseMatrix::from_triplets(n, n, t));
    }
    let gens_plus: Vec<SparseMatrix> = (0..r).map(|i| gen_ad(i, 1)).collect();
    let gens_minus: Vec<SparseMatrix> = (0..r).map(|i| gen_ad(i, -1)).collect();
    for side in [&pos, &neg] {
        let gens = if side.sigma > 0 { &gens_plus } else { &gens_minus };
        for root in &side.order {
            let s0 = start[&(side.sigma, root.clone())];
            let sp = &side.spaces[root];
            for k in 0..sp.dim {
                let m = match sp.origin[k] {
                    None => {
                        let i = root.iter().position(|&c| c == 1).expect("simple root");
                        gens[i].clone()
                    }
                    Some((i, u)) => {
                        let beta = sub_root(root, i);
                        let ub = start[&(side.sigma, beta)] + u;
                        let au = ad[ub].as_ref().expect("generated in height order");
                        let s = if gen_parities[i] && parities[ub] { Scalar::int(-1) } else { Scalar::one() };
                        gens[i].mul(au).add_scaled(&-&s, &au.mul(&gens[i]))
                    }
                };
                ad[s0 + k] = Some(m);
            }
        }
    }
    let ad: Vec<SparseMatrix> = ad.into_iter().map(|m| m.expect("all adjoint matrices built")).collect();
    let mut table = vec![vec![Vec::new(); n]; n];
    for (a, m) in ad.iter().enumerate() {
        let t = m.transpose();
        for (b, slot) in table[a].iter_mut().enumerate() {
            *slot = t.row(b).clone();
        }
    }
    let weights: Vec<Vector> = roots.iter().map(|rt| (0..r).map(|i| eval_on_h(&cm, i, rt)).collect()).collect();
    let weight_labels = (1..=r).map(|i| format!("H{i}")).collect();
    let mut algebra = LieSuperAlgebra::from_table(name, SuperSpace::new(labels, parities), table, weights, weight_labels)?;
    algebra.cartan = (0..r).map(|i| algebra.basis_vector(i)).collect();
    algebra.raising = (0..n).filter(|&b| roots[b].iter().any(|&c| c > 0)).map(|b| algebra.basis_vector(b)).collect();
    Ok(CartanMatrixAlgebra { algebra, cartan_matrix: cm, gen_parities, roots, h: (0..r).collect(), x_plus, x_minus })
}

impl CartanMatrixAlgebra {
    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    /// Coordinates of a bracket word in `X^+` (`positive`) or `X^-` generators.
    pub fn eval_word(&self, w: &Word, positive: bool) -> Vector {
        match w {
            Word::Gen(i) => self.algebra.basis_vector(if positive { self.x_plus[*i] } else { self.x_minus[*i] }),
            Word::Br(a, b) => {
                let x = self.eval_word(a, positive);
                let y = self.eval_word(b, positive);
                self.algebra.bracket(&x, &y).expect("same algebra")
            }
        }
    }

    /// Basis indices of root vectors with the given root.
    pub fn root_space(&self, root: &[i64]) -> Vec<usize> {
        (0..self.algebra.dim()).filter(|&b| self.roots[b] == root && b >= self.rank()).collect()
    }

    /// Grading by the coefficient of the given simple root.
    pub fn node_degrees(&self, node: usize) -> Vec<i64> {
        self.roots.iter().map(|r| r[node]).collect()
    }
}

/// Cartan matrix entries from integers and the indeterminate.
pub fn cm_from(rows: &[&[Scalar]]) -> Vec<Vec<Scalar>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

/// `osp_a(4|2)` Cartan matrices; `which` is 1 (three odd nodes) or 2 (middle node odd).
pub fn osp_alpha_cm(which: u8, a: &Scalar) -> Result<(Vec<Vec<Scalar>>, Vec<bool>)> {
    let z = Scalar::zero();
    let one = Scalar::one();
    let m1 = Scalar::int(-1);
    let two = Scalar::int(2);
    match which {
        1 => {
            let ma = -a;
            let m1a = &m1 - a;
            Ok((cm_from(&[&[z.clone(), one.clone(), m1a.clone()], &[m1.clone(), z.clone(), ma], &[m1a, a.clone(), z]]), vec![true, true, true]))
        }
        2 => Ok((cm_from(&[&[two.clone(), m1.clone(), z.clone()], &[m1.clone(), z.clone(), -a], &[z, m1, two]]), vec![false, true, false])),
        _ => Err(Error::BadParams(format!("osp_a(4|2) Cartan matrix {which} is not implemented"))),
    }
}

pub fn osp_alpha(which: u8, a: &Scalar) -> Result<CartanMatrixAlgebra> {
    let (cm, par) = osp_alpha_cm(which, a)?;
    build_from_cartan_matrix(&format!("osp_a(4|2)[{which}]"), cm, par, Sdim::new(9, 8))
}

/// `ab(3)`: rank 4, second node odd.
pub fn ab3() -> Result<CartanMatrixAlgebra> {
    let i = Scalar::int;
    let cm = vec![
        vec![i(2), i(-1), i(0), i(0)],
        vec![i(-3), i(0), i(1), i(0)],
        vec![i(0), i(-1), i(2), i(-2)],
        vec![i(0), i(0), i(-1), i(2)],
    ];
    build_from_cartan_matrix("ab(3)", cm, vec![false, true, false, false], Sdim::new(24, 16))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_from_cm() {
        let g = build_from_cartan_matrix("sl(2)", vec![vec![Scalar::int(2)]], vec![false], Sdim::new(3, 0)).unwrap();
        assert!(g.algebra.check_jacobi().is_empty());
        let h = g.algebra.basis_vector(0);
        let e = g.algebra.basis_vector(g.x_plus[0]);
        let f = g.algebra.basis_vector(g.x_minus[0]);
        assert_eq!(g.algebra.bracket(&e, &f).unwrap(), h);
        assert_eq!(g.algebra.bracket(&h, &e).unwrap(), e.iter().map(|x| x * &Scalar::int(2)).collect::<Vec<_>>());
    }

    #[test]
    fn sl3_and_divergence() {
        let i = Scalar::int;
        let g = build_from_cartan_matrix("sl(3)", vec![vec![i(2), i(-1)], vec![i(-1), i(2)]], vec![false, false], Sdim::new(8, 0)).unwrap();
        assert!(g.algebra.check_jacobi().is_empty());
        let e = build_from_cartan_matrix("sl(3)", vec![vec![i(2), i(-1)], vec![i(-1), i(2)]], vec![false, false], Sdim::new(6, 0));
        assert!(matches!(e, Err(Error::GenerationDiverged { .. })));
    }

    #[test]
    fn sl21_odd_node() {
        let i = Scalar::int;
        // sl(2|1) with one odd simple root
        let g = build_from_cartan_matrix("sl(2|1)", vec![vec![i(2), i(-1)], vec![i(-1), i(0)]], vec![false, true], Sdim::new(4, 4)).unwrap();
        assert!(g.algebra.check_jacobi().is_empty());
        g.algebra.check_weights().unwrap();
    }

    #[test]
    fn word_parsing() {
        let w = Word::parse("[[X1,X2],[3,X4]]").unwrap();
        assert_eq!(w.root(4), vec![1, 1, 1, 1]);
        assert!(Word::parse("[1,2").is_err());
    }

    #[test]
    fn osp_alpha_symbolic() {
        let g = osp_alpha(2, &Scalar::alpha()).unwrap();
        assert_eq!(g.algebra.sdim(), Sdim::new(9, 8));
        assert!(g.algebra.check_jacobi().is_empty());
        let g1 = osp_alpha(1, &Scalar::ratio(5, 1)).unwrap();
        assert!(g1.algebra.check_jacobi().is_empty());
    }
}
