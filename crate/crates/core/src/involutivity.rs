//! Super involutivity of a graded algebra and the vanishing scan it predicts.
//!
//! For a basis `a_1, ..., a_n` of `g_{-1}` put `g^r = ker ad_{a_1} ∩ ... ∩ ker ad_{a_r}`.
//! The algebra is involutive when
//!
//! 1. `g^n = g_{-1}`,
//! 2. `ad_{a_r}(g^{r-1}) = g^{r-1}` for even `a_r`,
//! 3. `ad_{a_r}(g^{r-1}) = g^r` for odd `a_r`,
//!
//! all conditions read degree by degree (`ad_{a_r}` lowers the degree by one).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::grading::GradedAlgebra;
use crate::linalg::{kernel_from_rows, rank_of_vectors, unit_vec, Vector};
use crate::spencer::SpencerComplex;
use crate::superspace::Sdim;

/// `sdim g^r_t` for `r = 0..=n` at one degree `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelChain {
    pub degree: i64,
    pub sdims: Vec<Sdim>,
}

/// A violated condition: `ad_{a_r}` maps `g^{r-1}_{t+1}` onto `image`, not onto `expected`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub condition: u8,
    pub r: usize,
    pub degree: i64,
    pub image: Sdim,
    pub expected: Sdim,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvolutivityReport {
    /// Positions inside `g_{-1}`, in the order used as `a_1, ..., a_n`.
    pub order: Vec<usize>,
    pub labels: Vec<String>,
    pub chain: Vec<KernelChain>,
    /// Highest target degree `t` checked.
    pub checked_through: i64,
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub violations: Vec<Violation>,
    pub involutive: bool,
}

impl InvolutivityReport {
    /// `(t, dim g_{t+1}, sum_{r<n} dim g^r_t)`: both sides of the classical bound.
    pub fn cartan_bound(&self, g: &GradedAlgebra) -> Vec<(i64, usize, usize)> {
        self.chain
            .iter()
            .filter(|c| c.degree >= 0)
            .map(|c| {
                let n = c.sdims.len() - 1;
                (c.degree, g.component(c.degree + 1).len(), c.sdims[..n].iter().map(|s| s.total()).sum())
            })
            .collect()
    }
}

/// Even basis elements of `g_{-1}` first, then odd, each in basis order.
pub fn standard_order(g: &GradedAlgebra) -> Vec<usize> {
    let m = g.component(-1);
    let par: Vec<bool> = m.clone().map(|i| g.algebra.parity(i)).collect();
    let mut order: Vec<usize> = (0..par.len()).filter(|&i| !par[i]).collect();
    order.extend((0..par.len()).filter(|&i| par[i]));
    order
}

/// One parity block of one degree: a subspace given by a basis in component coordinates.
struct Block {
    indices: Vec<usize>,
    basis: Vec<Vector>,
}

fn block(g: &GradedAlgebra, t: i64, odd: bool) -> Vec<usize> {
    g.component(t).filter(|&i| g.algebra.parity(i) == odd).collect()
}

/// Images `ad_a(v)` of vectors in block `src` written in the coordinates of `dst`.
fn images(g: &GradedAlgebra, a: usize, src: &Block, dst: &[usize]) -> Vec<Vector> {
    let pos: std::collections::BTreeMap<usize, usize> = dst.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    src.basis
        .iter()
        .map(|v| {
            let mut out = vec![Scalar::zero(); dst.len()];
            for (c, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in g.algebra.bracket_basis(a, src.indices[c]) {
                    out[pos[j]] += &(x * y);
                }
            }
            out
        })
        .collect()
}

/// Basis of `{ v in span(src) : ad_a v = 0 }`.
fn kernel_in(g: &GradedAlgebra, a: usize, src: &Block, dst: &[usize]) -> Vec<Vector> {
    if src.basis.is_empty() {
        return Vec::new();
    }
    let imgs = images(g, a, src, dst);
    let rows: Vec<Vector> = (0..dst.len()).map(|j| imgs.iter().map(|v| v[j].clone()).collect()).collect();
    let coeffs = if rows.is_empty() {
        (0..imgs.len()).map(|i| unit_vec(imgs.len(), i)).collect()
    } else {
        kernel_from_rows(rows, imgs.len())
    };
    coeffs
        .iter()
        .map(|c| {
            let mut v = vec![Scalar::zero(); src.indices.len()];
            for (b, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    for (i, y) in src.basis[b].iter().enumerate() {
                        v[i] += &(x * y);
                    }
                }
            }
            v
        })
        .collect()
}

/// Evaluates conditions (1)-(3) for target degrees `-1..=depth`.
///
/// `depth = None` means every materialized degree. A truncated algebra needs
/// `g_{t+1}` known for every target `t`, otherwise `CutoffTooLow`.
pub fn is_involutive(g: &GradedAlgebra, order: &[usize], depth: Option<i64>) -> Result<InvolutivityReport> {
    let m = g.component(-1);
    let n = m.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::BadParams(format!("order must permute 0..{n}")));
    }
    let top = match (g.cutoff, depth) {
        (Some(c), Some(d)) if d + 1 > c => {
            return Err(Error::CutoffTooLow(format!("target degree {d} needs g_{} but the cutoff is {c}", d + 1)));
        }
        (Some(c), None) => c - 1,
        (_, Some(d)) => d,
        (None, None) => g.max_degree(),
    };
    if top < -1 {
        return Err(Error::CutoffTooLow(format!("cutoff {:?} leaves nothing to check", g.cutoff)));
    }
    let a: Vec<usize> = order.iter().map(|&i| m.start + i).collect();
    let odd_a: Vec<bool> = a.iter().map(|&i| g.algebra.parity(i)).collect();

    // kernels[t + 1][p][r] = basis of g^r_t in parity p
    let degrees: Vec<i64> = (-1..=top + 1).collect();
    let kernels: Vec<[Vec<Vec<Vector>>; 2]> = degrees
        .par_iter()
        .map(|&t| {
            [false, true].map(|p| {
                let idx = block(g, t, p);
                let mut chain = vec![(0..idx.len()).map(|i| unit_vec(idx.len(), i)).collect::<Vec<_>>()];
                for r in 0..n {
                    let prev = Block { indices: idx.clone(), basis: chain[r].clone() };
                    let next = if t == -1 {
                        prev.basis.clone()
                    } else {
                        kernel_in(g, a[r], &prev, &block(g, t - 1, p ^ odd_a[r]))
                    };
                    chain.push(next);
                }
                chain
            })
        })
        .collect();
    let sd = |t: i64, r: usize| -> Sdim {
        let k = &kernels[(t + 1) as usize];
        Sdim::new(k[0][r].len(), k[1][r].len())
    };

    let mut violations = Vec::new();
    let mut c1 = true;
    for t in 0..=top {
        if sd(t, n).total() != 0 {
            c1 = false;
            violations.push(Violation { condition: 1, r: n, degree: t, image: Sdim::new(0, 0), expected: sd(t, n) });
        }
    }
    let checks: Vec<(usize, i64)> = (0..n).flat_map(|r| (-1..=top).map(move |t| (r, t))).collect();
    let found: Vec<Violation> = checks
        .par_iter()
        .filter_map(|&(r, t)| {
            let mut image = [0usize; 2];
            for p in [false, true] {
                let src_idx = block(g, t + 1, p);
                let src = Block { indices: src_idx, basis: kernels[(t + 2) as usize][p as usize][r].clone() };
                let dst = block(g, t, p ^ odd_a[r]);
                let imgs = images(g, a[r], &src, &dst);
                image[(p ^ odd_a[r]) as usize] = rank_of_vectors(&imgs, dst.len());
            }
            let image = Sdim::new(image[0], image[1]);
            let (condition, expected) = if odd_a[r] { (3u8, sd(t, r + 1)) } else { (2u8, sd(t, r)) };
            (image != expected).then_some(Violation { condition, r: r + 1, degree: t, image, expected })
        })
        .collect();
    violations.extend(found);
    violations.sort_by_key(|v| (v.condition, v.r, v.degree));
    let c2 = !violations.iter().any(|v| v.condition == 2);
    let c3 = !violations.iter().any(|v| v.condition == 3);
    let chain = (-1..=top).map(|t| KernelChain { degree: t, sdims: (0..=n).map(|r| sd(t, r)).collect() }).collect();
    Ok(InvolutivityReport {
        order: order.to_vec(),
        labels: a.iter().map(|&i| g.algebra.label(i).to_string()).collect(),
        chain,
        checked_through: top,
        condition1: c1,
        condition2: c2,
        condition3: c3,
        involutive: c1 && c2 && c3,
        violations,
    })
}

/// One entry `H^{i,k}(g_{-1}; g)`: cochain degree `i`, coefficient degree `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanEntry {
    pub i: usize,
    pub k: i64,
    pub sdim: Sdim,
}

/// `sdim H^{i,k}` for `0 <= i <= i_max`, `0 <= k <= k_max`.
///
/// In Spencer indexing this is `H^{k+i, i}`; it needs `g` through degree `k_max + 1`.
pub fn vanishing_scan(g: &GradedAlgebra, i_max: usize, k_max: i64) -> Result<Vec<ScanEntry>> {
    let cx = SpencerComplex::new(g);
    let pairs: Vec<(usize, i64)> = (0..=i_max).flat_map(|i| (0..=k_max).map(move |k| (i, k))).collect();
    pairs
        .par_iter()
        .map(|&(i, k)| Ok(ScanEntry { i, k, sdim: cx.cohomology_sdim(k + i as i64, i)? }))
        .collect()
}

/// True when every entry of the scan vanishes.
pub fn scan_is_zero(scan: &[ScanEntry]) -> bool {
    scan.iter().all(|e| e.sdim.total() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::prolong::{cartan_prolong, ProlongInput};
    use crate::vectorial;

    #[test]
    fn vect_0_3_is_involutive() {
        let g = vectorial::vect(0, 3, 4).unwrap();
        let r = is_involutive(&g, &standard_order(&g), None).unwrap();
        assert!(r.involutive, "{:?}", r.violations);
        assert!(scan_is_zero(&vanishing_scan(&g, 3, 2).unwrap()));
    }

    #[test]
    fn gl2_prolong_is_involutive() {
        let g = vectorial::vect(2, 0, 4).unwrap();
        let r = is_involutive(&g, &standard_order(&g), Some(2)).unwrap();
        assert!(r.involutive, "{:?}", r.violations);
        for (_, lhs, rhs) in r.cartan_bound(&g) {
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn orthogonal_is_not_involutive() {
        let o = classical::osp_sy(3, 0).unwrap();
        let g = cartan_prolong(&ProlongInput::from_defining("o(3)", &o), 3).unwrap().graded;
        let r = is_involutive(&g, &standard_order(&g), None).unwrap();
        assert!(!r.involutive);
        for (_, lhs, rhs) in r.cartan_bound(&g) {
            assert!(lhs < rhs);
        }
    }

    #[test]
    fn truncation_guard() {
        let g = vectorial::vect(2, 0, 2).unwrap();
        assert!(matches!(is_involutive(&g, &standard_order(&g), Some(4)), Err(Error::CutoffTooLow(_))));
    }
}
