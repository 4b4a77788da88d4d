//! Minimal projective resolutions, Ext dimensions and algebra-level
//! homological predicates.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::module::{
    hom_dim, is_isomorphic, kernel_of, projective_cover, socle_multiplicities, sub, Module,
    ModuleMap,
};

/// A minimal projective resolution `⋯ → P_1 → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Indecomposable summand labels of each `P_n`.
    pub labels: Vec<Vec<usize>>,
    pub modules: Vec<Module>,
    /// `diffs[n-1] = d_n: P_n → P_{n-1}` for `n ≥ 1`.
    pub diffs: Vec<ModuleMap>,
    pub augmentation: ModuleMap,
    /// True when the last computed syzygy vanished.
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }
}

/// Computes `P_0, …, P_{terms-1}` (fewer if the resolution ends earlier).
pub fn minimal_resolution(m: &Module, terms: usize) -> Resolution {
    let alg = m.algebra().clone();
    let mut labels = Vec::new();
    let mut modules = Vec::new();
    let mut diffs = Vec::new();
    let mut augmentation = None;
    let mut current = m.clone();
    // inclusion of the current syzygy into the previous projective
    let mut incl: Option<ModuleMap> = None;
    let mut complete = m.is_zero();
    if complete {
        augmentation = Some(ModuleMap::zero(&Module::zero(&alg), m));
    }
    while !complete && labels.len() < terms {
        let cov = projective_cover(&current);
        let k = kernel_of(&cov.map);
        match &incl {
            None => augmentation = Some(cov.map.clone()),
            Some(i) => diffs.push(i.compose(&cov.map)),
        }
        labels.push(cov.labels.clone());
        let (kmod, kincl) = sub(&cov.module, &k);
        modules.push(cov.module);
        complete = kmod.is_zero();
        current = kmod;
        incl = Some(kincl);
    }
    Resolution {
        labels,
        modules,
        diffs,
        augmentation: augmentation.unwrap(),
        complete,
    }
}

/// `d^*: Hom(P_{n-1}, N) → Hom(P_n, N)` in generator coordinates, where
/// `Hom(⊕P(λ_i), N) ≅ ⊕ N_{λ_i}`.
fn dual_differential(res: &Resolution, n: usize, target: &Module) -> Matrix {
    let alg = target.algebra();
    let src_labels = &res.labels[n - 1];
    let tgt_labels = &res.labels[n];
    let d = &res.diffs[n - 1];
    let col_offs: Vec<usize> = src_labels
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += target.dim_at(v);
            Some(o)
        })
        .collect();
    let ncols: usize = src_labels.iter().map(|&v| target.dim_at(v)).sum();
    let nrows: usize = tgt_labels.iter().map(|&v| target.dim_at(v)).sum();
    let mut out = Matrix::zeros(nrows, ncols);
    let mut r0 = 0;
    for (j, &mu) in tgt_labels.iter().enumerate() {
        // image of generator j: the j-th generator column at vertex mu
        let gen_col = generator_column(&res.labels[n], j, mu, alg);
        let img = d.blocks[mu].mul_vec(&gen_col);
        // split img across summands of P_{n-1} at vertex mu
        let mut pos = 0;
        for (i, &lam) in src_labels.iter().enumerate() {
            let paths = alg.paths_between(lam, mu);
            for (k, &b) in paths.iter().enumerate() {
                let c = &img[pos + k];
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                // f_i ↦ c · N(b) f_i
                let act = target.basis_action(b);
                for r in 0..act.rows() {
                    for cc in 0..act.cols() {
                        let v = act.get(r, cc);
                        if !num_traits::Zero::is_zero(v) {
                            let cur = out.get(r0 + r, col_offs[i] + cc) + v * c;
                            out.set(r0 + r, col_offs[i] + cc, cur);
                        }
                    }
                }
            }
            pos += paths.len();
        }
        r0 += target.dim_at(mu);
    }
    out
}

/// Coordinates of the generator of summand `j` inside `(⊕ P(λ_i))_μ`.
fn generator_column(labels: &[usize], j: usize, mu: usize, alg: &Arc<Algebra>) -> Vec<Rational> {
    let mut col = Vec::new();
    for (i, &lam) in labels.iter().enumerate() {
        for b in alg.paths_between(lam, mu) {
            let is_gen = i == j && alg.basis()[b].is_empty();
            col.push(if is_gen {
                crate::linalg::q(1)
            } else {
                crate::linalg::q(0)
            });
        }
    }
    col
}

/// `dim Ext^n(M, N)`, from a minimal resolution of `M` of length at most `cap`.
pub fn ext_dim(m: &Module, n_mod: &Module, n: usize, cap: usize) -> Result<usize> {
    m.check_same_algebra(n_mod)?;
    if n == 0 {
        return Ok(hom_dim(m, n_mod));
    }
    let res = minimal_resolution(m, (n + 2).min(cap + 2));
    ext_from_resolution(&res, n_mod, n, cap)
}

pub fn ext_from_resolution(
    res: &Resolution,
    target: &Module,
    n: usize,
    cap: usize,
) -> Result<usize> {
    if n >= res.labels.len() {
        if res.complete {
            return Ok(0);
        }
        if n > cap {
            return Err(Error::ResolutionCapExceeded(cap));
        }
        return Err(Error::ResolutionCapExceeded(res.labels.len()));
    }
    let dim_n: usize = res.labels[n].iter().map(|&v| target.dim_at(v)).sum();
    let rank_in = if n == 0 {
        0
    } else {
        dual_differential(res, n, target).rank()
    };
    let rank_out = if n + 1 < res.labels.len() {
        dual_differential(res, n + 1, target).rank()
    } else {
        0
    };
    Ok(dim_n - rank_in - rank_out)
}

/// Projective dimension, or `None` if the resolution is longer than `cap`.
pub fn projective_dimension(m: &Module, cap: usize) -> Option<usize> {
    let res = minimal_resolution(m, cap + 2);
    if res.complete {
        Some(res.length())
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Finite(usize),
    Exceeded,
}

impl GlobalDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            GlobalDimension::Finite(d) => Some(d),
            GlobalDimension::Exceeded => None,
        }
    }
}

pub fn global_dimension(alg: &Arc<Algebra>, cap: usize) -> GlobalDimension {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        match projective_dimension(&Module::simple(alg, v), cap) {
            Some(d) if d <= cap => best = best.max(d),
            _ => return GlobalDimension::Exceeded,
        }
    }
    GlobalDimension::Finite(best)
}

/// `Some(ν)` with `P(λ) ≅ I(ν(λ))` for all `λ` when the algebra is self-injective.
pub fn is_selfinjective(alg: &Arc<Algebra>) -> Result<Option<Vec<usize>>> {
    let n = alg.num_vertices();
    let injectives: Vec<Module> = (0..n).map(|v| Module::injective(alg, v)).collect();
    let mut nu = Vec::with_capacity(n);
    for v in 0..n {
        let p = Module::projective(alg, v);
        let soc = socle_multiplicities(&p);
        if soc.iter().sum::<usize>() != 1 {
            return Ok(None);
        }
        let mu = soc.iter().position(|&x| x == 1).unwrap();
        if !is_isomorphic(&p, &injectives[mu])? {
            return Ok(None);
        }
        nu.push(mu);
    }
    let mut seen = vec![false; n];
    for &m in &nu {
        if seen[m] {
            return Ok(None);
        }
        seen[m] = true;
    }
    Ok(Some(nu))
}

/// Cartan matrix inverse, for the Euler form `⟨L(λ), L(μ)⟩ = (C⁻¹)_{μλ}`.
pub fn inverse_cartan(alg: &Algebra) -> Option<Matrix> {
    let c = alg.cartan_matrix();
    let n = c.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, crate::linalg::q(c[i][j] as i64));
        }
    }
    m.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Quiver, RelationElement};

    fn sl2() -> Arc<Algebra> {
        build_algebra(
            &Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]),
            &[RelationElement::monomial(&["a", "b"])],
            12,
        )
        .unwrap()
    }

    #[test]
    fn sl2_resolutions() {
        let a = sl2();
        let l1 = Module::simple(&a, 0);
        let l2 = Module::simple(&a, 1);
        let r = minimal_resolution(&l1, 10);
        assert!(r.complete);
        assert_eq!(r.labels, vec![vec![0], vec![1], vec![0]]);
        assert_eq!(ext_dim(&l1, &l2, 1, 12).unwrap(), 1);
        assert_eq!(ext_dim(&l1, &l1, 2, 12).unwrap(), 1);
        assert_eq!(ext_dim(&l2, &l2, 2, 12).unwrap(), 0);
        assert_eq!(global_dimension(&a, 20), GlobalDimension::Finite(2));
        for d in 1..4 {
            assert_eq!(ext_dim(&Module::projective(&a, 1), &l1, d, 12).unwrap(), 0);
        }
    }

    #[test]
    fn selfinjective_checks() {
        let a = sl2();
        assert_eq!(is_selfinjective(&a).unwrap(), None);
        let dn = build_algebra(
            &Quiver::new(&["1"], &[("x", "1", "1")]),
            &[RelationElement::monomial(&["x", "x"])],
            12,
        )
        .unwrap();
        assert_eq!(is_selfinjective(&dn).unwrap(), Some(vec![0]));
        assert_eq!(global_dimension(&dn, 5), GlobalDimension::Exceeded);
        let l = Module::simple(&dn, 0);
        assert!(matches!(
            ext_dim(&l, &l, 8, 5),
            Err(Error::ResolutionCapExceeded(_))
        ));
        assert_eq!(ext_dim(&l, &l, 3, 5).unwrap(), 1);
    }
}
