//! Bounded complexes with homological indexing (`d_n: C_n → C_{n-1}`),
//! projective resolutions of complexes, homs in the homotopy category and
//! the Serre duality table.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homological::{global_dimension, inverse_cartan};
use crate::linalg::{q, Matrix, Rational, Subspace};
use crate::module::{
    hom, image_of, kernel_of, map_from_projectives, projective_cover, quotient, quotient_lift, sub, HomSpace,
    Module, ModuleMap, Submodule,
};
use crate::serre::ProjFunctorTable;

pub const DEFAULT_COMPLEX_CAP: usize = 20;

/// `C_lo ← C_{lo+1} ← ⋯ ← C_hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedComplex {
    pub alg: Arc<Algebra>,
    pub lo: i64,
    pub objects: Vec<Module>,
    /// `diffs[k] = d_{lo+k+1}: C_{lo+k+1} → C_{lo+k}`
    pub diffs: Vec<ModuleMap>,
    /// Indecomposable projective summands of each term, when known.
    pub proj_labels: Option<Vec<Vec<usize>>>,
}

impl BoundedComplex {
    pub fn zero(alg: &Arc<Algebra>) -> Self {
        BoundedComplex {
            alg: alg.clone(),
            lo: 0,
            objects: vec![],
            diffs: vec![],
            proj_labels: Some(vec![]),
        }
    }

    pub fn stalk(m: &Module, degree: i64) -> Self {
        BoundedComplex {
            alg: m.algebra().clone(),
            lo: degree,
            objects: vec![m.clone()],
            diffs: vec![],
            proj_labels: None,
        }
    }

    /// `P(λ)` in one degree, with its label recorded.
    pub fn projective_stalk(alg: &Arc<Algebra>, v: usize, degree: i64) -> Self {
        BoundedComplex {
            proj_labels: Some(vec![vec![v]]),
            ..Self::stalk(&Module::projective(alg, v), degree)
        }
    }

    /// `(C[k])_i = C_{i-k}`, differentials multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 1 { q(-1) } else { q(1) };
        BoundedComplex {
            alg: self.alg.clone(),
            lo: self.lo + k,
            objects: self.objects.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
            proj_labels: self.proj_labels.clone(),
        }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.objects.iter().all(Module::is_zero)
    }

    pub fn object(&self, i: i64) -> Module {
        if i < self.lo || i > self.hi() {
            Module::zero(&self.alg)
        } else {
            self.objects[(i - self.lo) as usize].clone()
        }
    }

    /// `d_i: C_i → C_{i-1}`.
    pub fn diff(&self, i: i64) -> ModuleMap {
        if i <= self.lo || i > self.hi() {
            ModuleMap::zero(&self.object(i), &self.object(i - 1))
        } else {
            self.diffs[(i - self.lo - 1) as usize].clone()
        }
    }

    pub fn is_complex(&self) -> bool {
        (self.lo + 2..=self.hi()).all(|i| self.diff(i - 1).compose(&self.diff(i)).is_zero())
    }

    /// Dimension vector of `H_i`.
    pub fn homology_dims(&self, i: i64) -> Vec<usize> {
        let z = kernel_of(&self.diff(i));
        let b = image_of(&self.diff(i + 1));
        z.dims().iter().zip(b.dims()).map(|(a, c)| a - c).collect()
    }

    pub fn homology_total(&self, i: i64) -> usize {
        self.homology_dims(i).iter().sum()
    }
}

/// Per-degree maps `X_i → Y_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    pub lo: i64,
    pub maps: Vec<ModuleMap>,
}

impl ChainMap {
    pub fn at(&self, i: i64, src: &BoundedComplex, tgt: &BoundedComplex) -> ModuleMap {
        if i < self.lo || i >= self.lo + self.maps.len() as i64 {
            ModuleMap::zero(&src.object(i), &tgt.object(i))
        } else {
            self.maps[(i - self.lo) as usize].clone()
        }
    }

    pub fn is_chain_map(&self, src: &BoundedComplex, tgt: &BoundedComplex) -> bool {
        let lo = src.lo.min(tgt.lo);
        let hi = src.hi().max(tgt.hi());
        (lo..=hi + 1).all(|i| tgt.diff(i).compose(&self.at(i, src, tgt)) == self.at(i - 1, src, tgt).compose(&src.diff(i)))
    }
}

fn select_rows(f: &ModuleMap, starts: &[usize], lens: &[usize]) -> ModuleMap {
    ModuleMap {
        blocks: f
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| b.block(starts[v], 0, lens[v], b.cols()))
            .collect(),
    }
}

/// A degreewise projective complex `P` with a quasi-isomorphism `P → C`,
/// built degree by degree so that the mapping cone becomes acyclic.
pub fn projective_resolution_complex(c: &BoundedComplex, cap: usize) -> Result<(BoundedComplex, ChainMap)> {
    let alg = c.alg.clone();
    let nv = alg.num_vertices();
    if c.objects.is_empty() || c.is_zero() {
        return Ok((BoundedComplex::zero(&alg), ChainMap { lo: 0, maps: vec![] }));
    }
    let lo = c.lo;
    let width = (c.hi() - c.lo) as usize;
    let mut ps: Vec<Module> = Vec::new();
    let mut labels: Vec<Vec<usize>> = Vec::new();
    let mut dps: Vec<ModuleMap> = Vec::new();
    let mut fs: Vec<ModuleMap> = Vec::new();
    let zero = Module::zero(&alg);
    let mut n = lo;
    loop {
        if (n - lo) as usize > width + cap + 1 {
            return Err(Error::ResolutionCapExceeded(cap));
        }
        let k = (n - lo) as usize;
        let p_prev = if k >= 1 { ps[k - 1].clone() } else { zero.clone() };
        let p_prev2 = if k >= 2 { ps[k - 2].clone() } else { zero.clone() };
        let cn = c.object(n);
        if n > c.hi() && p_prev.is_zero() {
            break;
        }
        // cone_n = P_{n-1} ⊕ C_n → P_{n-2} ⊕ C_{n-1}, (p, x) ↦ (−d p, f p + d x)
        let cn1 = c.object(n - 1);
        let d_prev = if k >= 2 { dps[k - 2].clone() } else { ModuleMap::zero(&p_prev, &p_prev2) };
        let f_prev = if k >= 1 { fs[k - 1].clone() } else { ModuleMap::zero(&p_prev, &cn1) };
        let cone = Module::direct_sum(&alg, &[p_prev.clone(), cn.clone()]);
        let dcone = ModuleMap::from_components(
            &[p_prev.clone(), cn.clone()],
            &[p_prev2.clone(), cn1.clone()],
            &[
                vec![d_prev.scale(&q(-1)), ModuleMap::zero(&cn, &p_prev2)],
                vec![f_prev, c.diff(n)],
            ],
            nv,
        );
        let z = kernel_of(&dcone);
        let (zmod, zincl) = sub(&cone, &z);
        let cn_next = c.object(n + 1);
        let boundary = ModuleMap::from_components(
            std::slice::from_ref(&cn_next),
            &[p_prev.clone(), cn.clone()],
            &[vec![ModuleMap::zero(&cn_next, &p_prev)], vec![c.diff(n + 1)]],
            nv,
        );
        let b_cone = image_of(&boundary);
        let b_in_z = Submodule {
            spaces: (0..nv)
                .map(|v| {
                    let vecs: Vec<Vec<Rational>> =
                        b_cone.spaces[v].basis_vectors().iter().map(|x| z.spaces[v].coords(x)).collect();
                    Subspace::from_vectors(zmod.dim_at(v), &vecs)
                })
                .collect(),
        };
        let (hq, _) = quotient(&zmod, &b_in_z);
        let cov = projective_cover(&hq);
        let lifted: Vec<Vec<Rational>> = cov
            .labels
            .iter()
            .zip(&cov.images)
            .map(|(&v, y)| quotient_lift(&b_in_z, v, y))
            .collect();
        let (pn, g_z) = map_from_projectives(&alg, &cov.labels, &lifted, &zmod);
        let g = zincl.compose(&g_z);
        let starts_p = vec![0; nv];
        let lens_p: Vec<usize> = p_prev.dims().to_vec();
        let starts_c: Vec<usize> = p_prev.dims().to_vec();
        let lens_c: Vec<usize> = cn.dims().to_vec();
        let g1 = select_rows(&g, &starts_p, &lens_p);
        let g2 = select_rows(&g, &starts_c, &lens_c);
        ps.push(pn);
        labels.push(cov.labels);
        if k >= 1 {
            dps.push(g1.scale(&q(-1)));
        }
        fs.push(g2);
        n += 1;
    }
    // drop trailing zero terms
    while ps.last().is_some_and(Module::is_zero) {
        ps.pop();
        labels.pop();
        fs.pop();
        if dps.len() >= ps.len() && !dps.is_empty() {
            dps.pop();
        }
    }
    let res = BoundedComplex {
        alg: alg.clone(),
        lo,
        objects: ps,
        diffs: dps,
        proj_labels: Some(labels),
    };
    let f = ChainMap { lo, maps: fs };
    debug_assert!(res.is_complex());
    debug_assert!(f.is_chain_map(&res, c));
    Ok((res, f))
}

/// Resolution of a module, as a complex in degrees `0, 1, …`.
pub fn resolve_module(m: &Module, cap: usize) -> Result<BoundedComplex> {
    Ok(projective_resolution_complex(&BoundedComplex::stalk(m, 0), cap)?.0)
}

struct HomDegree {
    /// `(i, Hom(X_i, Y_{i+k}))` for the nonzero pieces.
    pieces: Vec<(i64, HomSpace)>,
    offsets: Vec<usize>,
    dim: usize,
}

fn hom_degree(x: &BoundedComplex, y: &BoundedComplex, k: i64) -> HomDegree {
    let mut pieces = Vec::new();
    if !x.objects.is_empty() {
        for i in x.lo..=x.hi() {
            let (xi, yi) = (x.object(i), y.object(i + k));
            if xi.is_zero() || yi.is_zero() {
                continue;
            }
            let h = hom(&xi, &yi);
            if h.dim() > 0 {
                pieces.push((i, h));
            }
        }
    }
    let mut offsets = Vec::new();
    let mut dim = 0;
    for (_, h) in &pieces {
        offsets.push(dim);
        dim += h.dim();
    }
    HomDegree { pieces, offsets, dim }
}

/// `∂: Hom^k → Hom^{k-1}`, `(∂f)_i = d_Y f_i − (−1)^k f_{i-1} d_X`.
fn hom_differential(x: &BoundedComplex, y: &BoundedComplex, k: i64, src: &HomDegree, tgt: &HomDegree) -> Matrix {
    let mut out = Matrix::zeros(tgt.dim, src.dim);
    let sign = if k.rem_euclid(2) == 1 { q(1) } else { q(-1) };
    for ((i, h), off) in src.pieces.iter().zip(&src.offsets) {
        for (c, f) in h.basis().iter().enumerate() {
            // f: X_i → Y_{i+k}; contributes d_Y f to component i and
            // ±f d_X to component i+1
            let dy = y.diff(i + k).compose(f);
            let fdx = f.compose(&x.diff(i + 1)).scale(&sign);
            for ((j, hj), offj) in tgt.pieces.iter().zip(&tgt.offsets) {
                let comp = if *j == *i {
                    Some(&dy)
                } else if *j == i + 1 {
                    Some(&fdx)
                } else {
                    None
                };
                if let Some(m) = comp {
                    for (r, v) in hj.coords(m).into_iter().enumerate() {
                        if !v.is_zero() {
                            out.set(offj + r, off + c, v);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `dim Hom_K(X, Y[n])`, which is `Hom_{D^b}(X, Y[n])` when `X` is a
/// bounded complex of projectives.
pub fn hom_homotopy(x: &BoundedComplex, y: &BoundedComplex, n: i64) -> usize {
    let k = -n;
    let here = hom_degree(x, y, k);
    if here.dim == 0 {
        return 0;
    }
    let below = hom_degree(x, y, k - 1);
    let above = hom_degree(x, y, k + 1);
    let out_rank = hom_differential(x, y, k, &here, &below).rank();
    let in_rank = hom_differential(x, y, k + 1, &above, &here).rank();
    here.dim - out_rank - in_rank
}

/// Generator of the `j`-th summand of `⊕ P(labels[i])` at vertex `labels[j]`.
fn generator(alg: &Algebra, labels: &[usize], j: usize) -> Vec<Rational> {
    let w = labels[j];
    let mut out = Vec::new();
    for (i, &v) in labels.iter().enumerate() {
        for b in alg.paths_between(v, w) {
            out.push(if i == j && alg.basis()[b].is_empty() { q(1) } else { q(0) });
        }
    }
    out
}

/// `F` applied degreewise to a complex of projectives with known summands.
pub fn apply_functor_complex(table: &ProjFunctorTable, cp: &BoundedComplex) -> Result<BoundedComplex> {
    let alg = &table.alg;
    let labels = cp
        .proj_labels
        .as_ref()
        .ok_or_else(|| Error::PreconditionFailed("complex terms must be labelled projectives".into()))?;
    let nv = alg.num_vertices();
    let parts: Vec<Vec<Module>> = labels
        .iter()
        .map(|ls| ls.iter().map(|&v| table.objects[v].clone()).collect())
        .collect();
    let objects: Vec<Module> = parts.iter().map(|p| Module::direct_sum(alg, p)).collect();
    let mut diffs = Vec::new();
    for (k, d) in cp.diffs.iter().enumerate() {
        let (src_l, tgt_l) = (&labels[k + 1], &labels[k]);
        let mut comps = vec![Vec::with_capacity(src_l.len()); tgt_l.len()];
        for (i, &lam) in src_l.iter().enumerate() {
            let img = d.blocks[lam].mul_vec(&generator(alg, src_l, i));
            let mut pos = 0;
            for (j, &mu) in tgt_l.iter().enumerate() {
                let mut acc = ModuleMap::zero(&table.objects[lam], &table.objects[mu]);
                for b in alg.paths_between(mu, lam) {
                    let c = &img[pos];
                    if !c.is_zero() {
                        acc = acc.add(&table.morphisms[b].scale(c));
                    }
                    pos += 1;
                }
                comps[j].push(acc);
            }
        }
        diffs.push(ModuleMap::from_components(&parts[k + 1], &parts[k], &comps, nv));
    }
    Ok(BoundedComplex {
        alg: alg.clone(),
        lo: cp.lo,
        objects,
        diffs,
        proj_labels: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreRow {
    pub n: i64,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

/// Rows `dim Hom(M, (LH N)[n])` against `dim Hom(N, M[-n]) = Ext^{-n}(N, M)`.
pub fn serre_duality_check(m: &Module, n_mod: &Module, lo: i64, hi: i64, cap: usize) -> Result<Vec<SerreRow>> {
    m.check_same_algebra(n_mod)?;
    let alg = m.algebra();
    if global_dimension(alg, cap).finite().is_none() {
        return Err(Error::ResolutionCapExceeded(cap));
    }
    let res_m = resolve_module(m, cap)?;
    let res_n = resolve_module(n_mod, cap)?;
    let hn = apply_functor_complex(&ProjFunctorTable::nakayama(alg), &res_n)?;
    let stalk_m = BoundedComplex::stalk(m, 0);
    Ok((lo..=hi)
        .map(|n| {
            let lhs = hom_homotopy(&res_m, &hn, n);
            let rhs = hom_homotopy(&res_n, &stalk_m, -n);
            SerreRow {
                n,
                lhs,
                rhs,
                equal: lhs == rhs,
            }
        })
        .collect())
}

/// `Σ_n (−1)^n dim Ext^n(L(λ), L(μ))` for all pairs, via resolutions.
pub fn euler_form(alg: &Arc<Algebra>, cap: usize) -> Result<Vec<Vec<i64>>> {
    let n = alg.num_vertices();
    let mut out = vec![vec![0i64; n]; n];
    for (l, row) in out.iter_mut().enumerate() {
        let res = resolve_module(&Module::simple(alg, l), cap)?;
        for (mu, cell) in row.iter_mut().enumerate() {
            let s = BoundedComplex::stalk(&Module::simple(alg, mu), 0);
            let mut acc = 0i64;
            for k in 0..res.objects.len() as i64 {
                let d = hom_homotopy(&res, &s, k) as i64;
                acc += if k % 2 == 0 { d } else { -d };
            }
            *cell = acc;
        }
    }
    Ok(out)
}

/// Compares the Euler form with `(C⁻¹)_{μλ}`.
pub fn euler_form_matches_cartan(alg: &Arc<Algebra>, cap: usize) -> Result<bool> {
    let e = euler_form(alg, cap)?;
    let Some(ci) = inverse_cartan(alg) else {
        return Ok(false);
    };
    let n = alg.num_vertices();
    Ok((0..n).all(|l| (0..n).all(|mu| *ci.get(mu, l) == q(e[l][mu]))))
}
