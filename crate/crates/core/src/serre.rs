//! The Nakayama functor, partial (co)approximation with respect to a
//! projective module, natural isomorphisms between functors on projectives,
//! and checks of the Serre functor characterisations.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{is_symmetric, Algebra};
use crate::error::{Error, Result};
use crate::homological::{global_dimension, projective_dimension};
use crate::linalg::{kernel, q, Matrix, Rational, Subspace};
use crate::module::{
    dualize, dualize_to, end_matrices, generated_at, head, hom, hom_dim, induced_on_quotients, is_injective,
    is_isomorphic, is_projective, kernel_of, lift_to_covers, map_from_projectives, projective_cover, quotient,
    restrict, socle_multiplicities, sub, Intertwiners, Module, ModuleMap, OpPair, Submodule,
};
use crate::split::find_iso;
use crate::tilting::{basic_presentation, double_centraliser_dims};

pub const SERRE_RESOLUTION_CAP: usize = 20;

fn columns(rows: usize, cols: &[Vec<Rational>]) -> Matrix {
    let mut out = Matrix::zeros(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            out.set(r, c, x.clone());
        }
    }
    out
}

/// `H M = D Hom_A(M, A)`.
///
/// `Hom(M, A) = ⊕_y Hom(M, P(y))` is a right module: an arrow `α: x → y`
/// acts `Hom(M, P(y)) → Hom(M, P(x))` by composing with `p ↦ α·p`.
pub fn nakayama(m: &Module) -> Module {
    let alg = m.algebra();
    let n = alg.num_vertices();
    let homs: Vec<_> = (0..n).map(|y| hom(m, &Module::projective(alg, y))).collect();
    let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
    let arrows = (0..alg.num_arrows())
        .map(|a| {
            let (x, y) = (alg.arrow_source(a), alg.arrow_target(a));
            let rho = path_map(alg, arrow_basis_index(alg, a));
            let cols: Vec<Vec<Rational>> = homs[y]
                .basis()
                .iter()
                .map(|phi| homs[x].coords(&rho.compose(phi)))
                .collect();
            columns(dims[x], &cols).transpose()
        })
        .collect();
    Module::new(alg, dims, arrows).expect("the Nakayama functor preserves relations")
}

/// `H g: H M → H N` for `g: M → N`.
pub fn nakayama_map(m: &Module, n: &Module, g: &ModuleMap) -> ModuleMap {
    let alg = m.algebra();
    let blocks = (0..alg.num_vertices())
        .map(|y| {
            let p = Module::projective(alg, y);
            let hn = hom(n, &p);
            let hm = hom(m, &p);
            let cols: Vec<Vec<Rational>> = hn.basis().iter().map(|psi| hm.coords(&psi.compose(g))).collect();
            columns(hm.dim(), &cols).transpose()
        })
        .collect();
    ModuleMap { blocks }
}

fn arrow_basis_index(alg: &Algebra, a: usize) -> usize {
    let p = crate::algebra::Path {
        source: alg.arrow_source(a),
        arrows: vec![a],
    };
    alg.basis_index(&p).expect("arrows are basis paths")
}

/// For a basis path `b: s → t`, the map `P(t) → P(s)`, `p ↦ b·p`.
pub fn path_map(alg: &Arc<Algebra>, b: usize) -> ModuleMap {
    let (s, t) = (alg.basis_source(b), alg.basis_target(b));
    let ps = Module::projective(alg, s);
    let pos = alg.paths_between(s, t).iter().position(|&x| x == b).unwrap();
    let mut img = vec![Rational::zero(); ps.dim_at(t)];
    img[pos] = q(1);
    map_from_projectives(alg, &[t], &[img], &ps).1
}

/// Vertices supporting the head of a projective `Q`.
pub fn q_vertices(qm: &Module) -> Result<Vec<usize>> {
    if !is_projective(qm) {
        return Err(Error::QNotProjective);
    }
    Ok(head(qm)
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, _)| v)
        .collect())
}

/// `Q = ⊕_{c ∈ C} P(c)`.
pub fn basic_projective(alg: &Arc<Algebra>, vertices: &[usize]) -> Module {
    let parts: Vec<Module> = vertices.iter().map(|&v| Module::projective(alg, v)).collect();
    Module::direct_sum(alg, &parts)
}

/// Vertices `c` with `P(c)` injective.
pub fn projective_injective_vertices(alg: &Arc<Algebra>) -> Vec<usize> {
    (0..alg.num_vertices())
        .filter(|&v| is_injective(&Module::projective(alg, v)))
        .collect()
}

/// `M_Q`, the trace of `Q` in `M`.
pub fn m_lower(qm: &Module, m: &Module) -> Result<Module> {
    let c = q_vertices(qm)?;
    Ok(sub(m, &generated_at(m, &c)).0)
}

/// The largest submodule `U` with `Hom(Q, U) = 0`.
fn q_annihilated(m: &Module, c: &[usize]) -> Submodule {
    let alg = m.algebra();
    let spaces = (0..alg.num_vertices())
        .map(|v| {
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for &w in c {
                for b in alg.paths_between(v, w) {
                    let act = m.basis_action(b);
                    for r in 0..act.rows() {
                        rows.push(act.row(r).to_vec());
                    }
                }
            }
            if rows.is_empty() {
                Subspace::full(m.dim_at(v))
            } else {
                kernel(&Matrix::from_rows(&rows, m.dim_at(v)).expect("rectangular"))
            }
        })
        .collect();
    Submodule { spaces }
}

/// `M^Q = M/U` with `U` the largest submodule not seen by `Q`.
pub fn m_upper(qm: &Module, m: &Module) -> Result<Module> {
    let c = q_vertices(qm)?;
    Ok(quotient(m, &q_annihilated(m, &c)).0)
}

/// Partial coapproximation with respect to the projective `⊕_{c∈C} P(c)`.
#[derive(Clone, Debug)]
pub struct Coapp {
    pub vertices: Vec<usize>,
}

impl Coapp {
    pub fn new(qm: &Module) -> Result<Self> {
        Ok(Coapp {
            vertices: q_vertices(qm)?,
        })
    }

    pub fn from_vertices(vertices: &[usize]) -> Self {
        Coapp {
            vertices: vertices.to_vec(),
        }
    }

    /// `(P/K_Q)_Q` for the projective cover `K ↪ P ↠ M`; also returns the
    /// submodules used so that maps can be induced.
    fn parts(&self, m: &Module) -> (crate::module::ProjectiveCover, Submodule, Module, Submodule) {
        let cov = projective_cover(m);
        let (kmod, kincl) = sub(&cov.module, &kernel_of(&cov.map));
        let kq_in_k = generated_at(&kmod, &self.vertices);
        let kq = crate::module::image_of(&kincl.compose(&sub(&kmod, &kq_in_k).1));
        let (pq, _) = quotient(&cov.module, &kq);
        let tr = generated_at(&pq, &self.vertices);
        (cov, kq, pq, tr)
    }

    pub fn apply(&self, m: &Module) -> Module {
        let (_, _, pq, tr) = self.parts(m);
        sub(&pq, &tr).0
    }

    pub fn apply_map(&self, m: &Module, n: &Module, g: &ModuleMap) -> Result<ModuleMap> {
        let (cm, km, _, trm) = self.parts(m);
        let (cn, kn, _, trn) = self.parts(n);
        let lift = lift_to_covers(&cm, &cn, g, &cn.module)?;
        let on_quot = induced_on_quotients(&lift, &km, &kn);
        Ok(restrict(&on_quot, &trm, &trn))
    }

    pub fn power(&self, m: &Module, k: usize) -> Module {
        (0..k).fold(m.clone(), |acc, _| self.apply(&acc))
    }
}

/// Partial approximation `D ∘ Coapp_{Q'} ∘ D`, with `Q'` the projective
/// over the opposite algebra at the same vertices.
pub fn approx(c: &Coapp, m: &Module) -> Result<Module> {
    let d = dualize(m);
    dualize_to(&c.apply(&d), m.algebra())
}

/// A functor on projectives: values on each `P(λ)` and on the hom basis
/// `p ↦ b·p` for every basis path `b`.
#[derive(Clone, Debug)]
pub struct ProjFunctorTable {
    pub name: String,
    pub alg: Arc<Algebra>,
    pub objects: Vec<Module>,
    /// `morphisms[b]: F(P(target b)) → F(P(source b))`
    pub morphisms: Vec<ModuleMap>,
}

impl ProjFunctorTable {
    pub fn build<F, G>(alg: &Arc<Algebra>, name: &str, on_obj: F, on_map: G) -> Result<Self>
    where
        F: Fn(&Module) -> Module,
        G: Fn(&Module, &Module, &ModuleMap) -> Result<ModuleMap>,
    {
        let n = alg.num_vertices();
        let proj: Vec<Module> = (0..n).map(|v| Module::projective(alg, v)).collect();
        let objects: Vec<Module> = proj.iter().map(on_obj).collect();
        let mut morphisms = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = (alg.basis_source(b), alg.basis_target(b));
            morphisms.push(on_map(&proj[t], &proj[s], &path_map(alg, b))?);
        }
        Ok(ProjFunctorTable {
            name: name.to_string(),
            alg: alg.clone(),
            objects,
            morphisms,
        })
    }

    pub fn identity(alg: &Arc<Algebra>) -> Self {
        Self::build(alg, "identity", |m| m.clone(), |_, _, g| Ok(g.clone())).unwrap()
    }

    pub fn nakayama(alg: &Arc<Algebra>) -> Self {
        Self::build(alg, "nakayama", nakayama, |m, n, g| Ok(nakayama_map(m, n, g))).unwrap()
    }

    pub fn coapp_power(alg: &Arc<Algebra>, c: &Coapp, k: usize) -> Result<Self> {
        Self::build(
            alg,
            &format!("coapp^{k}"),
            |m| c.power(m, k),
            |m, n, g| {
                let (mut src, mut tgt, mut f) = (m.clone(), n.clone(), g.clone());
                for _ in 0..k {
                    f = c.apply_map(&src, &tgt, &f)?;
                    src = c.apply(&src);
                    tgt = c.apply(&tgt);
                }
                Ok(f)
            },
        )
    }

    /// `F(b'·b) = F(b) ∘ F(b')` and `F(e_λ) = id` on all basis pairs.
    pub fn is_functorial(&self) -> bool {
        let alg = &self.alg;
        for v in 0..alg.num_vertices() {
            if self.morphisms[alg.idempotent(v)] != ModuleMap::identity(&self.objects[v]) {
                return false;
            }
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if alg.basis_target(i) != alg.basis_source(j) {
                    continue;
                }
                // b_i: s → t, b_j: t → u; b_i·b_j: P(u) → P(s) is (p ↦ b_i·p) ∘ (p ↦ b_j·p)
                let want = self.morphisms[i].compose(&self.morphisms[j]);
                let src = &self.objects[alg.basis_target(j)];
                let tgt = &self.objects[alg.basis_source(i)];
                let mut got = ModuleMap::zero(src, tgt);
                for (k, c) in alg.product(i, j) {
                    got = got.add(&self.morphisms[*k].scale(c));
                }
                if got != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Objects with a fixed list of operators, for natural transformation solving.
#[derive(Clone, Debug)]
struct Rep {
    dims: Vec<usize>,
    ops: Vec<(usize, usize, Matrix)>,
}

fn module_rep(m: &Module) -> Rep {
    let alg = m.algebra();
    Rep {
        dims: m.dims().to_vec(),
        ops: (0..alg.num_arrows())
            .map(|a| (alg.arrow_source(a), alg.arrow_target(a), m.arrow(a).clone()))
            .collect(),
    }
}

/// `e M` as a module over `eAe`: the spaces at `C` with all corner paths.
fn corner_rep(m: &Module, c: &[usize]) -> Rep {
    let alg = m.algebra();
    let mut ops = Vec::new();
    for (i, &x) in c.iter().enumerate() {
        for (j, &y) in c.iter().enumerate() {
            for b in alg.paths_between(x, y) {
                if !alg.basis()[b].is_empty() {
                    ops.push((i, j, m.basis_action(b)));
                }
            }
        }
    }
    Rep {
        dims: c.iter().map(|&v| m.dim_at(v)).collect(),
        ops,
    }
}

fn corner_map(f: &ModuleMap, c: &[usize]) -> Vec<Matrix> {
    c.iter().map(|&v| f.blocks[v].clone()).collect()
}

struct RepTable {
    objects: Vec<Rep>,
    /// (source object, target object, blocks)
    morphisms: Vec<(usize, usize, Vec<Matrix>)>,
}

fn module_table(t: &ProjFunctorTable) -> RepTable {
    let alg = &t.alg;
    RepTable {
        objects: t.objects.iter().map(module_rep).collect(),
        morphisms: (0..alg.dim())
            .map(|b| (alg.basis_target(b), alg.basis_source(b), t.morphisms[b].blocks.clone()))
            .collect(),
    }
}

fn corner_table(t: &ProjFunctorTable, c: &[usize]) -> RepTable {
    let alg = &t.alg;
    RepTable {
        objects: t.objects.iter().map(|m| corner_rep(m, c)).collect(),
        morphisms: (0..alg.dim())
            .map(|b| (alg.basis_target(b), alg.basis_source(b), corner_map(&t.morphisms[b], c)))
            .collect(),
    }
}

/// Basis of natural transformations `F → G` on the objects in `subset`,
/// each as one block list per object.
fn nat_basis(f: &RepTable, g: &RepTable, subset: &[usize]) -> Vec<Vec<Vec<Matrix>>> {
    let spaces: Vec<Intertwiners> = subset
        .iter()
        .map(|&i| {
            let (fo, go) = (&f.objects[i], &g.objects[i]);
            let ops: Vec<OpPair> = fo
                .ops
                .iter()
                .zip(&go.ops)
                .map(|((s, t, fm), (_, _, gm))| OpPair {
                    from: *s,
                    to: *t,
                    src: fm,
                    tgt: gm,
                })
                .collect();
            Intertwiners::solve(&fo.dims, &go.dims, &ops)
        })
        .collect();
    let bases: Vec<Vec<Vec<Matrix>>> = spaces.iter().map(Intertwiners::basis_blocks).collect();
    let offsets: Vec<usize> = bases
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let unknowns: usize = bases.iter().map(Vec::len).sum();

    // φ_s ∘ F(b) − G(b) ∘ φ_t = 0 for b: t → s within the subset
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for ((t, s, fb), (_, _, gb)) in f.morphisms.iter().zip(&g.morphisms) {
        let (Some(si), Some(ti)) = (subset.iter().position(|x| x == s), subset.iter().position(|x| x == t)) else {
            continue;
        };
        let mut cols: Vec<Vec<Rational>> = vec![Vec::new(); unknowns];
        for (k, phi) in bases[si].iter().enumerate() {
            cols[offsets[si] + k] = flatten_blocks(&phi.iter().zip(fb).map(|(p, x)| p.mul(x)).collect::<Vec<_>>());
        }
        let len = fb
            .iter()
            .zip(gb)
            .map(|(x, y)| y.rows() * x.cols())
            .sum::<usize>();
        for (k, phi) in bases[ti].iter().enumerate() {
            let term = flatten_blocks(&gb.iter().zip(phi).map(|(y, p)| y.mul(p).scale(&q(-1))).collect::<Vec<_>>());
            let slot = &mut cols[offsets[ti] + k];
            if slot.is_empty() {
                *slot = term;
            } else {
                for (a, b) in slot.iter_mut().zip(term) {
                    *a += b;
                }
            }
        }
        for col in cols.iter_mut() {
            if col.is_empty() {
                *col = vec![Rational::zero(); len];
            }
        }
        for r in 0..len {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    let sol = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        kernel(&Matrix::from_rows(&rows, unknowns).expect("rectangular"))
    };
    sol.basis_vectors()
        .iter()
        .map(|x| {
            bases
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let dims_i = subset[i];
                    let (fo, go) = (&f.objects[dims_i], &g.objects[dims_i]);
                    let mut acc: Vec<Matrix> = fo
                        .dims
                        .iter()
                        .zip(&go.dims)
                        .map(|(d, e)| Matrix::zeros(*e, *d))
                        .collect();
                    for (k, phi) in b.iter().enumerate() {
                        let c = &x[offsets[i] + k];
                        if !c.is_zero() {
                            for (a, p) in acc.iter_mut().zip(phi) {
                                a.add_scaled(p, c);
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn flatten_blocks(bs: &[Matrix]) -> Vec<Rational> {
    bs.iter().flat_map(|b| b.entries().to_vec()).collect()
}

fn total_matrix(t: &[Vec<Matrix>]) -> Matrix {
    Matrix::block_diag(&t.iter().map(|bs| Matrix::block_diag(bs)).collect::<Vec<_>>())
}

fn total_dim(t: &RepTable, subset: &[usize]) -> usize {
    subset.iter().map(|&i| t.objects[i].dims.iter().sum::<usize>()).sum()
}

fn natural_iso_exists(f: &RepTable, g: &RepTable, subset: &[usize]) -> Result<bool> {
    let (df, dg) = (total_dim(f, subset), total_dim(g, subset));
    if df != dg {
        return Ok(false);
    }
    if df == 0 {
        return Ok(true);
    }
    let mats = |x: &RepTable, y: &RepTable| -> Vec<Matrix> {
        nat_basis(x, y, subset).iter().map(|t| total_matrix(t)).collect()
    };
    let fg = mats(f, g);
    if fg.is_empty() {
        return Ok(false);
    }
    let gf = mats(g, f);
    let ff = mats(f, f);
    let gg = mats(g, g);
    Ok(find_iso(&fg, &gf, &ff, &gg, df, dg)?.is_some())
}

/// `F ≅ G` as functors on the projectives `P(λ)`, `λ ∈ subset`.
pub fn naturally_isomorphic(f: &ProjFunctorTable, g: &ProjFunctorTable, subset: &[usize]) -> Result<bool> {
    natural_iso_exists(&module_table(f), &module_table(g), subset)
}

/// `e F ≅ e G` as functors into `eAe`-modules, on the projectives in `subset`.
pub fn corner_naturally_isomorphic(
    f: &ProjFunctorTable,
    g: &ProjFunctorTable,
    c: &[usize],
    subset: &[usize],
) -> Result<bool> {
    natural_iso_exists(&corner_table(f, c), &corner_table(g, c), subset)
}

/// Socle and head of a projective-injective `Q` have the same labels.
pub fn is_good(qm: &Module) -> Result<bool> {
    if !is_projective(qm) || !is_injective(qm) {
        return Err(Error::NotProjectiveInjective);
    }
    Ok(socle_multiplicities(qm) == head(qm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCentraliserVerdict {
    pub holds: bool,
    pub commutant_dim: usize,
    pub algebra_dim: usize,
    pub action_rank: usize,
    /// A presentation `Q₂ → Q₁ → DA → 0` with `Qᵢ ∈ add(Q)` exists.
    pub opposite_side: bool,
}

pub fn check_double_centraliser(alg: &Arc<Algebra>, qm: &Module) -> DoubleCentraliserVerdict {
    let (commutant_dim, action_rank) = double_centraliser_dims(qm);
    let d = alg.dim();
    let c = head(qm)
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, _)| v)
        .collect::<Vec<_>>();
    let opposite_side = is_projective(qm) && {
        let da = Module::direct_sum(
            alg,
            &(0..alg.num_vertices()).map(|v| Module::injective(alg, v)).collect::<Vec<_>>(),
        );
        let in_c = |m: &Module| head(m).iter().enumerate().all(|(v, &k)| k == 0 || c.contains(&v));
        let cov = projective_cover(&da);
        let omega = sub(&cov.module, &kernel_of(&cov.map)).0;
        in_c(&da) && in_c(&omega)
    };
    DoubleCentraliserVerdict {
        holds: commutant_dim == d && action_rank == d,
        commutant_dim,
        algebra_dim: d,
        action_rank,
        opposite_side,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preconditions {
    pub finite_global_dimension: bool,
    pub projective_injective: bool,
    pub basic: bool,
    pub good: bool,
    pub double_centraliser: bool,
    pub opposite_double_centraliser: bool,
}

impl Preconditions {
    pub fn all(&self) -> bool {
        self.finite_global_dimension
            && self.projective_injective
            && self.basic
            && self.good
            && self.double_centraliser
            && self.opposite_double_centraliser
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.finite_global_dimension, "finite global dimension"),
            (self.projective_injective, "Q projective-injective"),
            (self.basic, "Q basic"),
            (self.good, "Q good"),
            (self.double_centraliser, "double centraliser for Q"),
            (self.opposite_double_centraliser, "opposite double centraliser for Q"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

pub fn preconditions(alg: &Arc<Algebra>, qm: &Module) -> Result<Preconditions> {
    let pi = is_projective(qm) && is_injective(qm);
    let basic = head(qm).iter().all(|&k| k <= 1);
    let dc = check_double_centraliser(alg, qm);
    Ok(Preconditions {
        finite_global_dimension: global_dimension(alg, SERRE_RESOLUTION_CAP).finite().is_some(),
        projective_injective: pi,
        basic,
        good: pi && is_good(qm)?,
        double_centraliser: dc.holds,
        opposite_double_centraliser: dc.opposite_side,
    })
}

fn require(p: &Preconditions) -> Result<()> {
    match p.first_failure() {
        Some(name) => Err(Error::PreconditionFailed(name.to_string())),
        None => Ok(()),
    }
}

/// Result of testing a functor table against the characterisation of the
/// Serre functor. Condition (a) is the surrogate: `F(A)` has finite
/// injective dimension and `F` is bijective on homs between projectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterisationReport {
    pub preconditions: Preconditions,
    pub cond_a_surrogate: bool,
    pub cond_b: bool,
    pub cond_c: bool,
}

impl CharacterisationReport {
    pub fn all(&self) -> bool {
        self.cond_a_surrogate && self.cond_b && self.cond_c
    }
}

pub fn check_serre_characterisation(
    alg: &Arc<Algebra>,
    qm: &Module,
    f: &ProjFunctorTable,
) -> Result<CharacterisationReport> {
    let pre = preconditions(alg, qm)?;
    require(&pre)?;
    let n = alg.num_vertices();
    let op = alg.opposite();

    let fa = Module::direct_sum(alg, &f.objects);
    let finite_inj = projective_dimension(&dualize_to(&fa, &op)?, SERRE_RESOLUTION_CAP).is_some();
    let mut faithful = true;
    for s in 0..n {
        for t in 0..n {
            let paths = alg.paths_between(s, t);
            let h = hom(&f.objects[t], &f.objects[s]);
            if h.dim() != paths.len() {
                faithful = false;
                continue;
            }
            let imgs: Vec<Vec<Rational>> = paths.iter().map(|&b| h.coords(&f.morphisms[b])).collect();
            if Subspace::from_vectors(h.dim(), &imgs).dim() != paths.len() {
                faithful = false;
            }
        }
    }
    let mut cond_b = true;
    for m in &f.objects {
        if !is_injective(m) {
            cond_b = false;
        }
    }
    let c = q_vertices(qm)?;
    let h = ProjFunctorTable::nakayama(alg);
    let cond_c = naturally_isomorphic(f, &h, &c)?;
    Ok(CharacterisationReport {
        preconditions: pre,
        cond_a_surrogate: finite_inj && faithful,
        cond_b,
        cond_c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreCoapproxReport {
    pub preconditions: Preconditions,
    /// `𝕍 ≅ 𝕍H` on projectives.
    pub cond_i: bool,
    /// `H ≅ Coapp_Q²` on projectives.
    pub cond_ii: bool,
    /// `End_A(Q)` is symmetric.
    pub cond_iii: bool,
    pub all_equal: bool,
}

pub fn check_serrecoapprox_equivalence(alg: &Arc<Algebra>, qm: &Module) -> Result<SerreCoapproxReport> {
    let pre = preconditions(alg, qm)?;
    require(&pre)?;
    let c = q_vertices(qm)?;
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    let id = ProjFunctorTable::identity(alg);
    let h = ProjFunctorTable::nakayama(alg);
    let coapp2 = ProjFunctorTable::coapp_power(alg, &Coapp::from_vertices(&c), 2)?;
    let cond_i = corner_naturally_isomorphic(&id, &h, &c, &all)?;
    let cond_ii = naturally_isomorphic(&h, &coapp2, &all)?;
    let labels: Vec<String> = c.iter().map(|&v| alg.vertex_label(v).to_string()).collect();
    let parts: Vec<Module> = c.iter().map(|&v| Module::projective(alg, v)).collect();
    let end_q = basic_presentation(&parts, &labels)?;
    let cond_iii = is_symmetric(&end_q.algebra).symmetric;
    Ok(SerreCoapproxReport {
        preconditions: pre,
        cond_i,
        cond_ii,
        cond_iii,
        all_equal: cond_i == cond_ii && cond_ii == cond_iii,
    })
}

/// `End(Q)` is symmetric exactly when `H` restricted to `add(Q)` is
/// isomorphic to the identity; returns both sides.
pub fn symmetric_iff_nakayama_trivial(alg: &Arc<Algebra>, qm: &Module) -> Result<(bool, bool)> {
    let c = q_vertices(qm)?;
    let labels: Vec<String> = c.iter().map(|&v| alg.vertex_label(v).to_string()).collect();
    let parts: Vec<Module> = c.iter().map(|&v| Module::projective(alg, v)).collect();
    let end_q = basic_presentation(&parts, &labels)?;
    let sym = is_symmetric(&end_q.algebra).symmetric;
    let iso = naturally_isomorphic(&ProjFunctorTable::identity(alg), &ProjFunctorTable::nakayama(alg), &c)?;
    Ok((sym, iso))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialVerdict {
    pub hypothesis: bool,
    /// `None` when the hypothesis fails.
    pub conclusion: Option<bool>,
}

/// If `P(λ)_Q ≅ I(λ)^Q` then `Coapp_Q²(P(λ)) ≅ I(λ)`.
pub fn lemma_essential_check(alg: &Arc<Algebra>, qm: &Module, v: usize) -> Result<EssentialVerdict> {
    let p = Module::projective(alg, v);
    let i = Module::injective(alg, v);
    let hypothesis = is_isomorphic(&m_lower(qm, &p)?, &m_upper(qm, &i)?)?;
    if !hypothesis {
        return Ok(EssentialVerdict {
            hypothesis,
            conclusion: None,
        });
    }
    let c = Coapp::new(qm)?;
    Ok(EssentialVerdict {
        hypothesis,
        conclusion: Some(is_isomorphic(&c.power(&p, 2), &i)?),
    })
}

/// Centre of the matrix algebra spanned by `basis`.
fn matrix_centre_dim(basis: &[Matrix]) -> usize {
    let k = basis.len();
    if k == 0 {
        return 0;
    }
    let n = basis[0].rows();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for y in basis {
        let comm: Vec<Vec<Rational>> = basis
            .iter()
            .map(|x| x.mul(y).sub(&y.mul(x)).entries().to_vec())
            .collect();
        for r in 0..n * n {
            rows.push(comm.iter().map(|c| c[r].clone()).collect());
        }
    }
    kernel(&Matrix::from_rows(&rows, k).expect("rectangular")).dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentreComparison {
    pub centre_dim: usize,
    pub end_q_centre_dim: usize,
    pub restriction_injective: bool,
    pub holds: bool,
}

pub fn centre_comparison(alg: &Arc<Algebra>, qm: &Module) -> Result<CentreComparison> {
    if !check_double_centraliser(alg, qm).holds {
        return Err(Error::DoubleCentraliserMissing);
    }
    let z = alg.centre();
    let end_q_centre_dim = matrix_centre_dim(&end_matrices(qm));
    let n = qm.total_dim();
    let actions: Vec<Vec<Rational>> = z
        .basis_vectors()
        .iter()
        .map(|zv| {
            let mut m = Matrix::zeros(n, n);
            for (i, c) in zv.iter().enumerate() {
                if !c.is_zero() {
                    m.add_scaled(&qm.total_action(i), c);
                }
            }
            m.entries().to_vec()
        })
        .collect();
    let restriction_injective = Subspace::from_vectors(n * n, &actions).dim() == z.dim();
    Ok(CentreComparison {
        centre_dim: z.dim(),
        end_q_centre_dim,
        restriction_injective,
        holds: z.dim() == end_q_centre_dim && restriction_injective,
    })
}

/// `(λ, μ, dim Hom(P(λ), H P(μ)), dim Hom(P(μ), P(λ)))` for all pairs.
pub fn serre_pairing_table(alg: &Arc<Algebra>) -> Vec<(usize, usize, usize, usize)> {
    let n = alg.num_vertices();
    let proj: Vec<Module> = (0..n).map(|v| Module::projective(alg, v)).collect();
    let hp: Vec<Module> = proj.iter().map(nakayama).collect();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            out.push((x, y, hom_dim(&proj[x], &hp[y]), hom_dim(&proj[y], &proj[x])));
        }
    }
    out
}
