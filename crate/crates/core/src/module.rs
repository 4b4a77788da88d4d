//! Finite-dimensional modules as quiver representations.
//!
//! A module stores one vector space per vertex and one matrix per arrow
//! (`dims[target] × dims[source]`). Vectors are column vectors; the total
//! space is the direct sum of the vertex spaces in vertex order.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Rational, Subspace};
use crate::split;

#[derive(Clone, Debug)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg)
            && self.dims == other.dims
            && self.arrows == other.arrows
    }
}

pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// Validates shapes and checks that every relation acts as zero.
    pub fn new(alg: &Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Self> {
        if dims.len() != alg.num_vertices() || arrows.len() != alg.num_arrows() {
            return Err(Error::DimensionMismatch(format!(
                "module needs {} vertex spaces and {} arrow matrices",
                alg.num_vertices(),
                alg.num_arrows()
            )));
        }
        for (a, m) in arrows.iter().enumerate() {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    alg.arrow_name(a),
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = Module {
            alg: alg.clone(),
            dims,
            arrows,
        };
        for rel in alg.relations() {
            let mut acc: Option<Matrix> = None;
            for (c, names) in &rel.terms {
                let arrows: Vec<usize> = names
                    .iter()
                    .map(|n| alg.quiver().arrow_index(n).unwrap())
                    .collect();
                let p = Path {
                    source: alg.arrow_source(arrows[0]),
                    arrows,
                };
                let term = m.path_action(&p).scale(c);
                acc = Some(match acc {
                    None => term,
                    Some(x) => x.add(&term),
                });
            }
            if acc.is_some_and(|x| !x.is_zero()) {
                return Err(Error::DimensionMismatch(
                    "representation does not satisfy the relations".into(),
                ));
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(alg: &Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Self {
        debug_assert_eq!(dims.len(), alg.num_vertices());
        Module {
            alg: alg.clone(),
            dims,
            arrows,
        }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let dims = vec![0; alg.num_vertices()];
        Self::with_zero_arrows(alg, dims)
    }

    fn with_zero_arrows(alg: &Arc<Algebra>, dims: Vec<usize>) -> Self {
        let arrows = (0..alg.num_arrows())
            .map(|a| Matrix::zeros(dims[alg.arrow_target(a)], dims[alg.arrow_source(a)]))
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            arrows,
        }
    }

    /// The simple module `L(v)`.
    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        Self::with_zero_arrows(alg, dims)
    }

    /// The indecomposable projective `P(v)`: basis paths starting at `v`,
    /// arrows acting by appending.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Self {
        let n = alg.num_vertices();
        let per_vertex: Vec<Vec<usize>> = (0..n).map(|w| alg.paths_between(v, w)).collect();
        let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
        let mut arrows = Vec::with_capacity(alg.num_arrows());
        for a in 0..alg.num_arrows() {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (col, &b) in per_vertex[s].iter().enumerate() {
                let mut arrows_p = alg.basis()[b].arrows.clone();
                arrows_p.push(a);
                let p = Path {
                    source: v,
                    arrows: arrows_p,
                };
                for (k, c) in alg.reduce_path(&p) {
                    let row = per_vertex[t].iter().position(|&x| x == k).unwrap();
                    m.set(row, col, c);
                }
            }
            arrows.push(m);
        }
        Module {
            alg: alg.clone(),
            dims,
            arrows,
        }
    }

    /// The indecomposable injective `I(v)`, the dual of `P(v)` over the opposite algebra.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Self {
        let op = alg.opposite();
        dualize_to(&Module::projective(&op, v), alg).expect("opposite of the opposite")
    }

    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Module]) -> Self {
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let arrows = (0..alg.num_arrows())
            .map(|a| {
                Matrix::block_diag(
                    &parts
                        .iter()
                        .map(|p| p.arrows[a].clone())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            arrows,
        }
    }

    pub fn power(&self, k: usize) -> Module {
        Module::direct_sum(&self.alg, &vec![self.clone(); k])
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Matrix] {
        &self.arrows
    }

    /// Start of each vertex space inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Matrix of a path, `dims[target] × dims[source]`.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = self.arrows[a].mul(&m);
        }
        m
    }

    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_action(&self.alg.basis()[i])
    }

    /// Action of basis element `b_i` on the total space.
    pub fn total_action(&self, i: usize) -> Matrix {
        let n = self.total_dim();
        let off = self.offsets();
        let mut out = Matrix::zeros(n, n);
        let (s, t) = (self.alg.basis_source(i), self.alg.basis_target(i));
        out.set_block(off[t], off[s], &self.basis_action(i));
        out
    }

    pub fn check_same_algebra(&self, other: &Module) -> Result<()> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Multiset of composition factors, as multiplicities per vertex.
    pub fn composition_factors(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// Vertices where the module is supported.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }
}

/// A module homomorphism, stored as one block per vertex
/// (`target.dims[v] × source.dims[v]`).
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn zero(src: &Module, tgt: &Module) -> Self {
        ModuleMap {
            blocks: (0..src.dims.len())
                .map(|v| Matrix::zeros(tgt.dims[v], src.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Self {
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::block_diag(&self.blocks)
    }

    pub fn from_matrix(src: &Module, tgt: &Module, m: &Matrix) -> Self {
        let (so, to) = (src.offsets(), tgt.offsets());
        ModuleMap {
            blocks: (0..src.dims.len())
                .map(|v| m.block(to[v], so[v], tgt.dims[v], src.dims[v]))
                .collect(),
        }
    }

    /// Checks the intertwining condition for every arrow.
    pub fn is_homomorphism(&self, src: &Module, tgt: &Module) -> bool {
        let alg = src.algebra();
        (0..alg.num_arrows()).all(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            tgt.arrows[a].mul(&self.blocks[s]) == self.blocks[t].mul(&src.arrows[a])
        })
    }

    /// Dual map `D N → D M` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Map between direct sums from components `parts[i][j]: src_j → tgt_i`.
    pub fn from_components(
        src: &[Module],
        tgt: &[Module],
        parts: &[Vec<ModuleMap>],
        nv: usize,
    ) -> Self {
        let blocks = (0..nv)
            .map(|v| {
                let rows: usize = tgt.iter().map(|m| m.dims[v]).sum();
                let cols: usize = src.iter().map(|m| m.dims[v]).sum();
                let mut out = Matrix::zeros(rows, cols);
                let mut r0 = 0;
                for (i, t) in tgt.iter().enumerate() {
                    let mut c0 = 0;
                    for (j, s) in src.iter().enumerate() {
                        out.set_block(r0, c0, &parts[i][j].blocks[v]);
                        c0 += s.dims[v];
                    }
                    r0 += t.dims[v];
                }
                out
            })
            .collect();
        ModuleMap { blocks }
    }
}

/// A submodule given by one subspace per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub spaces: Vec<Subspace>,
}

impl Submodule {
    pub fn zero(m: &Module) -> Self {
        Submodule {
            spaces: m.dims.iter().map(|&d| Subspace::zero(d)).collect(),
        }
    }

    pub fn full(m: &Module) -> Self {
        Submodule {
            spaces: m.dims.iter().map(|&d| Subspace::full(d)).collect(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule {
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.sum(b).unwrap())
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule {
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.intersection(b).unwrap())
                .collect(),
        }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains(b).unwrap())
    }

    pub fn is_closed_in(&self, m: &Module) -> bool {
        let alg = m.algebra();
        (0..alg.num_arrows()).all(|a| {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            let img = Subspace::image(&m.arrows[a], &self.spaces[s]).unwrap();
            self.spaces[t].contains(&img).unwrap()
        })
    }
}

/// Smallest submodule containing the given per-vertex subspaces.
pub fn generate(m: &Module, start: Vec<Subspace>) -> Submodule {
    let alg = m.algebra().clone();
    let mut spaces = start;
    loop {
        let mut changed = false;
        for a in 0..alg.num_arrows() {
            let (s, t) = (alg.arrow_source(a), alg.arrow_target(a));
            if spaces[s].is_zero() {
                continue;
            }
            let img = Subspace::image(&m.arrows[a], &spaces[s]).unwrap();
            if !spaces[t].contains(&img).unwrap() {
                spaces[t] = spaces[t].sum(&img).unwrap();
                changed = true;
            }
        }
        if !changed {
            return Submodule { spaces };
        }
    }
}

/// Submodule generated by the vertex spaces at `vertices`; this is the trace
/// of `⊕_{v ∈ vertices} P(v)`.
pub fn generated_at(m: &Module, vertices: &[usize]) -> Submodule {
    let start = (0..m.dims.len())
        .map(|v| {
            if vertices.contains(&v) {
                Subspace::full(m.dims[v])
            } else {
                Subspace::zero(m.dims[v])
            }
        })
        .collect();
    generate(m, start)
}

/// The submodule `S` as a module, with its inclusion.
pub fn sub(m: &Module, s: &Submodule) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let dims = s.dims();
    let arrows = (0..alg.num_arrows())
        .map(|a| {
            let (src, tgt) = (alg.arrow_source(a), alg.arrow_target(a));
            let mut out = Matrix::zeros(dims[tgt], dims[src]);
            for (j, w) in s.spaces[src].basis_vectors().iter().enumerate() {
                let img = m.arrows[a].mul_vec(w);
                for (i, c) in s.spaces[tgt].coords(&img).into_iter().enumerate() {
                    out.set(i, j, c);
                }
            }
            out
        })
        .collect();
    let incl = ModuleMap {
        blocks: s.spaces.iter().map(|sp| sp.basis().transpose()).collect(),
    };
    (Module::from_parts(alg, dims, arrows), incl)
}

/// `M/S` with its projection. The quotient basis at a vertex is given by the
/// unit vectors at the non-pivot coordinates of `S`.
pub fn quotient(m: &Module, s: &Submodule) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let comps: Vec<Vec<usize>> = s.spaces.iter().map(Subspace::non_pivots).collect();
    let dims: Vec<usize> = comps.iter().map(Vec::len).collect();
    let project = |v: usize, x: &[Rational]| -> Vec<Rational> {
        let r = s.spaces[v].reduce(x);
        comps[v].iter().map(|&c| r[c].clone()).collect()
    };
    let proj_blocks: Vec<Matrix> = (0..m.dims.len())
        .map(|v| {
            let mut out = Matrix::zeros(dims[v], m.dims[v]);
            for j in 0..m.dims[v] {
                let mut e = vec![Rational::zero(); m.dims[v]];
                e[j] = Rational::one();
                for (i, c) in project(v, &e).into_iter().enumerate() {
                    out.set(i, j, c);
                }
            }
            out
        })
        .collect();
    let arrows = (0..alg.num_arrows())
        .map(|a| {
            let (src, tgt) = (alg.arrow_source(a), alg.arrow_target(a));
            let mut out = Matrix::zeros(dims[tgt], dims[src]);
            for (j, &c) in comps[src].iter().enumerate() {
                let img = m.arrows[a].col(c);
                for (i, x) in project(tgt, &img).into_iter().enumerate() {
                    out.set(i, j, x);
                }
            }
            out
        })
        .collect();
    (
        Module::from_parts(alg, dims, arrows),
        ModuleMap {
            blocks: proj_blocks,
        },
    )
}

/// A section of [`quotient`]'s projection on vertex spaces (not a module map).
pub fn quotient_lift(s: &Submodule, v: usize, y: &[Rational]) -> Vec<Rational> {
    let comps = s.spaces[v].non_pivots();
    let mut out = vec![Rational::zero(); s.spaces[v].ambient()];
    for (c, x) in comps.iter().zip(y) {
        out[*c] = x.clone();
    }
    out
}

pub fn kernel_of(f: &ModuleMap) -> Submodule {
    Submodule {
        spaces: f.blocks.iter().map(kernel).collect(),
    }
}

pub fn image_of(f: &ModuleMap) -> Submodule {
    Submodule {
        spaces: f.blocks.iter().map(Subspace::column_space).collect(),
    }
}

/// Restriction of a map to a submodule of its source, landing in a submodule of its target.
pub fn restrict(f: &ModuleMap, src: &Submodule, tgt: &Submodule) -> ModuleMap {
    ModuleMap {
        blocks: f
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let vecs = src.spaces[v].basis_vectors();
                let mut out = Matrix::zeros(tgt.spaces[v].dim(), vecs.len());
                for (j, w) in vecs.iter().enumerate() {
                    let img = b.mul_vec(w);
                    debug_assert!(tgt.spaces[v].contains_vector(&img));
                    for (i, c) in tgt.spaces[v].coords(&img).into_iter().enumerate() {
                        out.set(i, j, c);
                    }
                }
                out
            })
            .collect(),
    }
}

/// Map induced on quotients `M/S → N/T` by `f: M → N` with `f(S) ⊆ T`.
pub fn induced_on_quotients(f: &ModuleMap, s: &Submodule, t: &Submodule) -> ModuleMap {
    ModuleMap {
        blocks: f
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let sc = s.spaces[v].non_pivots();
                let tc = t.spaces[v].non_pivots();
                let mut out = Matrix::zeros(tc.len(), sc.len());
                for (j, &c) in sc.iter().enumerate() {
                    let r = t.spaces[v].reduce(&b.col(c));
                    for (i, &d) in tc.iter().enumerate() {
                        out.set(i, j, r[d].clone());
                    }
                }
                out
            })
            .collect(),
    }
}

/// Solution space of linear maps `f_v: V_v → W_v` (one per piece) satisfying
/// `N_op · f_s = f_t · M_op` for every recorded operator.
pub struct Intertwiners {
    pub src_dims: Vec<usize>,
    pub tgt_dims: Vec<usize>,
    pub space: Subspace,
}

/// Operator constraint between pieces `s → t`: source matrix, target matrix.
pub struct OpPair<'a> {
    pub from: usize,
    pub to: usize,
    pub src: &'a Matrix,
    pub tgt: &'a Matrix,
}

impl Intertwiners {
    pub fn solve(src_dims: &[usize], tgt_dims: &[usize], ops: &[OpPair]) -> Intertwiners {
        let mut offs = Vec::with_capacity(src_dims.len());
        let mut total = 0;
        for (d, e) in src_dims.iter().zip(tgt_dims) {
            offs.push(total);
            total += d * e;
        }
        let var = |v: usize, i: usize, j: usize| offs[v] + i * src_dims[v] + j;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for op in ops {
            let (s, t) = (op.from, op.to);
            // (N f_s - f_t M)[i][j]
            for i in 0..tgt_dims[t] {
                for j in 0..src_dims[s] {
                    let mut row = vec![Rational::zero(); total];
                    let mut any = false;
                    for k in 0..tgt_dims[s] {
                        let c = op.tgt.get(i, k);
                        if !c.is_zero() {
                            row[var(s, k, j)] += c;
                            any = true;
                        }
                    }
                    for l in 0..src_dims[t] {
                        let c = op.src.get(l, j);
                        if !c.is_zero() {
                            row[var(t, i, l)] -= c;
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let space = if rows.is_empty() {
            Subspace::full(total)
        } else {
            kernel(&Matrix::from_rows(&rows, total).unwrap())
        };
        Intertwiners {
            src_dims: src_dims.to_vec(),
            tgt_dims: tgt_dims.to_vec(),
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unflatten(&self, x: &[Rational]) -> Vec<Matrix> {
        let mut out = Vec::with_capacity(self.src_dims.len());
        let mut pos = 0;
        for (d, e) in self.src_dims.iter().zip(&self.tgt_dims) {
            out.push(Matrix::from_vec(*e, *d, x[pos..pos + d * e].to_vec()).unwrap());
            pos += d * e;
        }
        out
    }

    pub fn flatten(blocks: &[Matrix]) -> Vec<Rational> {
        blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    pub fn basis_blocks(&self) -> Vec<Vec<Matrix>> {
        self.space
            .basis_vectors()
            .iter()
            .map(|x| self.unflatten(x))
            .collect()
    }

    /// Coordinates of an element in the echelon basis.
    pub fn coords(&self, blocks: &[Matrix]) -> Vec<Rational> {
        self.space.coords(&Self::flatten(blocks))
    }
}

/// A basis of `Hom_A(M, N)` together with coordinate extraction.
pub struct HomSpace {
    inner: Intertwiners,
    basis: Vec<ModuleMap>,
}

impl HomSpace {
    pub fn basis(&self) -> &[ModuleMap] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &ModuleMap) -> Vec<Rational> {
        self.inner.coords(&f.blocks)
    }

    pub fn combine(&self, c: &[Rational]) -> ModuleMap {
        let mut blocks: Vec<Matrix> = self
            .inner
            .src_dims
            .iter()
            .zip(&self.inner.tgt_dims)
            .map(|(d, e)| Matrix::zeros(*e, *d))
            .collect();
        for (f, x) in self.basis.iter().zip(c) {
            for (b, fb) in blocks.iter_mut().zip(&f.blocks) {
                b.add_scaled(fb, x);
            }
        }
        ModuleMap { blocks }
    }

    pub fn contains(&self, f: &ModuleMap) -> bool {
        self.inner
            .space
            .contains_vector(&Intertwiners::flatten(&f.blocks))
    }
}

pub fn hom(m: &Module, n: &Module) -> HomSpace {
    assert!(
        same_algebra(m.algebra(), n.algebra()),
        "hom between modules over different algebras"
    );
    let alg = m.algebra();
    let ops: Vec<OpPair> = (0..alg.num_arrows())
        .map(|a| OpPair {
            from: alg.arrow_source(a),
            to: alg.arrow_target(a),
            src: &m.arrows[a],
            tgt: &n.arrows[a],
        })
        .collect();
    let inner = Intertwiners::solve(&m.dims, &n.dims, &ops);
    let basis = inner
        .basis_blocks()
        .into_iter()
        .map(|blocks| ModuleMap { blocks })
        .collect();
    HomSpace { inner, basis }
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom(m, n).dim()
}

/// Endomorphism ring as total-space matrices.
pub fn end_matrices(m: &Module) -> Vec<Matrix> {
    hom(m, m).basis.iter().map(ModuleMap::to_matrix).collect()
}

/// The dual module over the opposite algebra.
pub fn dualize(m: &Module) -> Module {
    let op = m.algebra().opposite();
    Module::from_parts(
        &op,
        m.dims.clone(),
        m.arrows.iter().map(Matrix::transpose).collect(),
    )
}

/// The dual module over `target`, which must be the opposite of `m`'s algebra.
pub fn dualize_to(m: &Module, target: &Arc<Algebra>) -> Result<Module> {
    if !same_algebra(&target.opposite(), m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(Module::from_parts(
        target,
        m.dims.clone(),
        m.arrows.iter().map(Matrix::transpose).collect(),
    ))
}

/// Vectors killed by every arrow.
pub fn socle(m: &Module) -> Submodule {
    let alg = m.algebra();
    let spaces = (0..m.dims.len())
        .map(|v| {
            let outgoing: Vec<usize> = (0..alg.num_arrows())
                .filter(|&a| alg.arrow_source(a) == v)
                .collect();
            if outgoing.is_empty() {
                return Subspace::full(m.dims[v]);
            }
            let mut stacked = Matrix::zeros(0, m.dims[v]);
            for a in outgoing {
                stacked = stacked.vstack(&m.arrows[a]);
            }
            kernel(&stacked)
        })
        .collect();
    Submodule { spaces }
}

/// `rad M = J·M`, the sum of the images of all arrows.
pub fn radical(m: &Module) -> Submodule {
    let alg = m.algebra();
    let mut spaces: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
    for a in 0..alg.num_arrows() {
        let t = alg.arrow_target(a);
        spaces[t] = spaces[t]
            .sum(&Subspace::column_space(&m.arrows[a]))
            .unwrap();
    }
    Submodule { spaces }
}

/// Multiplicity of each simple in the head `M/rad M`.
pub fn head(m: &Module) -> Vec<usize> {
    let r = radical(m);
    m.dims.iter().zip(r.dims()).map(|(d, e)| d - e).collect()
}

pub fn socle_multiplicities(m: &Module) -> Vec<usize> {
    socle(m).dims()
}

/// Trace of `Q` in `N`: the sum of the images of all maps `Q → N`.
pub fn trace(q: &Module, n: &Module) -> Submodule {
    let h = hom(q, n);
    let mut acc = Submodule::zero(n);
    for f in h.basis() {
        acc = acc.sum(&image_of(f));
    }
    acc
}

/// Module map `⊕ P(labels[i]) → target` sending the generator of the `i`-th
/// summand to `images[i] ∈ target_{labels[i]}`.
pub fn map_from_projectives(
    alg: &Arc<Algebra>,
    labels: &[usize],
    images: &[Vec<Rational>],
    target: &Module,
) -> (Module, ModuleMap) {
    let parts: Vec<Module> = labels.iter().map(|&v| Module::projective(alg, v)).collect();
    let p = Module::direct_sum(alg, &parts);
    let blocks = (0..alg.num_vertices())
        .map(|w| {
            let mut cols: Vec<Vec<Rational>> = Vec::new();
            for (&v, y) in labels.iter().zip(images) {
                for b in alg.paths_between(v, w) {
                    cols.push(target.basis_action(b).mul_vec(y));
                }
            }
            let mut out = Matrix::zeros(target.dims[w], cols.len());
            for (j, c) in cols.iter().enumerate() {
                for (i, x) in c.iter().enumerate() {
                    out.set(i, j, x.clone());
                }
            }
            out
        })
        .collect();
    (p, ModuleMap { blocks })
}

/// Projective cover with the head generators chosen at the non-pivot
/// coordinates of the radical, vertices in order.
pub struct ProjectiveCover {
    pub labels: Vec<usize>,
    pub module: Module,
    pub map: ModuleMap,
    /// Generator images, `images[i] ∈ M_{labels[i]}`.
    pub images: Vec<Vec<Rational>>,
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let alg = m.algebra();
    let r = radical(m);
    let mut labels = Vec::new();
    let mut images = Vec::new();
    for v in 0..m.dims.len() {
        for c in r.spaces[v].non_pivots() {
            let mut e = vec![Rational::zero(); m.dims[v]];
            e[c] = Rational::one();
            labels.push(v);
            images.push(e);
        }
    }
    let (module, map) = map_from_projectives(alg, &labels, &images, m);
    ProjectiveCover {
        labels,
        module,
        map,
        images,
    }
}

/// Injective hull as the dual of the projective cover of the dual.
pub fn injective_hull(m: &Module) -> (Module, ModuleMap) {
    let d = dualize(m);
    let cov = projective_cover(&d);
    let i = dualize_to(&cov.module, m.algebra()).unwrap();
    (i, cov.map.dual())
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).module.total_dim() == m.total_dim()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&dualize(m))
}

/// Lifts `g: M → N` through projective covers: returns `G: P_M → P_N` with
/// `π_N ∘ G = g ∘ π_M`.
pub fn lift_to_covers(
    pm: &ProjectiveCover,
    pn: &ProjectiveCover,
    g: &ModuleMap,
    target_p: &Module,
) -> Result<ModuleMap> {
    let alg = target_p.algebra();
    let mut images = Vec::with_capacity(pm.labels.len());
    for (&v, y) in pm.labels.iter().zip(&pm.images) {
        let want = g.blocks[v].mul_vec(y);
        let sol = crate::linalg::solve(&pn.map.blocks[v], &Matrix::column(&want))?
            .ok_or_else(|| Error::PreconditionFailed("cover is not surjective".into()))?;
        images.push(sol.col(0));
    }
    Ok(map_from_projectives(alg, &pm.labels, &images, target_p).1)
}

/// Lifts `g: P → N` along a surjection `pi: X → N` when `P = ⊕ P(labels[i])`
/// with known generators; `gen_images[i]` is the image of generator `i` under `g`.
pub fn lift_along(
    alg: &Arc<Algebra>,
    labels: &[usize],
    gen_images: &[Vec<Rational>],
    pi: &ModuleMap,
    x: &Module,
) -> Result<ModuleMap> {
    let mut images = Vec::with_capacity(labels.len());
    for (&v, want) in labels.iter().zip(gen_images) {
        let sol = crate::linalg::solve(&pi.blocks[v], &Matrix::column(want))?
            .ok_or_else(|| Error::PreconditionFailed("map does not lift".into()))?;
        images.push(sol.col(0));
    }
    Ok(map_from_projectives(alg, labels, &images, x).1)
}

/// One indecomposable summand with its structure maps.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

/// Splits `m` into indecomposable summands via primitive idempotents of `End(m)`.
pub fn split_summands(m: &Module) -> Result<Vec<Summand>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let idem = split::primitive_idempotents(&end_matrices(m), m.total_dim())?;
    Ok(idem
        .iter()
        .map(|e| {
            let e = ModuleMap::from_matrix(m, m, e);
            let img = image_of(&e);
            let (module, inclusion) = sub(m, &img);
            let projection = ModuleMap {
                blocks: e
                    .blocks
                    .iter()
                    .zip(&img.spaces)
                    .map(|(b, sp)| b.select_rows(sp.pivots()))
                    .collect(),
            };
            Summand {
                module,
                inclusion,
                projection,
            }
        })
        .collect())
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    Ok(!m.is_zero() && split::primitive_idempotents(&end_matrices(m), m.total_dim())?.len() == 1)
}

/// An isomorphism `m → n`, if one exists.
pub fn module_iso(m: &Module, n: &Module) -> Result<Option<ModuleMap>> {
    m.check_same_algebra(n)?;
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleMap::zero(m, n)));
    }
    let to_mats = |h: &HomSpace| {
        h.basis()
            .iter()
            .map(ModuleMap::to_matrix)
            .collect::<Vec<_>>()
    };
    let xy = to_mats(&hom(m, n));
    if xy.is_empty() {
        return Ok(None);
    }
    let yx = to_mats(&hom(n, m));
    let found = split::find_iso(
        &xy,
        &yx,
        &end_matrices(m),
        &end_matrices(n),
        m.total_dim(),
        n.total_dim(),
    )?;
    Ok(found.map(|mat| ModuleMap::from_matrix(m, n, &mat)))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(module_iso(m, n)?.is_some())
}

/// Indecomposable summands grouped by isomorphism class, in order of first appearance.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut classes: Vec<(Module, usize)> = Vec::new();
    for s in split_summands(m)? {
        let mut placed = false;
        for (rep, k) in classes.iter_mut() {
            if is_isomorphic(rep, &s.module)? {
                *k += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((s.module, 1));
        }
    }
    Ok(classes)
}

/// One copy of each isomorphism class of indecomposable summand.
pub fn basic_part(m: &Module) -> Result<Module> {
    let parts: Vec<Module> = decompose(m)?.into_iter().map(|(x, _)| x).collect();
    Ok(Module::direct_sum(m.algebra(), &parts))
}

/// Whether every indecomposable summand of `m` is isomorphic to one in `pool`.
pub fn in_add(m: &Module, pool: &[Module]) -> Result<bool> {
    for (x, _) in decompose(m)? {
        let mut ok = false;
        for p in pool {
            if is_isomorphic(&x, p)? {
                ok = true;
                break;
            }
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
