//! Bound quiver algebras over the rationals.
//!
//! Composition convention: in a product `p·q` the path `p` is traversed
//! first, so `a₁·a₂` needs `target(a₁) = source(a₂)`. A path `a₁…a_k` acts
//! on a representation as `M(a_k)⋯M(a₁)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Rational, Subspace};

pub const DEFAULT_LENGTH_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Self {
        Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(n, s, t)| Arrow {
                    name: n.to_string(),
                    source: s.to_string(),
                    target: t.to_string(),
                })
                .collect(),
        }
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate arrow {:?}",
                    a.name
                )));
            }
            for end in [&a.source, &a.target] {
                if self.vertex_index(end).is_none() {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow {:?} refers to unknown vertex {end:?}",
                        a.name
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A linear combination of parallel paths, each path given by arrow names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationElement {
    pub terms: Vec<(Rational, Vec<String>)>,
}

impl RelationElement {
    pub fn monomial(path: &[&str]) -> Self {
        RelationElement {
            terms: vec![(q(1), path.iter().map(|s| s.to_string()).collect())],
        }
    }

    pub fn new(terms: Vec<(Rational, Vec<&str>)>) -> Self {
        RelationElement {
            terms: terms
                .into_iter()
                .map(|(c, p)| (c, p.into_iter().map(String::from).collect()))
                .collect(),
        }
    }
}

/// A path in the quiver: a start vertex and a (possibly empty) arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }
}

type Sparse = Vec<(usize, Rational)>;

pub struct Algebra {
    quiver: Quiver,
    relations: Vec<RelationElement>,
    length_cap: usize,
    arrow_ends: Vec<(usize, usize)>,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    reductions: HashMap<Path, Sparse>,
    nilpotency: usize,
    mult: Vec<Vec<Sparse>>,
    opposite: OnceLock<Arc<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("dim", &self.dim())
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.relations == other.relations
            && self.length_cap == other.length_cap
    }
}

impl Eq for Algebra {}

/// Builds the algebra `kQ/I` for the ideal generated by `rels`.
///
/// The basis is computed degree by degree: for `N = 1, 2, …` the span of all
/// `u·r·v` truncated to paths of length at most `N` is reduced, and the
/// construction stops at the first `N` for which every path of length `N`
/// lies in that span.
pub fn build_algebra(
    quiver: &Quiver,
    rels: &[RelationElement],
    length_cap: usize,
) -> Result<Arc<Algebra>> {
    if length_cap == 0 {
        return Err(Error::PreconditionFailed(
            "lengthCap must be at least 1".into(),
        ));
    }
    quiver.validate()?;
    let arrow_ends: Vec<(usize, usize)> = quiver
        .arrows
        .iter()
        .map(|a| {
            (
                quiver.vertex_index(&a.source).unwrap(),
                quiver.vertex_index(&a.target).unwrap(),
            )
        })
        .collect();

    let parsed = parse_relations(quiver, &arrow_ends, rels)?;

    // paths_by_len[l] = all paths of length l, sorted by key
    let mut paths_by_len: Vec<Vec<Path>> =
        vec![(0..quiver.vertices.len()).map(Path::trivial).collect()];
    for n in 1..=length_cap {
        let mut next = Vec::new();
        for p in &paths_by_len[n - 1] {
            let end = path_target(p, &arrow_ends);
            for (ai, &(s, _)) in arrow_ends.iter().enumerate() {
                if s == end {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
        }
        next.sort_by(|a, b| a.key().cmp(&b.key()));
        paths_by_len.push(next);

        // column order: shorter first, within a length larger keys first
        let mut columns: Vec<Path> = Vec::new();
        for l in 0..=n {
            columns.extend(paths_by_len[l].iter().rev().cloned());
        }
        let col_of: HashMap<&Path, usize> =
            columns.iter().enumerate().map(|(i, p)| (p, i)).collect();

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for rel in &parsed {
            let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap();
            if min_len > n {
                continue;
            }
            let slack = n - min_len;
            for lu in 0..=slack {
                for u in paths_by_len[lu]
                    .iter()
                    .filter(|u| path_target(u, &arrow_ends) == rel.source)
                {
                    for lv in 0..=(slack - lu) {
                        for v in paths_by_len[lv].iter().filter(|v| v.source == rel.target) {
                            let mut row = vec![Rational::zero(); columns.len()];
                            let mut any = false;
                            for (c, p) in &rel.terms {
                                if lu + p.len() + lv > n {
                                    continue;
                                }
                                let mut arrows = u.arrows.clone();
                                arrows.extend_from_slice(p);
                                arrows.extend_from_slice(&v.arrows);
                                let path = Path {
                                    source: u.source,
                                    arrows,
                                };
                                row[col_of[&path]] += c;
                                any = true;
                            }
                            if any {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        let w = Subspace::from_vectors(columns.len(), &rows);
        let top_ok = paths_by_len[n].iter().all(|p| {
            let mut e = vec![Rational::zero(); columns.len()];
            e[col_of[p]] = Rational::one();
            w.contains_vector(&e)
        });
        if !top_ok {
            if n == length_cap {
                return Err(Error::NonAdmissible(length_cap));
            }
            continue;
        }
        return finish_algebra(
            quiver.clone(),
            rels.to_vec(),
            length_cap,
            arrow_ends,
            n,
            columns,
            w,
        );
    }
    Err(Error::NonAdmissible(length_cap))
}

struct ParsedRelation {
    source: usize,
    target: usize,
    terms: Vec<(Rational, Vec<usize>)>,
}

fn parse_relations(
    quiver: &Quiver,
    ends: &[(usize, usize)],
    rels: &[RelationElement],
) -> Result<Vec<ParsedRelation>> {
    let mut out = Vec::new();
    for rel in rels {
        let mut combined: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        let mut st: Option<(usize, usize)> = None;
        for (c, names) in &rel.terms {
            if names.len() < 2 {
                return Err(Error::MalformedRelation(format!(
                    "path {names:?} has length below 2"
                )));
            }
            let mut idx = Vec::with_capacity(names.len());
            for n in names {
                idx.push(
                    quiver
                        .arrow_index(n)
                        .ok_or_else(|| Error::MalformedRelation(format!("unknown arrow {n:?}")))?,
                );
            }
            for w in idx.windows(2) {
                if ends[w[0]].1 != ends[w[1]].0 {
                    return Err(Error::MalformedRelation(format!(
                        "path {names:?} is not composable"
                    )));
                }
            }
            let ends_here = (ends[idx[0]].0, ends[*idx.last().unwrap()].1);
            match st {
                None => st = Some(ends_here),
                Some(prev) if prev != ends_here => {
                    return Err(Error::MalformedRelation(format!(
                        "relation mixes non-parallel paths ({names:?})"
                    )))
                }
                _ => {}
            }
            *combined.entry(idx).or_insert_with(Rational::zero) += c;
        }
        let terms: Vec<(Rational, Vec<usize>)> = combined
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (c, p))
            .collect();
        let Some((source, target)) = st else {
            return Err(Error::MalformedRelation("empty relation".into()));
        };
        if terms.is_empty() {
            // all coefficients cancel: the zero element imposes nothing
            continue;
        }
        out.push(ParsedRelation {
            source,
            target,
            terms,
        });
    }
    Ok(out)
}

fn path_target(p: &Path, ends: &[(usize, usize)]) -> usize {
    p.arrows.last().map_or(p.source, |&a| ends[a].1)
}

fn finish_algebra(
    quiver: Quiver,
    relations: Vec<RelationElement>,
    length_cap: usize,
    arrow_ends: Vec<(usize, usize)>,
    nilpotency: usize,
    columns: Vec<Path>,
    w: Subspace,
) -> Result<Arc<Algebra>> {
    let pivots = w.pivots().to_vec();
    let mut basis: Vec<Path> = w
        .non_pivots()
        .into_iter()
        .map(|c| columns[c].clone())
        .collect();
    basis.sort_by(|a, b| a.key().cmp(&b.key()));
    let basis_index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();

    let mut reductions = HashMap::new();
    for (row, &pc) in pivots.iter().enumerate() {
        let p = &columns[pc];
        if p.len() >= nilpotency {
            continue;
        }
        let mut red: Sparse = Vec::new();
        for (c, v) in w.basis().row(row).iter().enumerate() {
            if c != pc && !v.is_zero() {
                red.push((basis_index[&columns[c]], -v.clone()));
            }
        }
        red.sort_by_key(|(i, _)| *i);
        reductions.insert(p.clone(), red);
    }

    let mut alg = Algebra {
        quiver,
        relations,
        length_cap,
        arrow_ends,
        basis,
        basis_index,
        reductions,
        nilpotency,
        mult: vec![],
        opposite: OnceLock::new(),
    };
    let n = alg.basis.len();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if let Some(p) = alg.concat(&alg.basis[i], &alg.basis[j]) {
                mult[i][j] = alg.reduce_path(&p);
            }
        }
    }
    alg.mult = mult;
    alg.check_associative()?;
    Ok(Arc::new(alg))
}

impl Algebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[RelationElement] {
        &self.relations
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.quiver.vertices
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.quiver
            .vertex_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn arrow_source(&self, a: usize) -> usize {
        self.arrow_ends[a].0
    }

    pub fn arrow_target(&self, a: usize) -> usize {
        self.arrow_ends[a].1
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.quiver.arrows[a].name
    }

    /// Smallest `N` such that every path of length `N` vanishes.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path_target(&self, p: &Path) -> usize {
        path_target(p, &self.arrow_ends)
    }

    pub fn basis_source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.path_target(&self.basis[i])
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.basis_index[&Path::trivial(v)]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Indices of basis paths from `s` to `t`, in basis order.
    pub fn paths_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis_source(i) == s && self.basis_target(i) == t)
            .collect()
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_empty() {
            format!("e{}", self.vertex_label(p.source))
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrow_name(a))
                .collect::<Vec<_>>()
                .join("·")
        }
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.basis.iter().map(|p| self.path_name(p)).collect()
    }

    fn concat(&self, p: &Path, r: &Path) -> Option<Path> {
        if self.path_target(p) != r.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&r.arrows);
        Some(Path {
            source: p.source,
            arrows,
        })
    }

    /// Expresses an arbitrary path in the basis.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Rational)> {
        if p.len() >= self.nilpotency {
            return vec![];
        }
        if let Some(&i) = self.basis_index.get(p) {
            return vec![(i, Rational::one())];
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Structure constants: `b_i · b_j = Σ c_k b_k`, sparse.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in &self.mult[i][j] {
                    out[*k] += a * b * c;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn one(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for x in 0..self.num_vertices() {
            v[self.idempotent(x)] = Rational::one();
        }
        v
    }

    /// Left multiplication by `b_i` as a matrix on basis coordinates.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.mult[i][j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let mut lhs: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (m, c) in ij {
                        for (r, d) in &self.mult[*m][k] {
                            *lhs.entry(*r).or_insert_with(Rational::zero) += c * d;
                        }
                    }
                    let mut rhs: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (m, c) in &self.mult[j][k] {
                        for (r, d) in &self.mult[i][*m] {
                            *rhs.entry(*r).or_insert_with(Rational::zero) += c * d;
                        }
                    }
                    lhs.retain(|_, v| !v.is_zero());
                    rhs.retain(|_, v| !v.is_zero());
                    if lhs != rhs {
                        return Err(Error::MalformedRelation(
                            "multiplication table is not associative".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Span of the basis paths of length at least `k`, in basis coordinates.
    pub fn radical_power(&self, k: usize) -> Subspace {
        let vecs: Vec<Vec<Rational>> = (0..self.dim())
            .filter(|&i| self.basis[i].len() >= k)
            .map(|i| self.unit_vector(i))
            .collect();
        Subspace::from_vectors(self.dim(), &vecs)
    }

    /// The opposite algebra: every arrow reversed (keeping its name), every
    /// relation path reversed. Taking the opposite twice gives back an equal
    /// algebra.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let quiver = Quiver {
                    vertices: self.quiver.vertices.clone(),
                    arrows: self
                        .quiver
                        .arrows
                        .iter()
                        .map(|a| Arrow {
                            name: a.name.clone(),
                            source: a.target.clone(),
                            target: a.source.clone(),
                        })
                        .collect(),
                };
                let rels: Vec<RelationElement> = self
                    .relations
                    .iter()
                    .map(|r| RelationElement {
                        terms: r
                            .terms
                            .iter()
                            .map(|(c, p)| (c.clone(), p.iter().rev().cloned().collect()))
                            .collect(),
                    })
                    .collect();
                build_algebra(&quiver, &rels, self.length_cap)
                    .expect("the opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// Basis index in the opposite algebra of the reversed path `b_i`.
    pub fn opposite_basis_index(&self, i: usize) -> usize {
        let p = &self.basis[i];
        let rev = Path {
            source: self.path_target(p),
            arrows: p.arrows.iter().rev().copied().collect(),
        };
        self.opposite()
            .basis_index(&rev)
            .expect("reversed basis path is a basis path of the opposite")
    }

    /// Cartan matrix `C[λ][μ] = dim e_λ A e_μ = dim P(μ)_λ`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for i in 0..self.dim() {
            c[self.basis_target(i)][self.basis_source(i)] += 1;
        }
        c
    }

    /// Space of linear forms `f` with `f(xy) = f(yx)`, as coordinate vectors on the basis.
    pub fn central_forms(&self) -> Subspace {
        let n = self.dim();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut row = vec![Rational::zero(); n];
                for (k, c) in &self.mult[i][j] {
                    row[*k] += c;
                }
                for (k, c) in &self.mult[j][i] {
                    row[*k] -= c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        crate::linalg::kernel(&Matrix::from_rows(&rows, n).unwrap())
    }

    /// Gram matrix `G(f)_ij = f(b_i b_j)`.
    pub fn gram(&self, f: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for (k, c) in &self.mult[i][j] {
                    acc += c * &f[*k];
                }
                g.set(i, j, acc);
            }
        }
        g
    }

    /// Centre of the algebra in basis coordinates.
    pub fn centre(&self) -> Subspace {
        let n = self.dim();
        // z is central iff it commutes with every idempotent and every arrow
        let mut gens: Vec<usize> = (0..self.num_vertices())
            .map(|v| self.idempotent(v))
            .collect();
        gens.extend((0..self.dim()).filter(|&i| self.basis[i].len() == 1));
        let mut rows = Vec::new();
        for &g in &gens {
            // coefficient of z_j in (b_j g - g b_j)
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                for (k, c) in &self.mult[j][g] {
                    let v = m.get(*k, j) + c;
                    m.set(*k, j, v);
                }
                for (k, c) in &self.mult[g][j] {
                    let v = m.get(*k, j) - c;
                    m.set(*k, j, v);
                }
            }
            for r in 0..n {
                rows.push(m.row(r).to_vec());
            }
        }
        crate::linalg::kernel(&Matrix::from_rows(&rows, n).unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricVerdict {
    pub symmetric: bool,
    /// A symmetrizing form, when one was found.
    pub certificate: Option<Vec<Rational>>,
    /// False only when the answer is negative and the exhaustive fallback was skipped.
    pub exhaustive: bool,
}

/// Searches for a symmetric associative nondegenerate form.
pub fn is_symmetric(alg: &Algebra) -> SymmetricVerdict {
    let z = alg.central_forms();
    let n = alg.dim();
    let negative = SymmetricVerdict {
        symmetric: false,
        certificate: None,
        exhaustive: true,
    };
    if z.is_zero() {
        return negative;
    }
    let gens = z.basis_vectors();
    let grams: Vec<Matrix> = gens.iter().map(|f| alg.gram(f)).collect();

    // a vector killed by every G(f) makes all of them singular
    let mut stacked = grams[0].clone();
    for g in &grams[1..] {
        stacked = stacked.vstack(g);
    }
    if !crate::linalg::kernel(&stacked).is_zero() {
        return negative;
    }

    let combo = |t: &[Rational]| -> Vec<Rational> {
        let mut f = vec![Rational::zero(); n];
        for (c, g) in t.iter().zip(&gens) {
            for (x, y) in f.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        f
    };
    let accept = |f: Vec<Rational>| -> Option<SymmetricVerdict> {
        if alg.gram(&f).is_invertible() {
            Some(SymmetricVerdict {
                symmetric: true,
                certificate: Some(f),
                exhaustive: true,
            })
        } else {
            None
        }
    };

    let k = gens.len();
    for g in &gens {
        if let Some(v) = accept(g.clone()) {
            return v;
        }
    }
    for s in 1..=(n * k + 1) as i64 {
        let t: Vec<Rational> = (0..k as u32).map(|e| q(s.pow(e))).collect();
        if let Some(v) = accept(combo(&t)) {
            return v;
        }
    }
    // det G(Σ t_l f_l) is homogeneous of degree n; setting t_0 = 1 and
    // testing the grid {0..n}^(k-1) decides whether it vanishes identically
    let grid = (n as u64 + 1).checked_pow(k.saturating_sub(1) as u32);
    match grid {
        Some(g) if n <= 12 && g <= 20_000 => {
            let mut t = vec![Rational::zero(); k];
            t[0] = Rational::one();
            let mut idx = vec![0usize; k.saturating_sub(1)];
            loop {
                for (slot, &i) in idx.iter().enumerate() {
                    t[slot + 1] = q(i as i64);
                }
                if let Some(v) = accept(combo(&t)) {
                    return v;
                }
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return negative;
                    }
                    idx[pos] += 1;
                    if idx[pos] <= n {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
        _ => SymmetricVerdict {
            symmetric: false,
            certificate: None,
            exhaustive: false,
        },
    }
}

/// The dual extension of the path algebra of a directed quiver: reversed
/// copies `α*` of all arrows are added and every composite "forward arrow
/// then reversed arrow" is set to zero.
pub fn dual_extension(quiver: &Quiver) -> Result<Arc<Algebra>> {
    quiver.validate()?;
    for a in &quiver.arrows {
        let s = quiver.vertex_index(&a.source).unwrap();
        let t = quiver.vertex_index(&a.target).unwrap();
        if s <= t {
            return Err(Error::NotDirected(format!(
                "arrow {:?} goes from {:?} to {:?}",
                a.name, a.source, a.target
            )));
        }
    }
    let mut doubled = quiver.clone();
    for a in &quiver.arrows {
        doubled.arrows.push(Arrow {
            name: format!("{}*", a.name),
            source: a.target.clone(),
            target: a.source.clone(),
        });
    }
    let mut rels = Vec::new();
    for a in &quiver.arrows {
        for b in &quiver.arrows {
            // b* starts where b ends
            if a.target == b.target {
                rels.push(RelationElement {
                    terms: vec![(q(1), vec![a.name.clone(), format!("{}*", b.name)])],
                });
            }
        }
    }
    build_algebra(&doubled, &rels, DEFAULT_LENGTH_CAP)
}
