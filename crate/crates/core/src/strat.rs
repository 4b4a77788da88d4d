//! Standard and proper standard modules, their duals, flags, and the
//! standardly stratified / quasi-hereditary / properly stratified predicates.

use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homological::ext_dim;
use crate::linalg::Subspace;
use crate::module::{
    dualize, dualize_to, generate, generated_at, head, is_isomorphic, quotient, radical, sub,
    Module,
};

pub const FLAG_EXT_CAP: usize = 20;

/// A preorder on the vertex labels, stored as its reflexive-transitive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratOrder {
    labels: Vec<String>,
    pairs: Vec<(String, String)>,
    leq: Vec<Vec<bool>>,
}

impl StratOrder {
    /// `pairs` are generators `(λ, μ)` meaning `λ ⪯ μ`.
    pub fn from_pairs(labels: &[String], pairs: &[(String, String)]) -> Result<Self> {
        let n = labels.len();
        let idx = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::InvalidOrder(format!("unknown label {s:?}")))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            leq[idx(a)?][idx(b)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(StratOrder {
            labels: labels.to_vec(),
            pairs: pairs.to_vec(),
            leq,
        })
    }

    pub fn from_str_pairs(labels: &[String], pairs: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<(String, String)> = pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        Self::from_pairs(labels, &owned)
    }

    pub fn discrete(labels: &[String]) -> Self {
        Self::from_pairs(labels, &[]).unwrap()
    }

    /// Total order with `labels[0] ≺ labels[1] ≺ …`.
    pub fn chain(labels: &[String]) -> Self {
        let pairs: Vec<(String, String)> = labels
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        Self::from_pairs(labels, &pairs).unwrap()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generator_pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// `i ≺ j`: `i ⪯ j` and not `j ⪯ i`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] && !self.leq[j][i]
    }

    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] && self.leq[j][i]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || !self.equivalent(i, j)))
    }

    /// The reversed preorder.
    pub fn opposite(&self) -> StratOrder {
        let pairs: Vec<(String, String)> = self
            .pairs
            .iter()
            .map(|(a, b)| (b.clone(), a.clone()))
            .collect();
        Self::from_pairs(&self.labels, &pairs).unwrap()
    }

    /// Linear extension, smallest first, ties broken by input label order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&i| !placed[i] && (0..n).all(|j| placed[j] || j == i || !self.less(j, i)))
                .expect("a strict preorder part has minimal elements");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    fn maximal_class_in(&self, support: &[usize]) -> Vec<usize> {
        let top = *support
            .iter()
            .find(|&&i| !support.iter().any(|&j| self.less(i, j)))
            .expect("finite support has maximal elements");
        support
            .iter()
            .copied()
            .filter(|&j| self.equivalent(top, j))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Delta,
    DeltaBar,
    Nabla,
    NablaBar,
}

/// An algebra together with a preorder on its simples.
#[derive(Clone, Debug)]
pub struct Stratified {
    alg: Arc<Algebra>,
    order: StratOrder,
    delta: Vec<Module>,
    delta_bar: Vec<Module>,
    nabla: Vec<Module>,
    nabla_bar: Vec<Module>,
    verdict: OnceLock<StratVerdict>,
}

fn standard_over(alg: &Arc<Algebra>, order: &StratOrder, v: usize) -> (Module, Module) {
    let n = alg.num_vertices();
    let p = Module::projective(alg, v);
    let above: Vec<usize> = (0..n).filter(|&u| order.less(v, u)).collect();
    let tr = generated_at(&p, &above);
    let (delta, _) = quotient(&p, &tr);

    let weakly_above: Vec<usize> = (0..n).filter(|&u| order.leq(v, u)).collect();
    let rad = radical(&p);
    let start: Vec<Subspace> = (0..n)
        .map(|u| {
            if weakly_above.contains(&u) {
                rad.spaces[u].clone()
            } else {
                Subspace::zero(p.dim_at(u))
            }
        })
        .collect();
    let tr_bar = generate(&p, start);
    let (delta_bar, _) = quotient(&p, &tr_bar);
    (delta, delta_bar)
}

impl Stratified {
    pub fn new(alg: &Arc<Algebra>, order: StratOrder) -> Result<Self> {
        if order.labels() != alg.vertex_labels() {
            return Err(Error::InvalidOrder(
                "order labels must match the algebra's vertices".into(),
            ));
        }
        let n = alg.num_vertices();
        let op = alg.opposite();
        let mut delta = Vec::with_capacity(n);
        let mut delta_bar = Vec::with_capacity(n);
        let mut nabla = Vec::with_capacity(n);
        let mut nabla_bar = Vec::with_capacity(n);
        for v in 0..n {
            let (d, db) = standard_over(alg, &order, v);
            delta.push(d);
            delta_bar.push(db);
            let (od, odb) = standard_over(&op, &order, v);
            nabla.push(dualize_to(&od, alg)?);
            nabla_bar.push(dualize_to(&odb, alg)?);
        }
        Ok(Stratified {
            alg: alg.clone(),
            order,
            delta,
            delta_bar,
            nabla,
            nabla_bar,
            verdict: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn order(&self) -> &StratOrder {
        &self.order
    }

    pub fn label(&self, v: usize) -> &str {
        self.alg.vertex_label(v)
    }

    pub fn standard(&self, v: usize) -> &Module {
        &self.delta[v]
    }

    pub fn proper_standard(&self, v: usize) -> &Module {
        &self.delta_bar[v]
    }

    pub fn costandard(&self, v: usize) -> &Module {
        &self.nabla[v]
    }

    pub fn proper_costandard(&self, v: usize) -> &Module {
        &self.nabla_bar[v]
    }

    pub fn family(&self, f: Family, v: usize) -> &Module {
        match f {
            Family::Delta => &self.delta[v],
            Family::DeltaBar => &self.delta_bar[v],
            Family::Nabla => &self.nabla[v],
            Family::NablaBar => &self.nabla_bar[v],
        }
    }

    /// The same order on the opposite algebra; its standard modules are the
    /// duals of this algebra's costandard modules.
    pub fn opposite(&self) -> Stratified {
        Stratified::new(&self.alg.opposite(), self.order.clone()).expect("same labels")
    }

    /// Kernel of `P(λ) ↠ Δ(λ)`.
    pub fn standard_kernel(&self, v: usize) -> Module {
        let n = self.alg.num_vertices();
        let p = Module::projective(&self.alg, v);
        let above: Vec<usize> = (0..n).filter(|&u| self.order.less(v, u)).collect();
        sub(&p, &generated_at(&p, &above)).0
    }

    /// Both conditions of standard stratification, checked label by label.
    pub fn check_standardly_stratified(&self) -> StratVerdict {
        self.verdict.get_or_init(|| self.compute_verdict()).clone()
    }

    fn compute_verdict(&self) -> StratVerdict {
        let n = self.alg.num_vertices();
        let mut kernels = Vec::with_capacity(n);
        for v in 0..n {
            // (b) rad Δ(λ) only has factors L(μ) with μ ⪯ λ
            let mut dims = self.delta[v].dims().to_vec();
            dims[v] -= 1;
            if let Some(mu) = (0..n).find(|&u| dims[u] > 0 && !self.order.leq(u, v)) {
                return StratVerdict::fail(
                    v,
                    'b',
                    format!(
                        "Δ({}) has composition factor L({}) not below it",
                        self.label(v),
                        self.label(mu)
                    ),
                );
            }
            // (a) ker(P(λ) ↠ Δ(λ)) has a standard flag
            match self.peel_delta(&self.standard_kernel(v)) {
                Some(cert) => kernels.push(cert),
                None => {
                    return StratVerdict::fail(
                        v,
                        'a',
                        format!("ker(P({0}) → Δ({0})) has no standard flag", self.label(v)),
                    )
                }
            }
        }
        StratVerdict {
            holds: true,
            failure: None,
            kernel_flags: kernels,
        }
    }

    pub fn is_standardly_stratified(&self) -> bool {
        self.verdict.get_or_init(|| self.compute_verdict()).holds
    }

    pub fn is_quasi_hereditary(&self) -> Result<bool> {
        if !self.order.is_antisymmetric() || !self.is_standardly_stratified() {
            return Ok(false);
        }
        for v in 0..self.alg.num_vertices() {
            if !is_isomorphic(&self.delta[v], &self.delta_bar[v])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_properly_stratified(&self) -> Result<bool> {
        if !self.order.is_antisymmetric() || !self.is_standardly_stratified() {
            return Ok(false);
        }
        for v in 0..self.alg.num_vertices() {
            if self.peel_delta_bar(&self.delta[v]).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Flag certificate (labels of subquotients, bottom first), or `None`.
    ///
    /// On a standardly stratified algebra the constructive answer for `Δ` is
    /// compared with the criterion `Ext¹(M, ∇̄(μ)) = 0` for all `μ`, and for
    /// `∇̄` with `Ext¹(Δ(μ), M) = 0`.
    pub fn has_flag(&self, m: &Module, family: Family) -> Result<Option<Vec<usize>>> {
        m.check_same_algebra(&Module::zero(&self.alg))?;
        match family {
            Family::Delta => {
                let cert = self.peel_delta(m);
                if self.is_standardly_stratified() {
                    let homological = self.ext_vanishes_against(m, Family::NablaBar)?;
                    if homological != cert.is_some() {
                        return Err(Error::StratificationInvalid(format!(
                            "standard flag search says {}, Ext criterion says {}",
                            cert.is_some(),
                            homological
                        )));
                    }
                }
                Ok(cert)
            }
            Family::DeltaBar => Ok(self.peel_delta_bar(m)),
            Family::Nabla => {
                let op = self.opposite();
                Ok(op.peel_delta(&dualize(m)))
            }
            Family::NablaBar => {
                let op = self.opposite();
                let cert = op.peel_delta_bar(&dualize(m));
                if self.is_standardly_stratified() {
                    let homological = self.ext_from_family_vanishes(m, Family::Delta)?;
                    if homological != cert.is_some() {
                        return Err(Error::StratificationInvalid(format!(
                            "proper costandard flag search says {}, Ext criterion says {}",
                            cert.is_some(),
                            homological
                        )));
                    }
                }
                Ok(cert)
            }
        }
    }

    /// `Ext¹(M, X(μ)) = 0` for every `μ`.
    pub fn ext_vanishes_against(&self, m: &Module, family: Family) -> Result<bool> {
        for v in 0..self.alg.num_vertices() {
            if ext_dim(m, self.family(family, v), 1, FLAG_EXT_CAP)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Ext¹(X(μ), M) = 0` for every `μ`.
    pub fn ext_from_family_vanishes(&self, m: &Module, family: Family) -> Result<bool> {
        for v in 0..self.alg.num_vertices() {
            if ext_dim(self.family(family, v), m, 1, FLAG_EXT_CAP)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Peels off the submodule generated by a maximal class of the support,
    /// which must be a direct sum of standard modules.
    fn peel_delta(&self, m: &Module) -> Option<Vec<usize>> {
        let mut cert = Vec::new();
        let mut current = m.clone();
        while !current.is_zero() {
            let class = self.order.maximal_class_in(&current.support());
            let u = generated_at(&current, &class);
            let (umod, _) = sub(&current, &u);
            let h = head(&umod);
            let expected: usize = class
                .iter()
                .map(|&c| h[c] * self.delta[c].total_dim())
                .sum();
            if expected != umod.total_dim() {
                return None;
            }
            for &c in &class {
                cert.extend(std::iter::repeat_n(c, h[c]));
            }
            current = quotient(&current, &u).0;
        }
        Some(cert)
    }

    fn peel_delta_bar(&self, m: &Module) -> Option<Vec<usize>> {
        if m.is_zero() {
            return Some(vec![]);
        }
        let class = self.order.maximal_class_in(&m.support());
        let u = generated_at(m, &class);
        let (umod, _) = sub(m, &u);
        let h = head(&umod);
        let rad_u = radical(&umod);
        let start: Vec<Subspace> = (0..umod.dims().len())
            .map(|v| {
                if class.contains(&v) {
                    rad_u.spaces[v].clone()
                } else {
                    Subspace::zero(umod.dim_at(v))
                }
            })
            .collect();
        let v_sub = generate(&umod, start);
        let expected: usize = class
            .iter()
            .map(|&c| h[c] * self.delta_bar[c].total_dim())
            .sum();
        if expected != umod.total_dim() - v_sub.total_dim() {
            return None;
        }
        let (vmod, _) = sub(&umod, &v_sub);
        let mut cert = self.peel_delta_bar(&vmod)?;
        for &c in &class {
            cert.extend(std::iter::repeat_n(c, h[c]));
        }
        let rest = quotient(m, &u).0;
        cert.extend(self.peel_delta_bar(&rest)?);
        Some(cert)
    }

    /// Multiplicity of each standard module in a flag certificate.
    pub fn flag_multiplicities(&self, cert: &[usize]) -> Vec<usize> {
        let mut out = vec![0; self.alg.num_vertices()];
        for &c in cert {
            out[c] += 1;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratFailure {
    pub label: usize,
    pub condition: char,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratVerdict {
    pub holds: bool,
    pub failure: Option<StratFailure>,
    /// Standard flag certificates of `ker(P(λ) ↠ Δ(λ))`, per label.
    pub kernel_flags: Vec<Vec<usize>>,
}

impl StratVerdict {
    fn fail(label: usize, condition: char, reason: String) -> Self {
        StratVerdict {
            holds: false,
            failure: Some(StratFailure {
                label,
                condition,
                reason,
            }),
            kernel_flags: vec![],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Quiver, RelationElement};

    fn labels(a: &Algebra) -> Vec<String> {
        a.vertex_labels().to_vec()
    }

    fn sl2() -> Arc<Algebra> {
        build_algebra(
            &Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]),
            &[RelationElement::monomial(&["a", "b"])],
            12,
        )
        .unwrap()
    }

    #[test]
    fn order_closure() {
        let l: Vec<String> = ["1", "2", "3"].iter().map(|s| s.to_string()).collect();
        let o = StratOrder::from_str_pairs(&l, &[("1", "2"), ("2", "3")]).unwrap();
        assert!(o.leq(0, 2));
        assert!(o.less(0, 2));
        assert!(!o.leq(2, 0));
        assert_eq!(o.linear_extension(), vec![0, 1, 2]);
        assert_eq!(o.opposite().linear_extension(), vec![2, 1, 0]);
        assert!(StratOrder::from_str_pairs(&l, &[("1", "9")]).is_err());
        let pre = StratOrder::from_str_pairs(&l, &[("1", "2"), ("2", "1")]).unwrap();
        assert!(!pre.is_antisymmetric());
    }

    #[test]
    fn sl2_standard_modules() {
        let a = sl2();
        let o = StratOrder::from_str_pairs(&labels(&a), &[("2", "1")]).unwrap();
        let s = Stratified::new(&a, o).unwrap();
        assert_eq!(s.standard(0).dims(), &[1, 1]);
        assert_eq!(s.standard(1).dims(), &[0, 1]);
        assert_eq!(s.costandard(0).total_dim(), 2);
        assert!(s.is_standardly_stratified());
        assert!(s.is_quasi_hereditary().unwrap());
        let p2 = Module::projective(&a, 1);
        assert_eq!(s.has_flag(&p2, Family::Delta).unwrap(), Some(vec![0, 1]));
        let l1 = Module::simple(&a, 0);
        assert_eq!(s.has_flag(&l1, Family::Delta).unwrap(), None);
    }

    #[test]
    fn sl2_other_order_fails() {
        let a = sl2();
        let o = StratOrder::from_str_pairs(&labels(&a), &[("1", "2")]).unwrap();
        let s = Stratified::new(&a, o).unwrap();
        let v = s.check_standardly_stratified();
        assert!(!v.holds);
        assert_eq!(v.failure.unwrap().condition, 'a');
    }

    #[test]
    fn discrete_order_gives_projectives() {
        let a = sl2();
        let s = Stratified::new(&a, StratOrder::discrete(&labels(&a))).unwrap();
        assert_eq!(s.standard(0).total_dim(), 2);
        assert_eq!(s.standard(1).total_dim(), 3);
        assert_eq!(s.proper_standard(0).total_dim(), 2);
        assert_eq!(s.proper_standard(1).total_dim(), 2);
    }
}
