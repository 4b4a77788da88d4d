//! Corpus-wide invariant checks shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use stratalg::algebra::{is_symmetric, Algebra};
use stratalg::derived::{
    apply_functor_complex, hom_homotopy, resolve_module, serre_duality_check, BoundedComplex,
    DEFAULT_COMPLEX_CAP,
};
use stratalg::homological::{ext_dim, global_dimension, inverse_cartan, is_selfinjective};
use stratalg::linalg::{q, Matrix, Rational};
use stratalg::module::{
    decompose, dualize, hom, in_add, Intertwiners, OpPair, dualize_to, head, hom_dim, image_of, is_injective, is_isomorphic, is_projective,
    kernel_of, projective_cover, quotient, radical, socle_multiplicities, sub, trace, Module,
};
use stratalg::serre::{
    approx, basic_projective, is_good, m_lower, m_upper, nakayama, serre_pairing_table,
    symmetric_iff_nakayama_trivial, Coapp, ProjFunctorTable,
};
use stratalg::strat::{Family, Stratified};
use stratalg::tilting::{
    check_double_centraliser, dc_tilting, ringel_dual, ringel_functor, tilting_data, RingelDual, TiltingData,
};
use stratalg::zoo::{zoo_get, zoo_list, ZooEntry};

pub type Check = Result<(), String>;

pub const CAP: usize = 20;

pub struct Fixture {
    pub entry: ZooEntry,
    pub strat: Stratified,
    pub tilting: Option<TiltingData>,
    pub ringel: Option<RingelDual>,
    pub gl_dim: Option<usize>,
    /// Projectives, injectives, simples, standard and costandard modules.
    pub modules: Vec<(String, Module)>,
}

impl Fixture {
    pub fn alg(&self) -> &Arc<Algebra> {
        &self.entry.algebra
    }

    pub fn name(&self) -> &str {
        &self.entry.name
    }

    pub fn q_module(&self) -> Module {
        basic_projective(self.alg(), &self.entry.q_vertices)
    }

    pub fn is_qh(&self) -> bool {
        self.strat.is_quasi_hereditary().unwrap_or(false)
    }
}

pub fn fixture(name: &str) -> Fixture {
    let entry = zoo_get(name).unwrap();
    let a = entry.algebra.clone();
    let strat = Stratified::new(&a, entry.order.clone()).unwrap();
    let n = a.num_vertices();
    let mut modules = Vec::new();
    for v in 0..n {
        let l = a.vertex_label(v);
        modules.push((format!("P({l})"), Module::projective(&a, v)));
        modules.push((format!("I({l})"), Module::injective(&a, v)));
        modules.push((format!("L({l})"), Module::simple(&a, v)));
        modules.push((format!("Δ({l})"), strat.standard(v).clone()));
        modules.push((format!("∇({l})"), strat.costandard(v).clone()));
    }
    let (tilting, ringel) = if strat.is_standardly_stratified() {
        let td = tilting_data(&strat).unwrap();
        let rd = ringel_dual(&td).unwrap();
        (Some(td), Some(rd))
    } else {
        (None, None)
    };
    let gl_dim = global_dimension(&a, CAP).finite();
    Fixture {
        entry,
        strat,
        tilting,
        ringel,
        gl_dim,
        modules,
    }
}

pub fn corpus() -> Vec<Fixture> {
    zoo_list().into_iter().map(fixture).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: stratalg::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// algebra

pub fn associativity_and_unit(f: &Fixture) -> Check {
    let a = f.alg();
    let d = a.dim();
    let one = a.one();
    for i in 0..d {
        let bi = a.unit_vector(i);
        ensure(a.mul(&one, &bi) == bi && a.mul(&bi, &one) == bi, || format!("unit fails on basis {i}"))?;
        for j in 0..d {
            let bij = a.mul(&bi, &a.unit_vector(j));
            for k in 0..d {
                let bk = a.unit_vector(k);
                let l = a.mul(&bij, &bk);
                let r = a.mul(&bi, &a.mul(&a.unit_vector(j), &bk));
                ensure(l == r, || format!("associativity fails on ({i},{j},{k})"))?;
            }
        }
    }
    Ok(())
}

pub fn radical_powers_multiply(f: &Fixture) -> Check {
    let a = f.alg();
    for k in 0..=3 {
        for l in 0..=3 {
            let rk = a.radical_power(k);
            let rl = a.radical_power(l);
            let rkl = a.radical_power(k + l);
            for x in rk.basis_vectors() {
                for y in rl.basis_vectors() {
                    ensure(rkl.contains_vector(&a.mul(&x, &y)), || format!("rad^{k}·rad^{l} ⊄ rad^{}", k + l))?;
                }
            }
        }
    }
    Ok(())
}

pub fn opposite_involution(f: &Fixture) -> Check {
    let a = f.alg();
    let back = a.opposite().opposite();
    ensure(*back == **a, || "opposite is not an involution".into())?;
    ensure(
        stratalg::json::algebra_to_string(&back) == stratalg::json::algebra_to_string(a),
        || "serialized forms differ".into(),
    )
}

pub fn symmetric_certificate(f: &Fixture) -> Check {
    let a = f.alg();
    let v = is_symmetric(a);
    if !v.symmetric {
        return Ok(());
    }
    ensure(ok(is_selfinjective(a))?.is_some(), || "symmetric but not selfinjective".into())?;
    let cert = v.certificate.ok_or("symmetric without certificate")?;
    let g = a.gram(&cert);
    ensure(g == g.transpose(), || "Gram matrix not symmetric".into())?;
    ensure(g.is_invertible(), || "Gram matrix singular".into())
}

// modules

pub fn hom_duality(f: &Fixture) -> Check {
    for (mn, m) in &f.modules {
        for (nn, n) in &f.modules {
            let l = hom_dim(m, n);
            let r = hom_dim(&dualize(n), &dualize(m));
            ensure(l == r, || format!("hom({mn},{nn}) = {l} but dual side {r}"))?;
        }
    }
    Ok(())
}

pub fn dualize_involution(f: &Fixture) -> Check {
    for (name, m) in &f.modules {
        let back = ok(dualize_to(&dualize(m), f.alg()))?;
        ensure(back == *m, || format!("D²{name} ≠ {name}"))?;
    }
    Ok(())
}

pub fn trace_idempotence(f: &Fixture) -> Check {
    let a = f.alg();
    let qs: Vec<Module> = (0..a.num_vertices()).map(|v| Module::projective(a, v)).collect();
    for qm in &qs {
        for (name, m) in &f.modules {
            let t = trace(qm, m);
            let tm = sub(m, &t).0;
            let tt = trace(qm, &tm);
            ensure(tt.total_dim() == t.total_dim(), || format!("trace not idempotent on {name}"))?;
        }
    }
    Ok(())
}

pub fn cover_kernels_superfluous(f: &Fixture) -> Check {
    for (name, m) in &f.modules {
        let cov = projective_cover(m);
        let k = kernel_of(&cov.map);
        ensure(radical(&cov.module).contains(&k), || format!("cover kernel of {name} not in the radical"))?;
        ensure(image_of(&cov.map).total_dim() == m.total_dim(), || format!("cover of {name} not onto"))?;
    }
    Ok(())
}

pub fn decompose_partition(f: &Fixture) -> Check {
    let a = f.alg();
    let mut pool: Vec<Module> = f.modules.iter().map(|(_, m)| m.clone()).collect();
    if let Some(td) = &f.tilting {
        pool.push(td.characteristic.clone());
    }
    for m in pool.chunks(3).map(|c| Module::direct_sum(a, c)) {
        let parts = ok(decompose(&m))?;
        let mut dims = vec![0; a.num_vertices()];
        for (p, k) in &parts {
            for (d, x) in dims.iter_mut().zip(p.dims()) {
                *d += k * x;
            }
        }
        ensure(dims == m.composition_factors(), || "decompose changed composition factors".into())?;
    }
    Ok(())
}

pub fn euler_cartan(f: &Fixture) -> Check {
    if f.gl_dim.is_none() {
        return Ok(());
    }
    let a = f.alg();
    let ci = inverse_cartan(a).ok_or("Cartan matrix singular")?;
    let n = a.num_vertices();
    for l in 0..n {
        for mu in 0..n {
            let mut acc = 0i64;
            for k in 0..=f.gl_dim.unwrap() {
                let e = ok(ext_dim(&Module::simple(a, l), &Module::simple(a, mu), k, CAP))? as i64;
                acc += if k % 2 == 0 { e } else { -e };
            }
            ensure(*ci.get(mu, l) == q(acc), || format!("Euler form ({l},{mu}) = {acc} disagrees with C⁻¹"))?;
        }
    }
    Ok(())
}

// stratification

pub fn standard_heads_and_factors(f: &Fixture) -> Check {
    let s = &f.strat;
    let o = s.order();
    let n = f.alg().num_vertices();
    for v in 0..n {
        for (name, m) in [("Δ", s.standard(v)), ("Δ̄", s.proper_standard(v))] {
            let h = head(m);
            let expect: Vec<usize> = (0..n).map(|w| usize::from(w == v)).collect();
            ensure(h == expect, || format!("head of {name}({v}) is {h:?}"))?;
        }
        for (w, &k) in s.standard(v).dims().iter().enumerate() {
            ensure(k == 0 || !o.less(v, w), || format!("Δ({v}) has factor L({w}) above it"))?;
        }
        let pb = s.proper_standard(v);
        let rad = sub(pb, &radical(pb)).0;
        for (w, &k) in rad.dims().iter().enumerate() {
            ensure(k == 0 || !o.leq(v, w), || format!("rad Δ̄({v}) has factor L({w}) not below it"))?;
        }
    }
    Ok(())
}

pub fn costandard_is_dual_standard(f: &Fixture) -> Check {
    let op = f.strat.opposite();
    for v in 0..f.alg().num_vertices() {
        let d = ok(dualize_to(op.standard(v), f.alg()))?;
        let nab = f.strat.costandard(v);
        ensure(d.dims() == nab.dims(), || format!("D Δ_op({v}) and ∇({v}) differ in dimension"))?;
        ensure(socle_multiplicities(&d) == socle_multiplicities(nab), || format!("socles differ at {v}"))?;
        ensure(ok(is_isomorphic(&d, nab))?, || format!("D Δ_op({v}) ≇ ∇({v})"))?;
    }
    Ok(())
}

pub fn flag_criterion(f: &Fixture) -> Check {
    if !f.strat.is_standardly_stratified() {
        return Ok(());
    }
    let mut pool: Vec<(String, Module)> = f.modules.clone();
    if let Some(td) = &f.tilting {
        for (v, t) in td.modules.iter().enumerate() {
            pool.push((format!("T({v})"), t.clone()));
        }
    }
    for (name, m) in &pool {
        let flag = ok(f.strat.has_flag(m, Family::Delta))?.is_some();
        let ext = ok(f.strat.ext_vanishes_against(m, Family::NablaBar))?;
        ensure(flag == ext, || format!("{name}: Δ-flag {flag} but Ext¹(−,∇̄)=0 is {ext}"))?;
    }
    Ok(())
}

pub fn bgg_count(f: &Fixture) -> Check {
    if !f.is_qh() {
        return Ok(());
    }
    let a = f.alg();
    for mu in 0..a.num_vertices() {
        let p = Module::projective(a, mu);
        let cert = ok(f.strat.has_flag(&p, Family::Delta))?.ok_or_else(|| format!("P({mu}) has no Δ-flag"))?;
        let total: usize = f
            .strat
            .flag_multiplicities(&cert)
            .iter()
            .enumerate()
            .map(|(l, k)| k * f.strat.standard(l).total_dim())
            .sum();
        ensure(total == p.total_dim(), || format!("Δ-flag of P({mu}) sums to {total}"))?;
    }
    Ok(())
}

// tilting and Ringel duality

pub fn tilting_ext_vanishing(f: &Fixture) -> Check {
    let Some(td) = &f.tilting else { return Ok(()) };
    if !f.is_qh() {
        return Ok(());
    }
    for (l, t) in td.modules.iter().enumerate() {
        for mu in 0..f.alg().num_vertices() {
            let x = ok(ext_dim(f.strat.standard(mu), t, 1, CAP))?;
            let y = ok(ext_dim(t, f.strat.costandard(mu), 1, CAP))?;
            ensure(x == 0 && y == 0, || format!("Ext¹(Δ({mu}), T({l})) = {x}, Ext¹(T({l}), ∇({mu})) = {y}"))?;
        }
    }
    Ok(())
}

fn delta_flagged(f: &Fixture) -> Result<Vec<(String, Module)>, String> {
    let mut out = Vec::new();
    for (name, m) in &f.modules {
        if ok(f.strat.has_flag(m, Family::Delta))?.is_some() {
            out.push((name.clone(), m.clone()));
        }
    }
    Ok(out)
}

pub fn ringel_equivalence_on_flags(f: &Fixture) -> Check {
    let Some(rd) = &f.ringel else { return Ok(()) };
    let flagged = delta_flagged(f)?;
    let images: Vec<Module> = flagged
        .iter()
        .map(|(_, m)| ok(ringel_functor(rd, m)))
        .collect::<Result<_, _>>()?;
    for (i, (mn, m)) in flagged.iter().enumerate() {
        for (j, (nn, n)) in flagged.iter().enumerate() {
            let l = hom_dim(m, n);
            let r = hom_dim(&images[j], &images[i]);
            ensure(l == r, || format!("hom({mn},{nn}) = {l} but hom(R{nn},R{mn}) = {r}"))?;
        }
    }
    Ok(())
}

pub fn ringel_exact_on_flags(f: &Fixture) -> Check {
    let Some(rd) = &f.ringel else { return Ok(()) };
    let a = f.alg();
    for v in 0..a.num_vertices() {
        // 0 → K → P(v) → Δ(v) → 0 with K Δ-flagged on standardly stratified algebras
        let p = Module::projective(a, v);
        let k = f.strat.standard_kernel(v);
        let d = f.strat.standard(v);
        let dims = |m: &Module| ok(ringel_functor(rd, m)).map(|x| x.total_dim());
        let (rp, rk, rdl) = (dims(&p)?, dims(&k)?, dims(d)?);
        ensure(rp == rk + rdl, || format!("R not exact on 0→K→P({v})→Δ({v})→0: {rk}+{rdl}≠{rp}"))?;
    }
    Ok(())
}

pub fn dc_certificate(f: &Fixture) -> Check {
    let Some(td) = &f.tilting else { return Ok(()) };
    let dc = ok(dc_tilting(td))?;
    let cert = ok(f.strat.has_flag(&dc.coker, Family::Delta))?.ok_or("cokernel lost its Δ-flag")?;
    let total: usize = cert.iter().map(|&l| f.strat.standard(l).total_dim()).sum();
    ensure(total == dc.coker.total_dim(), || "cokernel certificate does not account for its dimension".into())?;
    ensure(dc.coker_flag.len() == cert.len(), || "recorded certificate length differs".into())?;
    if dc.double_centraliser {
        ensure(check_double_centraliser(&dc.x), || "double centraliser not reproducible".into())?;
    }
    Ok(())
}

/// `Hom_{End X}(Hom(X, M), Hom(X, N))` computed with explicit right actions.
pub fn hom_after_v(x: &Module, m: &Module, n: &Module) -> usize {
    let ends = hom(x, x);
    let action = |t: &Module| -> (usize, Vec<Matrix>) {
        let h = hom(x, t);
        let mats = ends
            .basis()
            .iter()
            .map(|e| {
                let cols: Vec<Vec<Rational>> = h.basis().iter().map(|phi| h.coords(&phi.compose(e))).collect();
                let mut mat = Matrix::zeros(h.dim(), h.dim());
                for (c, col) in cols.iter().enumerate() {
                    for (r, v) in col.iter().enumerate() {
                        mat.set(r, c, v.clone());
                    }
                }
                mat
            })
            .collect();
        (h.dim(), mats)
    };
    let (dm, am) = action(m);
    let (dn, an) = action(n);
    let ops: Vec<OpPair> = am
        .iter()
        .zip(&an)
        .map(|(s, t)| OpPair { from: 0, to: 0, src: s, tgt: t })
        .collect();
    Intertwiners::solve(&[dm], &[dn], &ops).dim()
}

pub fn fully_faithful_on_tilting(f: &Fixture) -> Check {
    let Some(td) = &f.tilting else { return Ok(()) };
    let dc = ok(dc_tilting(td))?;
    if !dc.double_centraliser {
        return Ok(());
    }
    // only when every T(λ) is cogenerated by X: X injective, or T ∈ add(X)
    if !is_injective(&dc.x) && !ok(in_add(&td.characteristic, &dc.x_summands))? {
        return Ok(());
    }
    for (i, t1) in td.modules.iter().enumerate() {
        for (j, t2) in td.modules.iter().enumerate() {
            let l = hom_dim(t1, t2);
            let r = hom_after_v(&dc.x, t1, t2);
            ensure(l == r, || format!("hom(T{i},T{j}) = {l} but {r} after Hom(X,−)"))?;
        }
    }
    Ok(())
}

// Serre functors

pub fn serre_pairing(f: &Fixture) -> Check {
    for (x, y, l, r) in serre_pairing_table(f.alg()) {
        ensure(l == r, || format!("hom(P{x}, H P{y}) = {l} but hom(P{y}, P{x}) = {r}"))?;
    }
    Ok(())
}

fn q_ready(f: &Fixture) -> Option<(Module, Coapp)> {
    if f.entry.q_vertices.is_empty() {
        return None;
    }
    let qm = f.q_module();
    let c = Coapp::new(&qm).ok()?;
    Some((qm, c))
}

pub fn q_homs_preserved(f: &Fixture) -> Check {
    let Some((qm, c)) = q_ready(f) else { return Ok(()) };
    for (name, m) in &f.modules {
        let base = hom_dim(&qm, m);
        ensure(hom_dim(&qm, &c.apply(m)) == base, || format!("coapp changes Q-homs on {name}"))?;
        ensure(hom_dim(&qm, &ok(m_upper(&qm, m))?) == base, || format!("M^Q changes Q-homs on {name}"))?;
        let low = ok(m_lower(&qm, m))?;
        ensure(hom_dim(&qm, &low) == base, || format!("M_Q changes Q-homs on {name}"))?;
        let t = trace(&qm, m);
        ensure(hom_dim(&qm, &quotient(m, &t).0) == 0, || format!("hom(Q, M/M_Q) ≠ 0 on {name}"))?;
    }
    Ok(())
}

pub fn adjunction_dims(f: &Fixture) -> Check {
    let Some((_, c)) = q_ready(f) else { return Ok(()) };
    for (mn, m) in &f.modules {
        let cm = c.apply(m);
        for (nn, n) in &f.modules {
            let l = hom_dim(&cm, n);
            let r = hom_dim(m, &ok(approx(&c, n))?);
            ensure(l == r, || format!("hom(coapp {mn}, {nn}) = {l} but hom({mn}, approx {nn}) = {r}"))?;
        }
    }
    Ok(())
}

pub fn good_preserved(f: &Fixture) -> Check {
    if f.entry.q_vertices.is_empty() {
        return Ok(());
    }
    let qm = f.q_module();
    if !is_projective(&qm) || !is_injective(&qm) || !ok(is_good(&qm))? {
        return Ok(());
    }
    let hq = nakayama(&qm);
    ensure(is_projective(&hq) && is_injective(&hq), || "H Q not projective-injective".into())?;
    let before = ok(decompose(&qm))?;
    let after = ok(decompose(&hq))?;
    ensure(before.len() == after.len(), || "summand count changed under H".into())?;
    for (x, k) in &before {
        let mut hit = false;
        for (y, l) in &after {
            if k == l && ok(is_isomorphic(x, y))? {
                hit = true;
            }
        }
        ensure(hit, || "H Q has a different summand multiset".into())?;
    }
    Ok(())
}

pub fn symmetric_iff_trivial(f: &Fixture) -> Check {
    if f.entry.q_vertices.is_empty() {
        return Ok(());
    }
    let qm = f.q_module();
    if f.gl_dim.is_none() || !is_projective(&qm) || !is_injective(&qm) || !ok(is_good(&qm))? {
        return Ok(());
    }
    let (sym, iso) = ok(symmetric_iff_nakayama_trivial(f.alg(), &qm))?;
    ensure(sym == iso, || format!("End(Q) symmetric = {sym} but H|add(Q) ≅ id is {iso}"))
}

// derived

pub fn complexes_square_to_zero(f: &Fixture) -> Check {
    if f.gl_dim.is_none() {
        return Ok(());
    }
    let h = ProjFunctorTable::nakayama(f.alg());
    for (name, m) in &f.modules {
        let r = ok(resolve_module(m, DEFAULT_COMPLEX_CAP))?;
        ensure(r.is_complex(), || format!("resolution of {name} has d² ≠ 0"))?;
        ensure(ok(apply_functor_complex(&h, &r))?.is_complex(), || format!("H(res {name}) has d² ≠ 0"))?;
        for i in r.lo - 1..=r.hi() + 1 {
            let want = if i == 0 { m.dims().to_vec() } else { vec![0; m.dims().len()] };
            ensure(r.homology_dims(i) == want, || format!("res {name} has wrong homology in degree {i}"))?;
        }
    }
    Ok(())
}

pub fn ext_consistency(f: &Fixture) -> Check {
    let a = f.alg();
    let n = a.num_vertices();
    let depth = 4;
    for l in 0..n {
        let sl = Module::simple(a, l);
        let Ok(r) = resolve_module(&sl, DEFAULT_COMPLEX_CAP) else {
            continue;
        };
        for mu in 0..n {
            let s = BoundedComplex::stalk(&Module::simple(a, mu), 0);
            for k in 0..=depth {
                let x = hom_homotopy(&r, &s, k as i64);
                let y = ok(ext_dim(&sl, &Module::simple(a, mu), k, CAP))?;
                ensure(x == y, || format!("Ext^{k}(L{l},L{mu}): homotopy {x} vs resolution {y}"))?;
            }
        }
    }
    Ok(())
}

pub fn serre_table(f: &Fixture) -> Check {
    let Some(g) = f.gl_dim else { return Ok(()) };
    let a = f.alg();
    let n = a.num_vertices();
    let g = g as i64;
    for l in 0..n {
        for mu in 0..n {
            let rows = ok(serre_duality_check(&Module::simple(a, l), &Module::simple(a, mu), -g, g, CAP))?;
            for r in rows {
                ensure(r.equal, || format!("Serre row n={} for ({l},{mu}): {} vs {}", r.n, r.lhs, r.rhs))?;
            }
        }
    }
    Ok(())
}

pub type Invariant = (&'static str, fn(&Fixture) -> Check);

pub const ALGEBRA_INVARIANTS: &[Invariant] = &[
    ("associativity and unit", associativity_and_unit),
    ("radical powers", radical_powers_multiply),
    ("opposite involution", opposite_involution),
    ("symmetric certificate", symmetric_certificate),
];

pub const MODULE_INVARIANTS: &[Invariant] = &[
    ("hom duality", hom_duality),
    ("dualize involution", dualize_involution),
    ("trace idempotence", trace_idempotence),
    ("cover kernels", cover_kernels_superfluous),
    ("decompose partition", decompose_partition),
    ("Euler–Cartan", euler_cartan),
];

pub const STRAT_INVARIANTS: &[Invariant] = &[
    ("standard heads and factors", standard_heads_and_factors),
    ("costandard duality", costandard_is_dual_standard),
    ("flag criterion", flag_criterion),
    ("BGG count", bgg_count),
];

pub const TILTING_INVARIANTS: &[Invariant] = &[
    ("tilting Ext vanishing", tilting_ext_vanishing),
    ("Ringel equivalence", ringel_equivalence_on_flags),
    ("Ringel exactness", ringel_exact_on_flags),
    ("dc certificate", dc_certificate),
    ("fully faithful on tilting", fully_faithful_on_tilting),
];

pub const SERRE_INVARIANTS: &[Invariant] = &[
    ("Serre pairing", serre_pairing),
    ("Q-homs preserved", q_homs_preserved),
    ("adjunction dims", adjunction_dims),
    ("good preservation", good_preserved),
    ("symmetric iff trivial", symmetric_iff_trivial),
];

pub const DERIVED_INVARIANTS: &[Invariant] = &[
    ("d² = 0 and quasi-isomorphism", complexes_square_to_zero),
    ("Ext consistency", ext_consistency),
    ("Serre table", serre_table),
];

pub const ALL_INVARIANTS: &[&[Invariant]] = &[
    ALGEBRA_INVARIANTS,
    MODULE_INVARIANTS,
    STRAT_INVARIANTS,
    TILTING_INVARIANTS,
    SERRE_INVARIANTS,
    DERIVED_INVARIANTS,
];

/// Runs `checks` over the whole corpus, collecting failures as `entry: name: reason`.
pub fn run_over_corpus(corpus: &[Fixture], checks: &[Invariant]) -> Vec<String> {
    let mut failures = Vec::new();
    for f in corpus {
        for (name, check) in checks {
            if let Err(e) = check(f) {
                failures.push(format!("{}: {name}: {e}", f.name()));
            }
        }
    }
    failures
}
