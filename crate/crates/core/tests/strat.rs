mod common;

use std::sync::Arc;

use proptest::prelude::*;
use stratalg::algebra::{build_algebra, Algebra, Quiver};
use stratalg::linalg::{q, Matrix};
use stratalg::module::{is_isomorphic, Module};
use stratalg::strat::{Family, StratOrder, Stratified};
use stratalg::Error;

fn a3() -> Arc<Algebra> {
    build_algebra(&Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]), &[], 12).unwrap()
}

fn a3_module() -> impl Strategy<Value = Module> {
    prop::collection::vec(0usize..=2, 3).prop_flat_map(|dims| {
        let sizes = [dims[0] * dims[1], dims[1] * dims[2]];
        (
            Just(dims),
            prop::collection::vec(-1i64..=1, sizes[0]),
            prop::collection::vec(-1i64..=1, sizes[1]),
        )
            .prop_map(|(dims, a, b)| {
                let ma = Matrix::from_vec(dims[0], dims[1], a.into_iter().map(q).collect()).unwrap();
                let mb = Matrix::from_vec(dims[1], dims[2], b.into_iter().map(q).collect()).unwrap();
                Module::new(&a3(), dims, vec![ma, mb]).unwrap()
            })
    })
}

fn orders() -> impl Strategy<Value = Vec<(&'static str, &'static str)>> {
    prop::sample::select(vec![
        vec![("1", "2"), ("2", "3")],
        vec![("2", "1"), ("3", "2")],
        vec![("2", "1"), ("2", "3")],
        vec![("1", "2"), ("3", "2")],
        vec![],
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Hereditary algebras are quasi-hereditary for every adapted order;
    /// flags must agree with the Ext criterion whenever stratified.
    #[test]
    fn flag_criterion_on_random_modules(m in a3_module(), pairs in orders()) {
        let a = m.algebra().clone();
        let s = Stratified::new(&a, StratOrder::from_str_pairs(a.vertex_labels(), &pairs).unwrap()).unwrap();
        if s.is_standardly_stratified() {
            let flag = s.has_flag(&m, Family::Delta).unwrap();
            let ext = s.ext_vanishes_against(&m, Family::NablaBar).unwrap();
            prop_assert_eq!(flag.is_some(), ext);
            if let Some(cert) = flag {
                let dim: usize = cert.iter().map(|&l| s.standard(l).total_dim()).sum();
                prop_assert_eq!(dim, m.total_dim());
            }
            let coflag = s.has_flag(&m, Family::NablaBar).unwrap();
            prop_assert_eq!(coflag.is_some(), s.ext_from_family_vanishes(&m, Family::Delta).unwrap());
        }
    }

    #[test]
    fn closure_is_a_preorder(pairs in orders()) {
        let a = a3();
        let o = StratOrder::from_str_pairs(a.vertex_labels(), &pairs).unwrap();
        for i in 0..3 {
            prop_assert!(o.leq(i, i));
            for j in 0..3 {
                for k in 0..3 {
                    if o.leq(i, j) && o.leq(j, k) {
                        prop_assert!(o.leq(i, k));
                    }
                }
            }
        }
        let ext = o.linear_extension();
        for (x, &i) in ext.iter().enumerate() {
            for &j in &ext[x + 1..] {
                prop_assert!(!o.less(j, i));
            }
        }
    }
}

#[test]
fn sl2_standard_modules() {
    let f = common::fixture("sl2-block");
    let a = f.alg();
    // order 2 ≺ 1: Δ(2) = L(2), Δ(1) = P(1)
    assert!(is_isomorphic(f.strat.standard(1), &Module::simple(a, 1)).unwrap());
    assert!(is_isomorphic(f.strat.standard(0), &Module::projective(a, 0)).unwrap());
    assert!(f.strat.is_quasi_hereditary().unwrap());
}

#[test]
fn hc_toy_is_properly_stratified_not_quasi_hereditary() {
    let f = common::fixture("hc-toy");
    assert!(f.strat.is_standardly_stratified());
    assert!(f.strat.is_properly_stratified().unwrap());
    assert!(!f.strat.is_quasi_hereditary().unwrap());
    // Δ(2) = P(2) has L(2) twice; Δ̄(2) has it once
    assert_eq!(f.strat.standard(1).dims(), &[2, 2]);
    assert_eq!(f.strat.proper_standard(1).dims(), &[1, 1]);
}

#[test]
fn nongood_cycle_is_not_stratified() {
    let f = common::fixture("nongood");
    let v = f.strat.check_standardly_stratified();
    assert!(!v.holds);
    assert!(v.failure.is_some());
}

#[test]
fn unknown_label_in_order() {
    let a = a3();
    let e = StratOrder::from_str_pairs(a.vertex_labels(), &[("1", "9")]);
    assert!(matches!(e, Err(Error::InvalidOrder(_))));
}

#[test]
fn corpus_strat_invariants() {
    let fixtures = common::corpus();
    let failures = common::run_over_corpus(&fixtures, common::STRAT_INVARIANTS);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
