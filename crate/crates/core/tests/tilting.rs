mod common;

use std::sync::Arc;

use proptest::prelude::*;
use stratalg::algebra::{build_algebra, Algebra, Quiver};
use stratalg::linalg::{q, Matrix};
use stratalg::module::{hom_dim, is_indecomposable, is_injective, is_isomorphic, is_projective, Module};
use stratalg::strat::{Family, StratOrder, Stratified};
use stratalg::tilting::{
    cartan_equivalent, check_double_centraliser, dc_tilting, double_centraliser_dims, ringel_dual,
    ringel_functor, tilting_data,
};

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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ringel_functor_is_an_equivalence_on_flags(m in a3_module(), n in a3_module(), natural in any::<bool>()) {
        let a = m.algebra().clone();
        let pairs: &[(&str, &str)] = if natural { &[("1", "2"), ("2", "3")] } else { &[("2", "1"), ("3", "2")] };
        let s = Stratified::new(&a, StratOrder::from_str_pairs(a.vertex_labels(), pairs).unwrap()).unwrap();
        prop_assume!(s.has_flag(&m, Family::Delta).unwrap().is_some());
        prop_assume!(s.has_flag(&n, Family::Delta).unwrap().is_some());
        let rd = ringel_dual(&tilting_data(&s).unwrap()).unwrap();
        let rm = ringel_functor(&rd, &m).unwrap();
        let rn = ringel_functor(&rd, &n).unwrap();
        prop_assert_eq!(hom_dim(&m, &n), hom_dim(&rn, &rm));
        prop_assert!(rd.strat.has_flag(&rm, Family::Delta).unwrap().is_some());
    }
}

#[test]
fn tilting_modules_map_to_projectives() {
    for f in common::corpus().iter().filter(|f| f.is_qh()) {
        let td = f.tilting.as_ref().unwrap();
        let rd = f.ringel.as_ref().unwrap();
        rd.presented.verify().unwrap();
        for t in &td.modules {
            let rt = ringel_functor(rd, t).unwrap();
            assert!(is_projective(&rt) && is_indecomposable(&rt).unwrap(), "{}", f.name());
        }
    }
}

#[test]
fn ringel_dual_twice() {
    for name in ["sl2-block", "tri3-natural"] {
        let f = common::fixture(name);
        let rd = f.ringel.as_ref().unwrap();
        let rr = ringel_dual(&tilting_data(&rd.strat).unwrap()).unwrap();
        assert!(cartan_equivalent(f.alg(), &rr.presented.algebra).is_some(), "{name}");
    }
}

#[test]
fn tri3_dichotomy() {
    let nat = common::fixture("tri3-natural");
    let dc = dc_tilting(nat.tilting.as_ref().unwrap()).unwrap();
    assert!(dc.x_is_characteristic);
    let rev = common::fixture("tri3-reversed");
    assert!(!check_double_centraliser(&rev.q_module()));
    let dc = dc_tilting(rev.tilting.as_ref().unwrap()).unwrap();
    assert!(dc.double_centraliser);
    assert!(!dc.x_in_add_q);
}

#[test]
fn dual_extension_tilting_is_neither_projective_nor_injective() {
    let f = common::fixture("dualext-a3");
    let td = f.tilting.as_ref().unwrap();
    let a = f.alg();
    let t3 = &td.modules[2];
    assert_eq!(t3.dims(), &[4, 2, 1]);
    for v in 0..3 {
        assert!(!is_isomorphic(t3, &Module::projective(a, v)).unwrap());
        assert!(!is_isomorphic(t3, &Module::injective(a, v)).unwrap());
    }
    assert!(!is_projective(t3) && !is_injective(t3));
    assert_eq!(double_centraliser_dims(t3), (14, 14));
    let dc = dc_tilting(td).unwrap();
    assert!(is_isomorphic(&dc.x, t3).unwrap());
}

/// Hom(X, −) with X = T(3) is not full on T(1) = L(1): the head of T(3) is
/// 2·L(1), so Hom(X, L(1)) is two-dimensional with a two-dimensional commutant.
#[test]
fn dual_extension_functor_not_full_on_tilting() {
    let f = common::fixture("dualext-a3");
    let td = f.tilting.as_ref().unwrap();
    let x = &td.modules[2];
    let t1 = &td.modules[0];
    assert_eq!(hom_dim(t1, t1), 1);
    assert_eq!(common::hom_after_v(x, t1, t1), 2);
    assert_eq!(common::hom_after_v(x, x, x), hom_dim(x, x));
}

#[test]
fn corpus_tilting_invariants() {
    let fixtures = common::corpus();
    let failures = common::run_over_corpus(&fixtures, common::TILTING_INVARIANTS);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
