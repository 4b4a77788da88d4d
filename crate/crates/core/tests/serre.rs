mod common;

use proptest::prelude::*;
use stratalg::algebra::is_symmetric;
use stratalg::homological::global_dimension;
use stratalg::module::{hom_dim, is_isomorphic, Module};
use stratalg::serre::{
    approx, centre_comparison, check_double_centraliser, check_serre_characterisation,
    check_serrecoapprox_equivalence, is_good, lemma_essential_check, m_upper, nakayama, naturally_isomorphic,
    projective_injective_vertices, Coapp, ProjFunctorTable,
};
use stratalg::tilting::basic_presentation;
use stratalg::Error;

fn sl2_pool() -> Vec<Module> {
    common::fixture("sl2-block").modules.into_iter().map(|(_, m)| m).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Coapp and approx are adjoint on dimensions, tested on random direct sums.
    #[test]
    fn adjunction_on_sums(pick_m in prop::collection::vec(0usize..10, 1..3), pick_n in prop::collection::vec(0usize..10, 1..3)) {
        let pool = sl2_pool();
        let f = common::fixture("sl2-block");
        let a = f.alg();
        let m = Module::direct_sum(a, &pick_m.iter().map(|&i| pool[i].clone()).collect::<Vec<_>>());
        let n = Module::direct_sum(a, &pick_n.iter().map(|&i| pool[i].clone()).collect::<Vec<_>>());
        let c = Coapp::new(&f.q_module()).unwrap();
        prop_assert_eq!(hom_dim(&c.apply(&m), &n), hom_dim(&m, &approx(&c, &n).unwrap()));
        prop_assert_eq!(hom_dim(&f.q_module(), &c.apply(&m)), hom_dim(&f.q_module(), &m));
    }
}

#[test]
fn nakayama_sends_projectives_to_injectives() {
    for f in common::corpus() {
        let a = f.alg();
        for v in 0..a.num_vertices() {
            let hp = nakayama(&Module::projective(a, v));
            assert!(is_isomorphic(&hp, &Module::injective(a, v)).unwrap(), "{} at {v}", f.name());
        }
    }
}

#[test]
fn nakayama_trivial_iff_symmetric() {
    let dn = common::fixture("dual-numbers");
    assert!(is_symmetric(dn.alg()).symmetric);
    let a = dn.alg();
    assert!(naturally_isomorphic(&ProjFunctorTable::identity(a), &ProjFunctorTable::nakayama(a), &[0]).unwrap());

    let ng = common::fixture("nongood");
    let a = ng.alg();
    assert!(!is_symmetric(a).symmetric);
    assert!(!naturally_isomorphic(&ProjFunctorTable::identity(a), &ProjFunctorTable::nakayama(a), &[0, 1, 2]).unwrap());
}

#[test]
fn sl2_master_fixture() {
    let f = common::fixture("sl2-block");
    let a = f.alg();
    assert_eq!(a.dim(), 5);
    assert_eq!(projective_injective_vertices(a), vec![1]);
    let qm = f.q_module();
    assert!(is_good(&qm).unwrap());
    let end_q = basic_presentation(&[qm.clone()], &["2".to_string()]).unwrap();
    assert_eq!(end_q.algebra.dim(), 2);
    assert!(is_symmetric(&end_q.algebra).symmetric);
    let dc = check_double_centraliser(a, &qm);
    assert!(dc.holds);
    assert_eq!(dc.commutant_dim, 5);
    let ess = lemma_essential_check(a, &qm, 0).unwrap();
    assert!(ess.hypothesis && ess.conclusion == Some(true));
    let c = Coapp::new(&qm).unwrap();
    assert!(is_isomorphic(&c.power(&Module::projective(a, 0), 2), &Module::injective(a, 0)).unwrap());
    let r = check_serrecoapprox_equivalence(a, &qm).unwrap();
    assert!(r.cond_i && r.cond_ii && r.cond_iii);
    let z = centre_comparison(a, &qm).unwrap();
    assert_eq!((z.centre_dim, z.end_q_centre_dim), (2, 2));
    assert!(z.holds);
    assert_eq!(global_dimension(a, 20).finite(), Some(2));
    // M^Q of I(1) keeps only the part seen by Q
    assert_eq!(m_upper(&qm, &Module::injective(a, 0)).unwrap().total_dim(), 1);
}

#[test]
fn characterisation_distinguishes_functors() {
    let f = common::fixture("sl2-block");
    let a = f.alg();
    let qm = f.q_module();
    let h = check_serre_characterisation(a, &qm, &ProjFunctorTable::nakayama(a)).unwrap();
    assert!(h.all());
    let c2 = ProjFunctorTable::coapp_power(a, &Coapp::new(&qm).unwrap(), 2).unwrap();
    assert!(c2.is_functorial());
    assert!(check_serre_characterisation(a, &qm, &c2).unwrap().all());
    let id = check_serre_characterisation(a, &qm, &ProjFunctorTable::identity(a)).unwrap();
    assert!(!id.cond_b);
}

#[test]
fn preconditions_are_reported() {
    let ng = common::fixture("nongood");
    let qm = ng.q_module();
    assert!(!is_good(&qm).unwrap());
    assert!(matches!(check_serrecoapprox_equivalence(ng.alg(), &qm), Err(Error::PreconditionFailed(_))));
    let rev = common::fixture("tri3-reversed");
    assert!(!check_double_centraliser(rev.alg(), &rev.q_module()).holds);
    let sl = common::fixture("sl2-block");
    assert!(matches!(is_good(&Module::projective(sl.alg(), 0)), Err(Error::NotProjectiveInjective)));
}

#[test]
fn corpus_serre_invariants() {
    let fixtures = common::corpus();
    let failures = common::run_over_corpus(&fixtures, common::SERRE_INVARIANTS);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
