mod common;

use std::sync::Arc;

use proptest::prelude::*;
use stratalg::algebra::{build_algebra, Algebra, Quiver};
use stratalg::homological::{ext_dim, minimal_resolution};
use stratalg::linalg::{q, Matrix};
use stratalg::module::{
    decompose, dualize, dualize_to, hom, hom_dim, image_of, is_isomorphic, kernel_of, module_iso,
    projective_cover, radical, split_summands, sub, trace, Module,
};

fn a3() -> Arc<Algebra> {
    build_algebra(&Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]), &[], 12).unwrap()
}

/// Representations of the linear quiver `3 → 2 → 1`, dimensions at most 2.
fn a3_module() -> impl Strategy<Value = Module> {
    prop::collection::vec(0usize..=2, 3).prop_flat_map(|dims| {
        let sizes = [dims[0] * dims[1], dims[1] * dims[2]];
        (
            Just(dims),
            prop::collection::vec(-2i64..=2, sizes[0]),
            prop::collection::vec(-2i64..=2, sizes[1]),
        )
            .prop_map(|(dims, a, b)| {
                let alg = a3();
                let ma = Matrix::from_vec(dims[0], dims[1], a.into_iter().map(q).collect()).unwrap();
                let mb = Matrix::from_vec(dims[1], dims[2], b.into_iter().map(q).collect()).unwrap();
                Module::new(&alg, dims, vec![ma, mb]).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_duality(m in a3_module(), n in a3_module()) {
        prop_assert_eq!(hom_dim(&m, &n), hom_dim(&dualize(&n), &dualize(&m)));
    }

    #[test]
    fn homs_are_homomorphisms(m in a3_module(), n in a3_module()) {
        for f in hom(&m, &n).basis() {
            prop_assert!(f.is_homomorphism(&m, &n));
        }
    }

    #[test]
    fn dualize_round_trip(m in a3_module()) {
        prop_assert_eq!(dualize_to(&dualize(&m), m.algebra()).unwrap(), m);
    }

    #[test]
    fn trace_is_idempotent(m in a3_module(), v in 0usize..3) {
        let p = Module::projective(m.algebra(), v);
        let t = trace(&p, &m);
        let tm = sub(&m, &t).0;
        prop_assert_eq!(trace(&p, &tm).total_dim(), t.total_dim());
        prop_assert!(t.is_closed_in(&m));
    }

    #[test]
    fn cover_kernel_is_superfluous(m in a3_module()) {
        let cov = projective_cover(&m);
        prop_assert!(radical(&cov.module).contains(&kernel_of(&cov.map)));
        prop_assert_eq!(image_of(&cov.map).total_dim(), m.total_dim());
    }

    #[test]
    fn decompose_preserves_factors(m in a3_module()) {
        let parts = decompose(&m).unwrap();
        let mut dims = vec![0; 3];
        for (p, k) in &parts {
            for (d, x) in dims.iter_mut().zip(p.dims()) {
                *d += k * x;
            }
        }
        prop_assert_eq!(dims, m.composition_factors());
        let summands = split_summands(&m).unwrap();
        let total: usize = summands.iter().map(|s| s.module.total_dim()).sum();
        prop_assert_eq!(total, m.total_dim());
    }

    #[test]
    fn iso_certificates_are_isomorphisms(m in a3_module()) {
        let parts = split_summands(&m).unwrap();
        let rebuilt = Module::direct_sum(m.algebra(), &parts.into_iter().map(|s| s.module).collect::<Vec<_>>());
        let f = module_iso(&m, &rebuilt).unwrap().expect("a module is the sum of its summands");
        prop_assert!(f.is_iso());
        prop_assert!(f.is_homomorphism(&m, &rebuilt));
    }

    #[test]
    fn hereditary_ext_vanishes_in_degree_two(m in a3_module(), n in a3_module()) {
        prop_assert_eq!(ext_dim(&m, &n, 2, 10).unwrap(), 0);
        // Euler form of a hereditary algebra: dim Hom − dim Ext¹ = ⟨dim M, dim N⟩
        let d = m.dims();
        let e = n.dims();
        let euler = (d[0] * e[0] + d[1] * e[1] + d[2] * e[2]) as i64 - (d[1] * e[0] + d[2] * e[1]) as i64;
        let lhs = hom_dim(&m, &n) as i64 - ext_dim(&m, &n, 1, 10).unwrap() as i64;
        prop_assert_eq!(lhs, euler);
    }
}

#[test]
fn sl2_resolution_of_simple() {
    let f = common::fixture("sl2-block");
    let a = f.alg();
    // 0 → P(1) → P(2) → P(1) → L(1) → 0
    let r = minimal_resolution(&Module::simple(a, 0), 5);
    assert!(r.complete);
    assert_eq!(r.labels, vec![vec![0], vec![1], vec![0]]);
    assert!(is_isomorphic(&Module::injective(a, 1), &Module::projective(a, 1)).unwrap());
}

#[test]
fn corpus_module_invariants() {
    let fixtures = common::corpus();
    let failures = common::run_over_corpus(&fixtures, common::MODULE_INVARIANTS);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
