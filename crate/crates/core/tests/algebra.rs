mod common;

use std::sync::Arc;

use proptest::prelude::*;
use stratalg::algebra::{build_algebra, dual_extension, is_symmetric, Algebra, Quiver, RelationElement};
use stratalg::homological::is_selfinjective;
use stratalg::linalg::q;
use stratalg::Error;

const LABELS: [&str; 4] = ["1", "2", "3", "4"];
const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Directed quivers (arrows increase the vertex index) with random zero and
/// commutativity relations of length two.
fn directed_algebra() -> impl Strategy<Value = Arc<Algebra>> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
            let arrows = prop::sample::subsequence(pairs.clone(), 0..=pairs.len().min(5));
            (Just(n), arrows, prop::collection::vec(any::<bool>(), 8), any::<bool>())
        })
        .prop_map(|(n, arrows, kill, commute)| {
            let arrow_list: Vec<(&str, &str, &str)> = arrows
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| (NAMES[i], LABELS[s], LABELS[t]))
                .collect();
            let quiver = Quiver::new(&LABELS[..n], &arrow_list);
            let mut composable = Vec::new();
            for (i, &(_, t)) in arrows.iter().enumerate() {
                for (j, &(s2, _)) in arrows.iter().enumerate() {
                    if t == s2 {
                        composable.push((i, j));
                    }
                }
            }
            let mut rels = Vec::new();
            let mut used = vec![false; composable.len()];
            if commute {
                // a·b = c·d for the first parallel pair of two-step paths
                'outer: for (x, &(i, j)) in composable.iter().enumerate() {
                    for (y, &(k, l)) in composable.iter().enumerate().skip(x + 1) {
                        if arrows[i].0 == arrows[k].0 && arrows[j].1 == arrows[l].1 {
                            rels.push(RelationElement::new(vec![
                                (q(1), vec![NAMES[i], NAMES[j]]),
                                (q(-1), vec![NAMES[k], NAMES[l]]),
                            ]));
                            used[x] = true;
                            used[y] = true;
                            break 'outer;
                        }
                    }
                }
            }
            for (x, &(i, j)) in composable.iter().enumerate() {
                if !used[x] && kill[x % kill.len()] {
                    rels.push(RelationElement::monomial(&[NAMES[i], NAMES[j]]));
                }
            }
            build_algebra(&quiver, &rels, 12).expect("directed quivers give admissible ideals")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_and_unit(a in directed_algebra()) {
        let d = a.dim();
        let one = a.one();
        for i in 0..d {
            let bi = a.unit_vector(i);
            prop_assert_eq!(a.mul(&one, &bi), bi.clone());
            prop_assert_eq!(a.mul(&bi, &one), bi.clone());
            for j in 0..d {
                let bj = a.unit_vector(j);
                for k in 0..d {
                    let bk = a.unit_vector(k);
                    prop_assert_eq!(a.mul(&a.mul(&bi, &bj), &bk), a.mul(&bi, &a.mul(&bj, &bk)));
                }
            }
        }
    }

    #[test]
    fn radical_filtration(a in directed_algebra()) {
        for k in 0..3 {
            for l in 0..3 {
                let target = a.radical_power(k + l);
                for x in a.radical_power(k).basis_vectors() {
                    for y in a.radical_power(l).basis_vectors() {
                        prop_assert!(target.contains_vector(&a.mul(&x, &y)));
                    }
                }
            }
        }
        prop_assert_eq!(a.radical_power(a.nilpotency_index()).dim(), 0);
    }

    #[test]
    fn opposite_is_an_involution(a in directed_algebra()) {
        let b = a.opposite().opposite();
        prop_assert_eq!(&*b, &*a);
        prop_assert_eq!(stratalg::json::algebra_to_string(&b), stratalg::json::algebra_to_string(&a));
        prop_assert_eq!(a.opposite().dim(), a.dim());
    }

    #[test]
    fn cartan_counts_basis(a in directed_algebra()) {
        let total: usize = a.cartan_matrix().iter().flatten().sum();
        prop_assert_eq!(total, a.dim());
    }

    #[test]
    fn symmetric_implies_selfinjective(a in directed_algebra()) {
        let v = is_symmetric(&a);
        if v.symmetric {
            prop_assert!(is_selfinjective(&a).unwrap().is_some());
            let g = a.gram(v.certificate.as_ref().unwrap());
            prop_assert_eq!(g.transpose(), g.clone());
            prop_assert!(g.is_invertible());
        }
    }
}

#[test]
fn sl2_basis_by_hand() {
    let a = common::fixture("sl2-block");
    // e1, e2, a, b and b·a; a·b is killed
    assert_eq!(a.alg().basis_names().len(), 5);
    assert_eq!(a.alg().cartan_matrix(), vec![vec![1, 1], vec![1, 2]]);
}

#[test]
fn dual_numbers_are_symmetric_with_certificate() {
    let f = common::fixture("dual-numbers");
    let v = is_symmetric(f.alg());
    assert!(v.symmetric);
    let g = f.alg().gram(v.certificate.as_ref().unwrap());
    assert_eq!(g, g.transpose());
    assert!(g.is_invertible());
}

#[test]
fn nongood_is_selfinjective_not_symmetric() {
    let f = common::fixture("nongood");
    assert!(is_selfinjective(f.alg()).unwrap().is_some());
    let v = is_symmetric(f.alg());
    assert!(!v.symmetric);
    assert!(v.exhaustive);
}

#[test]
fn dual_extension_rejects_undirected() {
    let cyc = Quiver::new(&["1", "2"], &[("a", "1", "2")]);
    assert!(matches!(dual_extension(&cyc), Err(Error::NotDirected(_))));
    let ok = dual_extension(&Quiver::new(&["1", "2"], &[("a", "2", "1")])).unwrap();
    // e1, e2, a, a*, and a·a*
    assert_eq!(ok.dim(), 5);
}

#[test]
fn corpus_algebra_invariants() {
    let fixtures = common::corpus();
    let failures = common::run_over_corpus(&fixtures, common::ALGEBRA_INVARIANTS);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
