mod common;

use proptest::prelude::*;
use proptest::test_runner::{RngAlgorithm, RngSeed};

use cega::catalog;
use cega::field::{FieldSpec, MatrixGF};
use common::*;

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, k)| FieldSpec::new(p, k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 512,
        failure_persistence: None,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(0x5eed),
        ..ProptestConfig::default()
    })]

    #[test]
    fn field_axioms_hold(
        (f, a, b, c) in small_field().prop_flat_map(|f| {
            let e = field_element(&f);
            (Just(f), e.clone(), e.clone(), e)
        })
    ) {
        field_axioms(&f, a, b, c)?;
    }

    #[test]
    fn nullspace_rank_nullity(
        (f, rows, cols, vals) in small_field().prop_flat_map(|f| {
            (1usize..7, 1usize..7).prop_flat_map(move |(r, c)| {
                let q = f.order();
                (Just(f.clone()), Just(r), Just(c), prop::collection::vec(0..q.min(4), r * c))
            })
        })
    ) {
        let entries = vals.into_iter().map(|v| f.element(v).unwrap()).collect();
        let m = MatrixGF::new(&f, rows, cols, entries).unwrap();
        nullspace_invariants(&m)?;
    }
}

#[test]
fn group_tables_satisfy_the_axioms() {
    for entry in catalog::entries() {
        let g = entry.build().unwrap();
        let n = g.order();
        runner(64)
            .run(&(0..n, 0..n, 0..n), |(a, b, c)| group_axioms(&g, a, b, c))
            .unwrap_or_else(|e| panic!("{}: {e}", entry.spec));
    }
}

#[test]
fn ring_axioms_and_augmentation() {
    for &(spec, p, k) in RING_AXIOM_ALGEBRAS {
        let a = algebra(spec, p, k);
        let e = element(&a);
        runner(64)
            .run(&(e.clone(), e.clone(), e), |(x, y, z)| {
                ring_axioms(&x, &y, &z)?;
                augmentation_morphism(&x, &y)
            })
            .unwrap_or_else(|e| panic!("{spec} over GF({p}^{k}): {e}"));
    }
}

#[test]
fn centrality_tests_agree() {
    for &(spec, p, k) in RING_AXIOM_ALGEBRAS {
        let a = algebra(spec, p, k);
        runner(32)
            .run(&element(&a), |x| center_characterization(&x))
            .unwrap();
        runner(16)
            .run(&central_element(&a), |x| {
                prop_assert!(x.is_central());
                center_characterization(&x)
            })
            .unwrap();
    }
}

#[test]
fn scaling_preserves_center_intersection() {
    for (spec, p, k) in [
        ("S3", 3, 1),
        ("Q8", 3, 1),
        ("D8", 5, 1),
        ("Heis3", 3, 1),
        ("S3", 2, 2),
    ] {
        let a = algebra(spec, p, k);
        runner(64)
            .run(&(element(&a), nonzero_scalar(a.field())), |(r, l)| {
                scaling_invariance(&r, l)
            })
            .unwrap();
    }
}

#[test]
fn augmentation_ideal_is_nilpotent() {
    for (spec, g, p) in catalog_p_groups(32) {
        let a = cega::algebra::GroupAlgebra::new(g, FieldSpec::new(p, 1).unwrap());
        omega_nilpotent(&a).unwrap_or_else(|e| panic!("{spec}: {e}"));
    }
}

#[test]
fn omega_ideal_matches_generated_span() {
    // ωH·FG is spanned by the products (1 − h)·y
    use cega::field::EchelonBasis;
    for (spec, p) in [("S3", 3), ("Q8", 2), ("D8", 3), ("C6", 2)] {
        let a = algebra(spec, p, 1);
        let g = a.group();
        let subgroups: Vec<_> = g
            .elements()
            .map(|x| (0..g.element_order(x)).map(|e| g.pow(x, e)).collect())
            .chain([g.center(), g.commutator_subgroup(), g.elements().collect()])
            .collect();
        for h in subgroups {
            let basis = a.omega_ideal_basis(&h).unwrap();
            let mut generated = EchelonBasis::new(a.field(), a.dim());
            for &x in &h {
                for y in g.elements() {
                    let v = &(&a.one() - &a.basis(x)) * &a.basis(y);
                    generated.insert(v.coeffs());
                }
            }
            assert_eq!(generated.rank(), basis.len(), "{spec} {h:?}");
            assert!(basis.iter().all(|b| generated.contains(b.coeffs())));
            assert_eq!(basis.len(), g.order() - g.order() / h.len());
        }
    }
    let q8 = algebra("Q8", 2, 1);
    assert_eq!(q8.omega_ideal_basis(&q8.group().center()).unwrap().len(), 4);
}

#[test]
fn self_centralizing_second_center_implies_coset_condition() {
    for entry in catalog::entries() {
        let g = entry.build().unwrap();
        if g.second_center_self_centralizing() {
            assert!(g.star_condition().holds(), "{}", entry.spec);
        }
    }
}
