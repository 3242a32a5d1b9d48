//! Property checks shared by the proptest suites and the acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use cega::algebra::{AlgebraElement, GroupAlgebra};
use cega::catalog;
use cega::decision::center_intersection;
use cega::field::{FieldElement, FieldSpec, MatrixGF};
use cega::group::FiniteGroup;

/// Algebras whose ring axioms are checked at full strength.
pub const RING_AXIOM_ALGEBRAS: &[(&str, u32, u32)] = &[
    ("Q8", 2, 1),
    ("S3", 2, 1),
    ("S3", 3, 1),
    ("S3", 2, 2),
    ("D16", 2, 1),
    ("QD16", 2, 1),
    ("Q16", 2, 1),
    ("Q8 x C3", 2, 1),
    ("Heis3", 3, 1),
    ("prop29:2", 2, 1),
    ("prop29:3", 3, 1),
];

pub const FIELDS: &[(u32, u32)] = &[
    (2, 1),
    (3, 1),
    (5, 1),
    (7, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (2, 4),
    (5, 2),
    (251, 1),
];

/// Deterministic runner with no failure files.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

pub fn algebra(spec: &str, p: u32, k: u32) -> GroupAlgebra {
    GroupAlgebra::new(catalog::parse(spec).unwrap(), FieldSpec::new(p, k).unwrap())
}

pub fn element(alg: &GroupAlgebra) -> impl Strategy<Value = AlgebraElement> + Clone {
    let a = alg.clone();
    proptest::collection::vec(0..alg.field().order(), alg.dim()).prop_map(move |v| {
        let f = a.field();
        a.from_coeffs(v.into_iter().map(|c| f.element(c).unwrap()).collect())
            .unwrap()
    })
}

pub fn field_element(f: &FieldSpec) -> impl Strategy<Value = FieldElement> + Clone {
    let f2 = f.clone();
    (0..f.order()).prop_map(move |c| f2.element(c).unwrap())
}

pub fn nonzero_scalar(f: &FieldSpec) -> impl Strategy<Value = FieldElement> + Clone {
    let f2 = f.clone();
    (1..f.order()).prop_map(move |c| f2.element(c).unwrap())
}

/// A random combination of class sums.
pub fn central_element(alg: &GroupAlgebra) -> impl Strategy<Value = AlgebraElement> + Clone {
    let basis = alg.center_basis().class_sums;
    let a = alg.clone();
    proptest::collection::vec(0..alg.field().order(), basis.len()).prop_map(move |v| {
        let f = a.field();
        basis.iter().zip(v).fold(a.zero(), |acc, (s, c)| {
            &acc + &s.scale(f.element(c).unwrap())
        })
    })
}

pub fn field_axioms(
    f: &FieldSpec,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    prop_assert_eq!(f.add(a, b), f.add(b, a));
    prop_assert_eq!(f.mul(a, b), f.mul(b, a));
    prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
    prop_assert_eq!(f.mul(a, FieldElement::ONE), a);
    if a.is_zero() {
        prop_assert!(f.inv(a).is_err());
    } else {
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        prop_assert_eq!(f.div(b, a).map(|q| f.mul(q, a)), Ok(b));
    }
    // Frobenius is additive
    let p = f.characteristic() as u64;
    prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    prop_assert_eq!(f.pow(a, f.order() as u64), a);
    Ok(())
}

pub fn group_axioms(g: &FiniteGroup, a: usize, b: usize, c: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    prop_assert_eq!(g.mul(a, g.inv(a)), 0);
    prop_assert_eq!(g.mul(0, a), a);
    prop_assert_eq!(g.pow(a, g.element_order(a)), 0);
    prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
    Ok(())
}

pub fn ring_axioms(
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<(), TestCaseError> {
    let one = x.algebra().one();
    prop_assert_eq!(&(x * y) * z, x * &(y * z));
    prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    prop_assert_eq!(&(x + y) * z, &(x * z) + &(y * z));
    prop_assert_eq!(&one * x, x.clone());
    prop_assert_eq!(x * &one, x.clone());
    Ok(())
}

pub fn augmentation_morphism(x: &AlgebraElement, y: &AlgebraElement) -> Result<(), TestCaseError> {
    let f = x.algebra().field();
    prop_assert_eq!(
        (x * y).augmentation(),
        f.mul(x.augmentation(), y.augmentation())
    );
    prop_assert_eq!(
        (x + y).augmentation(),
        f.add(x.augmentation(), y.augmentation())
    );
    Ok(())
}

/// The commutation test and the span test agree on `x`.
pub fn center_characterization(x: &AlgebraElement) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.is_central(), x.is_central_by_span());
    Ok(())
}

/// rC ∩ C is nonzero for r exactly when it is for λr.
pub fn scaling_invariance(r: &AlgebraElement, lambda: FieldElement) -> Result<(), TestCaseError> {
    let c = r.algebra().center_basis();
    let a = center_intersection(r, &c);
    let b = center_intersection(&r.scale(lambda), &c);
    prop_assert_eq!(a.intersection() > 0, b.intersection() > 0);
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn nullspace_invariants(m: &MatrixGF) -> Result<(), TestCaseError> {
    let ns = m.nullspace();
    prop_assert_eq!(m.rank() + ns.len(), m.cols());
    for v in &ns {
        prop_assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
    }
    Ok(())
}

/// Every basis element of ωG satisfies b^|G| = 0 (p-group, characteristic p).
pub fn omega_nilpotent(alg: &GroupAlgebra) -> Result<(), String> {
    let whole = alg.group().elements().collect();
    let basis = alg.omega_ideal_basis(&whole).map_err(|e| e.to_string())?;
    if basis.len() != alg.dim() - 1 {
        return Err(format!("ωG has dimension {}", basis.len()));
    }
    for b in &basis {
        if !b.augmentation().is_zero() || !b.pow(alg.dim() as u64).is_zero() {
            return Err(format!("{b:?} is not nilpotent in {}", alg.group().name()));
        }
    }
    Ok(())
}

pub fn is_prime_power(n: usize) -> Option<u32> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p as u32)
}

/// Catalog p-groups with `|G| ≤ max_order`, with their prime.
pub fn catalog_p_groups(max_order: usize) -> Vec<(String, FiniteGroup, u32)> {
    catalog::entries()
        .into_iter()
        .filter_map(|e| {
            let g = e.build().unwrap();
            let p = is_prime_power(g.order())?;
            (g.order() <= max_order).then(|| (e.spec.to_string(), g, p))
        })
        .collect()
}
