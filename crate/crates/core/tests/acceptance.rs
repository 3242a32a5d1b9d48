//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cega::algebra::GroupAlgebra;
use cega::catalog;
use cega::decision::{
    center_intersection, check, decide, decide_char0, enumeration_size, oracle, socle, witness_ce,
    witness_not_ce, Method, Options, Strategy as Pipeline, Verdict, DEFAULT_ORACLE_BUDGET,
};
use cega::field::{FieldSpec, MatrixGF};
use cega::group::ElementSet;
use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p, 1).unwrap()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

fn quaternion_over_gf2() -> Outcome {
    let start = Instant::now();
    let q8 = catalog::quaternion().unwrap();
    let (i, j) = (q8.find("i").unwrap(), q8.find("j").unwrap());
    let a = GroupAlgebra::new(q8, gf(2));
    let size = (a.field().order() as u64).pow(a.dim() as u32);
    ensure!(size == 256, "algebra has {size} elements");
    ensure!(!a.basis(i).commutator(&a.basis(j)).is_zero(), "[i, j] = 0");
    let d =
        decide(a.group_arc().clone(), a.field(), &Options::default()).map_err(|e| e.to_string())?;
    let o = oracle(&a, DEFAULT_ORACLE_BUDGET).map_err(|e| e.to_string())?;
    ensure!(
        d.verdict == Verdict::CentrallyEssential,
        "decide: {}",
        d.verdict
    );
    ensure!(
        o.verdict == Verdict::CentrallyEssential,
        "oracle: {}",
        o.verdict
    );
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!(
        "256 elements, [i,j] ≠ 0, decide and oracle agree ({t:.2?})"
    ))
}

fn order16_over_gf2() -> Outcome {
    let start = Instant::now();
    let opts = Options {
        crossvalidate: true,
        budget: DEFAULT_ORACLE_BUDGET,
    };
    let mut socle_entries = Vec::new();
    for (idx, g) in catalog::order16_all().unwrap().into_iter().enumerate() {
        let name = g.name().to_string();
        let class = g.nilpotency_class();
        let r = check(g, &gf(2), Pipeline::Auto, &opts).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            r.verdict == Verdict::CentrallyEssential,
            "{name}: {}",
            r.verdict
        );
        ensure!(
            r.cross_checks.iter().any(|c| c.method == Method::Oracle),
            "{name}: no oracle cross-check"
        );
        if r.method == Method::Socle {
            ensure!(
                class == Some(3),
                "{name} used the socle path with class {class:?}"
            );
            socle_entries.push(idx + 1);
        }
    }
    ensure!(
        socle_entries == [7, 8, 9],
        "socle path used by {socle_entries:?}"
    );
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("14/14 centrally essential, socle path exactly for D16, QD16, Q16, all oracle-checked ({t:.2?})"))
}

fn order_p5_counterexamples() -> Outcome {
    let start = Instant::now();
    for p in [2u32, 3] {
        let g = catalog::order_p5_counterexample(p as usize).unwrap();
        let a = GroupAlgebra::new(g, gf(p));
        let r = decide(a.group_arc().clone(), a.field(), &Options::default())
            .map_err(|e| e.to_string())?;
        ensure!(
            r.verdict == Verdict::NotCentrallyEssential,
            "p = {p}: {}",
            r.verdict
        );
        let shipped = r
            .witness("element_times_center_sum")
            .ok_or(format!("p = {p}: no g·Σ_Z witness"))?;

        // independent re-verification from the group data
        let w = witness_not_ce(&a).map_err(|e| e.to_string())?;
        ensure!(
            w.x.to_sparse() == shipped.terms,
            "p = {p}: shipped witness differs"
        );
        let center = a.center_basis();
        ensure!(!center.span().contains(w.x.coeffs()), "p = {p}: x ∈ C");
        let dims = center_intersection(&w.x, &center);
        ensure!(dims.intersection() == 0, "p = {p}: xC ∩ C ≠ 0 ({dims:?})");
    }
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "both negative, witnesses verified by rank ({t:.2?})"
    ))
}

fn reduction_matches_oracle() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut negative = 0;
    for entry in catalog::entries() {
        let g = entry.build().unwrap();
        if g.order() > 16 {
            continue;
        }
        for p in [2, 3] {
            let a = GroupAlgebra::new(g.clone(), gf(p));
            if enumeration_size(&a, DEFAULT_ORACLE_BUDGET).is_err() {
                continue;
            }
            let d = decide(a.group_arc().clone(), a.field(), &Options::default())
                .map_err(|e| e.to_string())?;
            let o = oracle(&a, DEFAULT_ORACLE_BUDGET).map_err(|e| e.to_string())?;
            ensure!(
                d.verdict == o.verdict,
                "{} over GF({p}): decide {} but oracle {}",
                entry.spec,
                d.verdict,
                o.verdict
            );
            cases += 1;
            negative += usize::from(!o.verdict.is_essential());
        }
    }
    let s3 = |p| decide(catalog::symmetric3().unwrap(), &gf(p), &Options::default()).unwrap();
    ensure!(
        s3(3).reason == cega::decision::Reason::SylowDecompositionFailed,
        "S3 over GF(3) not rejected by the decomposition"
    );
    ensure!(!s3(2).verdict.is_essential(), "S3 over GF(2) accepted");
    ensure!(cases >= 40, "only {cases} cases within budget");
    let t = start.elapsed();
    Ok(format!(
        "{cases} cases ({negative} negative), zero mismatches ({t:.2?})"
    ))
}

fn class_two_via_socle() -> Outcome {
    let mut checked = Vec::new();
    for (spec, g, p) in catalog_p_groups(32) {
        if !(p == 2 || p == 3) || g.nilpotency_class().unwrap() > 2 {
            continue;
        }
        let s = socle(&GroupAlgebra::new(g, gf(p))).map_err(|e| e.to_string())?;
        ensure!(
            s.verdict == Verdict::CentrallyEssential,
            "{spec}: socle says {}",
            s.verdict
        );
        checked.push(spec);
    }
    ensure!(checked.len() >= 30, "only {} groups", checked.len());
    Ok(format!(
        "{} p-groups of class ≤ 2 and order ≤ 32, all essential by socle",
        checked.len()
    ))
}

fn central_multiplier_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut groups = 0;
    let mut total = 0;
    for (spec, g, p) in catalog_p_groups(27) {
        if g.nilpotency_class().unwrap() > 2 {
            continue;
        }
        let a = GroupAlgebra::new(g, gf(p));
        let mut done = 0;
        while done < 100 {
            let x = a.random(&mut rng);
            if x.is_zero() {
                continue;
            }
            let w = witness_ce(&x).map_err(|e| format!("{spec}: {e}"))?;
            let xc = &x * &w.c;
            ensure!(w.c.is_central(), "{spec}: c not central");
            ensure!(!xc.is_zero(), "{spec}: xc = 0");
            ensure!(
                xc.is_central() && xc.is_central_by_span(),
                "{spec}: xc not central"
            );
            done += 1;
        }
        groups += 1;
        total += done;
    }
    ensure!(groups >= 15, "only {groups} groups");
    Ok(format!(
        "{total} random elements over {groups} groups, 100% success"
    ))
}

fn counterexample_structure() -> Outcome {
    let g = catalog::order_p5_counterexample(2).unwrap();
    let s = g.upper_central_series();
    ensure!(
        s.term(1).len() == 2 && s.term(2).len() == 8,
        "p = 2 centres {:?}",
        s.sizes()
    );
    ensure!(
        g.centralizer(s.term(2)) == *s.term(2),
        "p = 2: C(Z_2) ≠ Z_2"
    );
    ensure!(
        s.nilpotency_class == Some(3),
        "p = 2 class {:?}",
        s.nilpotency_class
    );
    ensure!(g.star_condition().holds(), "p = 2 coset condition fails");

    let g = catalog::order_p5_counterexample(3).unwrap();
    let gen = |ls: &[&str]| -> ElementSet {
        g.subgroup_generated(&ls.iter().map(|l| g.find(l).unwrap()).collect())
    };
    let s = g.upper_central_series();
    ensure!(
        *s.term(1) == gen(&["a", "b"]) && s.term(1).len() == 9,
        "p = 3: Z_1 ≠ ⟨a,b⟩"
    );
    ensure!(
        *s.term(2) == gen(&["a", "b", "c"]) && s.term(2).len() == 27,
        "p = 3: Z_2 ≠ ⟨a,b,c⟩"
    );
    ensure!(
        g.centralizer(s.term(2)) == *s.term(2),
        "p = 3: C(Z_2) ≠ Z_2"
    );
    ensure!(
        s.nilpotency_class == Some(3),
        "p = 3 class {:?}",
        s.nilpotency_class
    );
    ensure!(g.star_condition().holds(), "p = 3 coset condition fails");
    Ok("centre chains 1 < 2 < 8 < 32 and 1 < 9 < 27 < 243, both self-centralizing".into())
}

fn characteristic_zero() -> Outcome {
    let mut n = 0;
    for entry in catalog::entries() {
        let g = entry.build().unwrap();
        let r = decide_char0(&g);
        ensure!(
            r.verdict.is_essential() == g.is_abelian(),
            "{}: {}",
            entry.spec,
            r.verdict
        );
        n += 1;
    }
    for spec in ["Q8", "S3"] {
        ensure!(
            !decide_char0(&catalog::parse(spec).unwrap())
                .verdict
                .is_essential(),
            "{spec} accepted"
        );
    }
    Ok(format!("{n} catalog groups, verdict = abelian"))
}

fn run_property<S: Strategy>(
    cases: u32,
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(strategy, test).map_err(|e| e.to_string())
}

fn property_suites(suite_start: Instant) -> Outcome {
    let mut checks = 0u64;
    for &(p, k) in FIELDS {
        let f = FieldSpec::new(p, k).unwrap();
        let e = field_element(&f);
        run_property(2000, &(e.clone(), e.clone(), e), |(a, b, c)| {
            field_axioms(&f, a, b, c)
        })?;
        checks += 2000;
    }
    for entry in catalog::entries() {
        let g = entry.build().unwrap();
        g.validate().map_err(|e| format!("{}: {e}", entry.spec))?;
        let n = g.order();
        run_property(500, &(0..n, 0..n, 0..n), |(a, b, c)| {
            group_axioms(&g, a, b, c)
        })?;
        checks += 500;
    }
    for &(spec, p, k) in RING_AXIOM_ALGEBRAS {
        let a = algebra(spec, p, k);
        let e = element(&a);
        run_property(10_000, &(e.clone(), e.clone(), e), |(x, y, z)| {
            ring_axioms(&x, &y, &z)?;
            augmentation_morphism(&x, &y)
        })
        .map_err(|e| format!("{spec}: {e}"))?;
        run_property(200, &element(&a), |x| center_characterization(&x))?;
        run_property(100, &central_element(&a), |x| center_characterization(&x))?;
        checks += 10_300;
    }
    for (spec, g, p) in catalog_p_groups(32) {
        omega_nilpotent(&GroupAlgebra::new(g.clone(), gf(p)))
            .map_err(|e| format!("{spec}: {e}"))?;
        if g.second_center_self_centralizing() {
            ensure!(g.star_condition().holds(), "{spec}: coset condition fails");
        }
    }
    for (spec, p, k) in [
        ("S3", 3, 1),
        ("Q8", 3, 1),
        ("D8", 5, 1),
        ("Heis3", 3, 1),
        ("S3", 2, 2),
    ] {
        let a = algebra(spec, p, k);
        run_property(500, &(element(&a), nonzero_scalar(a.field())), |(r, l)| {
            scaling_invariance(&r, l)
        })?;
        checks += 500;
    }
    let m = (1usize..8, 1usize..8)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(0u32..3, r * c)));
    let f3 = gf(3);
    run_property(1000, &m, |(r, c, v)| {
        let entries = v.into_iter().map(|x| f3.element(x).unwrap()).collect();
        nullspace_invariants(&MatrixGF::new(&f3, r, c, entries).unwrap())
    })?;
    checks += 1000;
    let t = within(Duration::from_secs(300), suite_start)?;
    Ok(format!(
        "{checks} sampled cases green; acceptance total {t:.2?}"
    ))
}

fn main() {
    let suite_start = Instant::now();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("Q8 over GF(2)", Box::new(quaternion_over_gf2)),
        ("order-16 groups over GF(2)", Box::new(order16_over_gf2)),
        (
            "order-p^5 counterexamples",
            Box::new(order_p5_counterexamples),
        ),
        (
            "reduction = oracle, order ≤ 16",
            Box::new(reduction_matches_oracle),
        ),
        (
            "class ≤ 2 essential by socle",
            Box::new(class_two_via_socle),
        ),
        ("central multipliers", Box::new(central_multiplier_suite)),
        (
            "counterexample structure",
            Box::new(counterexample_structure),
        ),
        ("characteristic 0", Box::new(characteristic_zero)),
        (
            "property suites",
            Box::new(move || property_suites(suite_start)),
        ),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed in {:.2?}",
        criteria.len() - failures,
        suite_start.elapsed()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
