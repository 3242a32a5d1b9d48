//! Group-theoretic reductions that need no algebra arithmetic.

use std::collections::BTreeSet;

use serde::Serialize;

use super::local::is_power_of;
use super::{DecisionError, Verdict};
use crate::algebra::GroupAlgebra;
use crate::group::{ElementSet, FiniteGroup};

/// Split of G into p-elements and p′-elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PDecomposition {
    pub p: u32,
    /// Elements whose order is a power of p.
    pub p_part: ElementSet,
    /// Elements whose order is prime to p.
    pub p_prime_part: ElementSet,
    pub p_part_is_subgroup: bool,
    pub p_prime_part_is_subgroup: bool,
    pub parts_commute: bool,
    pub h_abelian: bool,
    /// G = P × H: both parts are subgroups, they commute elementwise and
    /// |P|·|H| = |G|.
    pub is_direct: bool,
}

impl PDecomposition {
    /// Whether FG reduces to FP with P the unique Sylow p-subgroup and
    /// H = G/P abelian.
    pub fn reduces(&self) -> bool {
        self.is_direct && self.h_abelian
    }
}

fn all_commute(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> bool {
    a.iter()
        .all(|&x| b.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

pub fn decompose_p(g: &FiniteGroup, p: u32) -> PDecomposition {
    let p_us = p as usize;
    let (p_part, p_prime_part): (ElementSet, ElementSet) = (
        g.elements()
            .filter(|&x| is_power_of(g.element_order(x), p_us))
            .collect(),
        g.elements()
            .filter(|&x| g.element_order(x) % p_us != 0)
            .collect(),
    );
    let p_part_is_subgroup = g.is_subgroup(&p_part);
    let p_prime_part_is_subgroup = g.is_subgroup(&p_prime_part);
    let parts_commute = all_commute(g, &p_part, &p_prime_part);
    let h_abelian = all_commute(g, &p_prime_part, &p_prime_part);
    let is_direct = p_part_is_subgroup
        && p_prime_part_is_subgroup
        && parts_commute
        && p_part.len() * p_prime_part.len() == g.order();
    PDecomposition {
        p,
        p_part,
        p_prime_part,
        p_part_is_subgroup,
        p_prime_part_is_subgroup,
        parts_commute,
        h_abelian,
        is_direct,
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cyclic(g: &FiniteGroup, x: usize) -> ElementSet {
    (0..g.element_order(x)).map(|e| g.pow(x, e)).collect()
}

/// For every prime q ≠ p dividing |G|: each cyclic q-subgroup is normal
/// and the subgroup generated by all q-elements is abelian.
pub fn check_q_subgroups(g: &FiniteGroup, p: u32) -> bool {
    prime_divisors(g.order())
        .into_iter()
        .filter(|&q| q != p as usize)
        .all(|q| {
            let q_elements: ElementSet = g
                .elements()
                .filter(|&x| x != 0 && is_power_of(g.element_order(x), q))
                .collect();
            let generated = g.subgroup_generated(&q_elements);
            q_elements.iter().all(|&x| g.is_normal(&cyclic(g, x)))
                && all_commute(g, &generated, &generated)
        })
}

/// Result of checking the subgroup idempotents e_H for cyclic H of order
/// prime to the characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentCheck {
    pub subgroups_checked: usize,
    /// Subgroups whose e_H is not central, listed by element set.
    pub non_central: Vec<ElementSet>,
    pub verdict: Verdict,
    pub holds: bool,
}

/// Checks that every e_H (H cyclic, char ∤ |H|) is idempotent, and central
/// when the algebra is centrally essential.
pub fn central_idempotent_check(
    alg: &GroupAlgebra,
    verdict: Verdict,
) -> Result<IdempotentCheck, DecisionError> {
    let g = alg.group();
    let p = alg.field().characteristic() as usize;
    let subgroups: BTreeSet<ElementSet> = g
        .elements()
        .map(|x| cyclic(g, x))
        .filter(|h| h.len() % p != 0)
        .collect();
    let mut non_central = Vec::new();
    for h in &subgroups {
        let e = alg.subgroup_idempotent(h)?;
        if !e.is_central() {
            non_central.push(h.clone());
        }
    }
    let holds = !verdict.is_essential() || non_central.is_empty();
    Ok(IdempotentCheck {
        subgroups_checked: subgroups.len(),
        non_central,
        verdict,
        holds,
    })
}
