//! Linear algebra for FG when G is a p-group and F has characteristic p.
//! Here FG is a local ring whose radical is the augmentation ideal.

use super::oracle::{center_intersection, IntersectionDims};
use super::{DecisionError, Verdict};
use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::field::EchelonBasis;

/// The prime p when |G| is a power of the field characteristic p.
pub fn local_prime(alg: &GroupAlgebra) -> Result<u32, DecisionError> {
    let p = alg.field().characteristic();
    if !is_power_of(alg.dim(), p as usize) {
        return Err(DecisionError::NotPGroup {
            group: alg.group().name().to_string(),
            order: alg.dim(),
            p,
        });
    }
    Ok(p)
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Basis of the radical of the centre C(FG):
/// z − 1 for each non-identity central z, and Σ_K for each class with
/// more than one element. Every basis element is checked to satisfy
/// b^|G| = 0.
pub fn radical_center_basis(alg: &GroupAlgebra) -> Result<Vec<AlgebraElement>, DecisionError> {
    local_prime(alg)?;
    let one = alg.one();
    let n = alg.dim();
    let basis: Vec<AlgebraElement> = alg
        .group()
        .conjugacy_classes()
        .classes()
        .iter()
        .skip(1)
        .map(|k| match k.as_slice() {
            [z] => &alg.basis(*z) - &one,
            _ => alg.subset_sum(k),
        })
        .collect();
    for b in &basis {
        if !b.pow(n as u64).is_zero() {
            return Err(DecisionError::Verification(format!(
                "radical element {b:?} is not nilpotent"
            )));
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug)]
pub struct SocleOutcome {
    pub verdict: Verdict,
    pub radical_dim: usize,
    pub socle_dim: usize,
    /// A socle vector outside C, with the rank certificate rC ∩ C = 0.
    pub excess: Option<(AlgebraElement, IntersectionDims)>,
}

/// Decides essentiality through the socle S = {r : b·r = 0 for all b in J(C)}:
/// C is essential in FG exactly when S ⊆ C.
pub fn socle(alg: &GroupAlgebra) -> Result<SocleOutcome, DecisionError> {
    let radical = radical_center_basis(alg)?;
    let g = alg.group();
    let n = g.order();

    // rows of the left-multiplication matrices: row y of L_b is k ↦ b_{y k⁻¹}
    let mut rows = EchelonBasis::new(alg.field(), n);
    let inverses: Vec<usize> = (0..n).map(|k| g.inv(k)).collect();
    let mut row = vec![crate::field::FieldElement::ZERO; n];
    'outer: for b in &radical {
        let coeffs = b.coeffs();
        for y in 0..n {
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = coeffs[g.mul(y, inverses[k])];
            }
            rows.insert(&row);
            if rows.rank() == n {
                break 'outer;
            }
        }
    }
    let socle_basis = rows.null_space();

    let center = alg.center_basis();
    let mut span = center.span();
    let mut excess = None;
    for v in &socle_basis {
        if span.insert(v) {
            excess = Some(alg.from_coeffs(v.clone())?);
            break;
        }
    }
    let excess = match excess {
        None => None,
        Some(s) => {
            if s.is_zero() || radical.iter().any(|b| !(b * &s).is_zero()) {
                return Err(DecisionError::Verification(
                    "socle vector is not annihilated by the radical".into(),
                ));
            }
            let dims = center_intersection(&s, &center);
            if dims.intersection() != 0 {
                return Err(DecisionError::Verification(
                    "socle vector outside C meets C".into(),
                ));
            }
            Some((s, dims))
        }
    };
    Ok(SocleOutcome {
        verdict: Verdict::from_essential(excess.is_none()),
        radical_dim: radical.len(),
        socle_dim: socle_basis.len(),
        excess,
    })
}

#[derive(Clone, Debug)]
pub struct CentralMultiplier {
    /// c = (1 − z₁)…(1 − z_k).
    pub c: AlgebraElement,
    /// The chosen z's.
    pub factors: Vec<usize>,
    /// x·c, nonzero and central.
    pub product: AlgebraElement,
}

/// For nonzero x in FG with G a p-group of nilpotency class at most 2,
/// finds central c with 0 ≠ xc ∈ C.
///
/// Multiplies x by factors 1 − z (z central, least index first that keeps
/// the product nonzero) until the product is central. A product killed by
/// every such factor lies in FG·Σ_Z, which is central in class ≤ 2.
pub fn witness_ce(x: &AlgebraElement) -> Result<CentralMultiplier, DecisionError> {
    let alg = x.algebra();
    local_prime(alg)?;
    let g = alg.group();
    let class = g.nilpotency_class().unwrap_or(usize::MAX);
    if class > 2 {
        return Err(DecisionError::Hypothesis(format!(
            "{} has nilpotency class {class}, above 2",
            g.name()
        )));
    }
    if x.is_zero() {
        return Err(DecisionError::Hypothesis("x is zero".into()));
    }
    let one = alg.one();
    let centre: Vec<usize> = g.center().into_iter().filter(|&z| z != 0).collect();
    let factors_z: Vec<AlgebraElement> = centre.iter().map(|&z| &one - &alg.basis(z)).collect();

    let mut c = one.clone();
    let mut product = x.clone();
    let mut factors = Vec::new();
    while !product.is_central() {
        let next = factors_z
            .iter()
            .zip(&centre)
            .map(|(f, &z)| (&product * f, f, z))
            .find(|(p, _, _)| !p.is_zero());
        let Some((p, f, z)) = next else {
            return Err(DecisionError::Verification(format!(
                "{product:?} is annihilated by the augmentation ideal of the centre but is not central"
            )));
        };
        product = p;
        c = &c * f;
        factors.push(z);
    }
    if !c.is_central() || product.is_zero() || !product.is_central_by_span() {
        return Err(DecisionError::Verification(
            "central multiplier failed revalidation".into(),
        ));
    }
    Ok(CentralMultiplier {
        c,
        factors,
        product,
    })
}

#[derive(Clone, Debug)]
pub struct NonEssentialWitness {
    /// The least element outside Z_2(G).
    pub g: usize,
    /// x = g·Σ_Z.
    pub x: AlgebraElement,
    /// Rank certificate: x ∉ C and xC ∩ C = 0.
    pub dims: IntersectionDims,
}

/// For a p-group of nilpotency class above 2 in which every non-central
/// class contains a coset g⟨z⟩ of a nontrivial central cyclic subgroup,
/// returns x = g·Σ_Z with g the least element outside Z_2, verified by
/// rank computation to satisfy xC ∩ C = 0.
pub fn witness_not_ce(alg: &GroupAlgebra) -> Result<NonEssentialWitness, DecisionError> {
    local_prime(alg)?;
    let g = alg.group();
    let series = g.upper_central_series();
    match series.nilpotency_class {
        Some(c) if c > 2 => {}
        other => {
            return Err(DecisionError::Hypothesis(format!(
                "{} has nilpotency class {other:?}, not above 2",
                g.name()
            )))
        }
    }
    if !g.star_condition().holds() {
        return Err(DecisionError::Hypothesis(format!(
            "some non-central class of {} contains no central coset",
            g.name()
        )));
    }
    let z2 = series.term(2);
    let least = g
        .elements()
        .find(|x| !z2.contains(x))
        .expect("class above 2 means Z_2 is proper");
    let x = &alg.basis(least) * &alg.subset_sum(&g.center());
    let center = alg.center_basis();
    let in_span = center.span().contains(x.coeffs());
    let dims = center_intersection(&x, &center);
    if x.is_zero() || in_span || x.is_central() || dims.intersection() != 0 {
        return Err(DecisionError::Verification(format!(
            "x = {}·Σ_Z failed the rank test: {dims:?}",
            g.label(least)
        )));
    }
    Ok(NonEssentialWitness { g: least, x, dims })
}
