use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{DecisionError, Verdict};
use crate::algebra::{AlgebraElement, CenterBasis, GroupAlgebra};
use crate::field::{EchelonBasis, FieldElement};

/// Dimensions of rC, C and rC + C, where C is the span of the class sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionDims {
    pub product: usize,
    pub center: usize,
    pub sum: usize,
}

impl IntersectionDims {
    /// dim(rC ∩ C).
    pub fn intersection(&self) -> usize {
        self.product + self.center - self.sum
    }
}

/// Rank computation for rC ∩ C. Since C is commutative and spanned by the
/// class sums, rC is spanned by the products r·Σ_K.
pub fn center_intersection(r: &AlgebraElement, center: &CenterBasis) -> IntersectionDims {
    let alg = r.algebra();
    let mut product = EchelonBasis::new(alg.field(), alg.dim());
    let mut sum = center.span();
    let c = sum.rank();
    for s in &center.class_sums {
        let v = r * s;
        product.insert(v.coeffs());
        sum.insert(v.coeffs());
    }
    IntersectionDims {
        product: product.rank(),
        center: c,
        sum: sum.rank(),
    }
}

#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub verdict: Verdict,
    /// Number of projective representatives examined.
    pub candidates: u64,
    /// The least violating candidate with its rank certificate.
    pub counterexample: Option<(AlgebraElement, IntersectionDims)>,
}

/// `q^n` when it fits under the budget.
pub fn enumeration_size(alg: &GroupAlgebra, budget: u64) -> Result<u64, DecisionError> {
    let q = alg.field().order() as u64;
    let n = alg.dim();
    u32::try_from(n)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&total| total <= budget)
        .ok_or(DecisionError::BudgetExceeded {
            q: q as u32,
            n,
            budget,
        })
}

struct Searcher<'a> {
    alg: &'a GroupAlgebra,
    center: CenterBasis,
    class_of: &'a [usize],
    reps: Vec<usize>,
}

impl Searcher<'_> {
    fn decode(&self, mut t: u64) -> Option<Vec<FieldElement>> {
        let f = self.alg.field();
        let q = f.order() as u64;
        let mut coeffs = Vec::with_capacity(self.alg.dim());
        let mut leading = None;
        for _ in 0..self.alg.dim() {
            let d = (t % q) as u32;
            t /= q;
            if leading.is_none() && d != 0 {
                leading = Some(d);
            }
            coeffs.push(f.element(d).expect("digit below field order"));
        }
        // projective representatives: first nonzero coefficient is 1
        (leading == Some(1)).then_some(coeffs)
    }

    fn is_class_function(&self, v: &AlgebraElement) -> bool {
        v.coeffs()
            .iter()
            .enumerate()
            .all(|(g, &c)| c == v.coeff(self.reps[self.class_of[g]]))
    }

    /// Whether some central c gives 0 ≠ rc ∈ C.
    fn hits_center(&self, r: &AlgebraElement) -> bool {
        // c = Σ_G gives rc = ε(r)Σ_G
        if !r.augmentation().is_zero() {
            return true;
        }
        for s in &self.center.class_sums {
            let v = r * s;
            if !v.is_zero() && self.is_class_function(&v) {
                return true;
            }
        }
        center_intersection(r, &self.center).intersection() > 0
    }
}

/// Exhaustive test over every nonzero r ∈ FG, up to scalar multiples.
///
/// Refuses when `q^|G|` exceeds `budget`. Candidates are ordered by the
/// integer whose base-q digits are the coefficients, element 0 least
/// significant; the least violating candidate is reported.
pub fn oracle(alg: &GroupAlgebra, budget: u64) -> Result<OracleOutcome, DecisionError> {
    let total = enumeration_size(alg, budget)?;
    let q = alg.field().order() as u64;
    let classes = alg.group().conjugacy_classes();
    let searcher = Searcher {
        alg,
        center: alg.center_basis(),
        class_of: &classes_of(classes),
        reps: classes.classes().iter().map(|k| k[0]).collect(),
    };
    let found = (1..total).into_par_iter().find_first(|&t| {
        searcher
            .decode(t)
            .is_some_and(|c| !searcher.hits_center(&alg.from_coeffs(c).expect("length")))
    });
    let counterexample = found.map(|t| {
        let r = alg
            .from_coeffs(searcher.decode(t).expect("projective"))
            .expect("length");
        let dims = center_intersection(&r, &searcher.center);
        assert_eq!(
            dims.intersection(),
            0,
            "oracle counterexample failed its rank check"
        );
        (r, dims)
    });
    Ok(OracleOutcome {
        verdict: Verdict::from_essential(counterexample.is_none()),
        candidates: (total - 1) / (q - 1),
        counterexample,
    })
}

fn classes_of(classes: &crate::group::ClassPartition) -> Vec<usize> {
    let n: usize = classes.sizes().iter().sum();
    (0..n).map(|g| classes.class_of(g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    #[test]
    fn shortcuts_agree_with_rank_test() {
        for (spec, p) in [("S3", 2), ("Q8", 2), ("C4", 3), ("S3", 3)] {
            let alg =
                GroupAlgebra::new(catalog::parse(spec).unwrap(), FieldSpec::new(p, 1).unwrap());
            let classes = alg.group().conjugacy_classes();
            let searcher = Searcher {
                alg: &alg,
                center: alg.center_basis(),
                class_of: &classes_of(classes),
                reps: classes.classes().iter().map(|k| k[0]).collect(),
            };
            let total = enumeration_size(&alg, 1 << 20).unwrap();
            for t in 1..total {
                let Some(c) = searcher.decode(t) else {
                    continue;
                };
                let r = alg.from_coeffs(c).unwrap();
                let full = center_intersection(&r, &searcher.center).intersection() > 0;
                assert_eq!(searcher.hits_center(&r), full, "{spec} over GF({p}): {r:?}");
            }
        }
    }
}
