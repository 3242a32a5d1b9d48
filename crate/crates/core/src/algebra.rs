//! The group algebra FG with dense coefficient vectors indexed by group element.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::field::{EchelonBasis, FieldElement, FieldError, FieldSpec, MatrixGF};
use crate::group::{ElementSet, FiniteGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands belong to different group algebras")]
    Mismatch,
    #[error("expected {expected} coefficients, got {got}")]
    Length { expected: usize, got: usize },
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("characteristic {p} divides the subgroup order {order}")]
    CharacteristicDivides { p: u32, order: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A group together with a coefficient field.
#[derive(Clone)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
    field: FieldSpec,
}

impl fmt::Debug for GroupAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.group.name())
    }
}

impl PartialEq for GroupAlgebra {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group.table() == other.group.table())
            && self.field == other.field
    }
}

impl Eq for GroupAlgebra {}

/// The central subalgebra's class-sum basis, one vector per conjugacy class.
#[derive(Clone, Debug)]
pub struct CenterBasis {
    pub class_sums: Vec<AlgebraElement>,
    pub dim: usize,
}

impl CenterBasis {
    /// Echelon form of the span, for membership and intersection tests.
    pub fn span(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(
            self.class_sums[0].algebra.field(),
            self.class_sums[0].coeffs.len(),
        );
        for s in &self.class_sums {
            basis.insert(&s.coeffs);
        }
        basis
    }
}

impl GroupAlgebra {
    pub fn new(group: impl Into<Arc<FiniteGroup>>, field: FieldSpec) -> Self {
        GroupAlgebra {
            group: group.into(),
            field,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coeffs: vec![FieldElement::ZERO; self.dim()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(0)
    }

    /// The basis vector of group element `g`.
    pub fn basis(&self, g: usize) -> AlgebraElement {
        let mut x = self.zero();
        x.coeffs[g] = FieldElement::ONE;
        x
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<AlgebraElement, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::Length {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coeffs,
        })
    }

    /// Sum of `coeff · g` over the given terms.
    pub fn from_terms(&self, terms: &[(usize, i64)]) -> AlgebraElement {
        let mut x = self.zero();
        for &(g, c) in terms {
            x.coeffs[g] = self.field.add(x.coeffs[g], self.field.from_int(c));
        }
        x
    }

    /// Σ_S, the sum of the basis vectors of a set of group elements.
    pub fn subset_sum<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> AlgebraElement {
        let mut x = self.zero();
        for &g in set {
            x.coeffs[g] = self.field.add(x.coeffs[g], FieldElement::ONE);
        }
        x
    }

    pub fn random(&self, rng: &mut impl Rng) -> AlgebraElement {
        let q = self.field.order();
        let coeffs = (0..self.dim())
            .map(|_| self.field.element(rng.gen_range(0..q)).expect("in range"))
            .collect();
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// Class sums Σ_K in the group's canonical class order.
    pub fn center_basis(&self) -> CenterBasis {
        let class_sums: Vec<AlgebraElement> = self
            .group
            .conjugacy_classes()
            .classes()
            .iter()
            .map(|k| self.subset_sum(k))
            .collect();
        CenterBasis {
            dim: class_sums.len(),
            class_sums,
        }
    }

    /// A basis of the right ideal ωH·FG generated by {1 − h : h ∈ H}.
    ///
    /// The ideal is spanned by (1 − h)y = y − hy, so it consists of the
    /// elements whose coefficients sum to zero on every right coset Hy. For
    /// each coset with least element y₀ the basis takes y₀ − y for the other
    /// members y.
    pub fn omega_ideal_basis(&self, h: &ElementSet) -> Result<Vec<AlgebraElement>, AlgebraError> {
        let g = &*self.group;
        if !g.is_subgroup(h) {
            return Err(AlgebraError::NotSubgroup);
        }
        let n = g.order();
        let mut rep = vec![usize::MAX; n];
        let mut out = Vec::new();
        for y0 in 0..n {
            if rep[y0] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = h.iter().map(|&x| g.mul(x, y0)).collect();
            coset.sort_unstable();
            for &y in &coset {
                rep[y] = y0;
                if y != y0 {
                    out.push(self.from_terms(&[(y0, 1), (y, -1)]));
                }
            }
        }
        if g.is_normal(h) {
            assert_eq!(out.len(), n - n / h.len());
        }
        Ok(out)
    }

    /// e_H = |H|⁻¹ Σ_H; idempotent whenever the characteristic does not divide |H|.
    pub fn subgroup_idempotent(&self, h: &ElementSet) -> Result<AlgebraElement, AlgebraError> {
        if !self.group.is_subgroup(h) {
            return Err(AlgebraError::NotSubgroup);
        }
        let p = self.field.characteristic();
        if h.len() % p as usize == 0 {
            return Err(AlgebraError::CharacteristicDivides { p, order: h.len() });
        }
        let inv = self.field.inv(self.field.from_int(h.len() as i64))?;
        let e = self.subset_sum(h).scale(inv);
        assert_eq!(&e * &e, e, "e_H is not idempotent");
        Ok(e)
    }
}

/// An element of FG.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: GroupAlgebra,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(g, c)| {
                let label = self.algebra.group.label(g);
                if c == FieldElement::ONE {
                    label.to_string()
                } else {
                    format!("{c}·{label}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl AlgebraElement {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> FieldElement {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms `(element index, coefficient)` in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, FieldElement)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, &c)| (g, c))
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let f = &self.algebra.field;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.add(*a, b);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let f = &self.algebra.field;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.sub(*a, b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let mut out = self.clone();
        self.algebra.field.scale_in_place(&mut out.coeffs, c);
        out
    }

    /// Convolution (xy)_g = Σ_{hk = g} x_h y_k, skipping zero coefficients.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let f = &self.algebra.field;
        let n = self.coeffs.len();
        let table = self.algebra.group.table();
        let rhs: Vec<(usize, FieldElement)> = other.terms().collect();
        let mut out = vec![FieldElement::ZERO; n];
        for (h, a) in self.terms() {
            let row = &table[h * n..(h + 1) * n];
            for &(k, b) in &rhs {
                let g = row[k] as usize;
                out[g] = f.add(out[g], f.mul(a, b));
            }
        }
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: out,
        })
    }

    /// [x, y] = xy − yx.
    pub fn try_commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.try_commutator(other).expect("algebra mismatch")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.algebra.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// ε(x), the sum of the coefficients.
    pub fn augmentation(&self) -> FieldElement {
        let f = &self.algebra.field;
        self.coeffs
            .iter()
            .fold(FieldElement::ZERO, |s, &c| f.add(s, c))
    }

    /// Whether `g·x = x·g` for every group element g.
    pub fn is_central(&self) -> bool {
        let g = &*self.algebra.group;
        // (g x)_y = x_{g⁻¹y} and (x g)_y = x_{y g⁻¹}
        g.elements().all(|a| {
            let ai = g.inv(a);
            g.elements()
                .all(|y| self.coeffs[g.mul(ai, y)] == self.coeffs[g.mul(y, ai)])
        })
    }

    /// Whether `x` lies in the span of the class sums.
    pub fn is_central_by_span(&self) -> bool {
        self.algebra.center_basis().span().contains(&self.coeffs)
    }

    /// Matrix of r ↦ x·r in the group basis: entry (g, k) is x_{g k⁻¹}.
    pub fn left_multiplication_matrix(&self) -> MatrixGF {
        let g = &*self.algebra.group;
        let n = g.order();
        let mut m = MatrixGF::zeros(&self.algebra.field, n, n);
        for k in 0..n {
            for (h, c) in self.terms() {
                m.set(g.mul(h, k), k, c);
            }
        }
        m
    }

    /// Sparse `(label, coefficient)` pairs in element-index order.
    pub fn to_sparse(&self) -> Vec<(String, u32)> {
        self.terms()
            .map(|(g, c)| (self.algebra.group.label(g).to_string(), c.value()))
            .collect()
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.to_sparse();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for t in &terms {
            seq.serialize_element(t)?;
        }
        seq.end()
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("algebra mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        let f = &self.algebra.field;
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = f.neg(*c);
        }
        out
    }
}
