//! Small finite fields `GF(p^k)` with exact, table-backed arithmetic.
//!
//! An element is stored as its canonical index: the representative
//! polynomial `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` is encoded as the base-`p`
//! integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Index 0 is the additive
//! identity and index 1 the multiplicative identity.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

mod matrix;

pub use matrix::{EchelonBasis, MatrixGF};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// Fields up to this order get precomputed operation tables.
const TABLE_LIMIT: u32 = 1 << 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    OrderTooLarge { p: u32, k: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{value} is not an element of a field of order {order}")]
    OutOfRange { value: u32, order: u32 },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
}

/// Canonical index of a field element; only meaningful next to its [`FieldSpec`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The binary and unary operations exposed by [`FieldSpec::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

struct Inner {
    p: u32,
    k: u32,
    order: u32,
    /// Monic modulus, lowest coefficient first, length `k + 1`.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field `GF(p^k)`. Cloning is cheap; clones share their tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.k == other.0.k)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("k", &self.0.k)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Builds `GF(p^k)` with the least monic irreducible modulus.
    ///
    /// Candidate moduli `t^k + c_{k-1} t^{k-1} + ... + c_0` are ordered
    /// lexicographically from the leading coefficient down, i.e. by the
    /// integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o <= MAX_FIELD_ORDER as u64)
            .ok_or(FieldError::OrderTooLarge { p, k })? as u32;

        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..order)
                .map(|t| {
                    let mut m = digits(t, p, k as usize);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };

        let mut inner = Inner {
            p,
            k,
            order,
            modulus,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.k
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value < self.0.order {
            Ok(FieldElement(value))
        } else {
            Err(FieldError::OutOfRange {
                value,
                order: self.0.order,
            })
        }
    }

    /// Image of an integer under `Z -> GF(p) ⊆ GF(p^k)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.order).map(FieldElement)
    }

    /// Coefficients of the representative polynomial, lowest degree first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.k as usize)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.0.order + b.0) as usize] as u32),
            None => FieldElement(slow_add(&self.0, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.0.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize] as u32),
            None => FieldElement(slow_neg(&self.0, a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.0.order + b.0) as usize] as u32),
            None => FieldElement(slow_mul(&self.0, a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(match &self.0.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize] as u32),
            None => self.pow(a, (self.0.order - 2) as u64),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Single entry point for the six field operations; `b` is ignored by
    /// the unary ones.
    pub fn arith(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: FieldOp,
    ) -> Result<FieldElement, FieldError> {
        for v in [a, b] {
            self.element(v.0)?;
        }
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Sub => Ok(self.sub(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Div => self.div(a, b),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    /// `dst += c * src`, the inner loop of every elimination.
    #[inline]
    pub fn axpy(&self, dst: &mut [FieldElement], c: FieldElement, src: &[FieldElement]) {
        debug_assert_eq!(dst.len(), src.len());
        if c.is_zero() {
            return;
        }
        match &self.0.tables {
            Some(t) => {
                let q = self.0.order as usize;
                let mul_row = &t.mul[c.0 as usize * q..(c.0 as usize + 1) * q];
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        let prod = mul_row[s.0 as usize] as usize;
                        d.0 = t.add[d.0 as usize * q + prod] as u32;
                    }
                }
            }
            None => {
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        *d = self.add(*d, self.mul(c, *s));
                    }
                }
            }
        }
    }

    /// `v *= c` in place.
    pub fn scale_in_place(&self, v: &mut [FieldElement], c: FieldElement) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn trim(poly: &mut Vec<u32>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p - (lead * c) % p) % p;
        }
        trim(&mut r);
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut divisor = digits(t as u32, p, d);
            divisor.push(1);
            if poly_rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn slow_add(f: &Inner, a: u32, b: u32) -> u32 {
    if f.k == 1 {
        return (a + b) % f.p;
    }
    let (da, db) = (digits(a, f.p, f.k as usize), digits(b, f.p, f.k as usize));
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % f.p).collect();
    undigits(&sum, f.p)
}

fn slow_neg(f: &Inner, a: u32) -> u32 {
    if f.k == 1 {
        return (f.p - a) % f.p;
    }
    let da = digits(a, f.p, f.k as usize);
    let neg: Vec<u32> = da.iter().map(|x| (f.p - x) % f.p).collect();
    undigits(&neg, f.p)
}

fn slow_mul(f: &Inner, a: u32, b: u32) -> u32 {
    if f.k == 1 {
        return ((a as u64 * b as u64) % f.p as u64) as u32;
    }
    let k = f.k as usize;
    let (da, db) = (digits(a, f.p, k), digits(b, f.p, k));
    let mut prod = vec![0u32; 2 * k - 1];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % f.p;
        }
    }
    let mut r = poly_rem(&prod, &f.modulus, f.p);
    r.resize(k, 0);
    undigits(&r, f.p)
}

fn build_tables(f: &Inner) -> Tables {
    let q = f.order as usize;
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    let mut neg = vec![0u8; q];
    let mut inv = vec![0u8; q];
    for a in 0..q {
        neg[a] = slow_neg(f, a as u32) as u8;
        for b in 0..q {
            add[a * q + b] = slow_add(f, a as u32, b as u32) as u8;
            let m = slow_mul(f, a as u32, b as u32);
            mul[a * q + b] = m as u8;
            if m == 1 {
                inv[a] = b as u8;
            }
        }
    }
    Tables { add, mul, neg, inv }
}
