//! Finite groups stored as Cayley tables.
//!
//! Elements are the indices `0..n` with `0` the identity. Everything derived
//! from the table (inverses, element orders, conjugacy classes) is computed
//! once at construction, so a [`FiniteGroup`] is immutable afterwards.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

mod analysis;
mod construct;

pub use analysis::{CentralSeries, ClassPartition, Fingerprint, StarCertificate};
pub use construct::{automorphism_from_generators, GroupDescription, Permutation};

/// Largest group order any constructor will produce.
pub const MAX_GROUP_ORDER: usize = 1 << 13;

/// Tables up to this order are checked for associativity on every triple.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 1_000_000;

pub type ElementSet = std::collections::BTreeSet<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the cap {MAX_GROUP_ORDER}")]
    TooLarge { order: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotPermutation { index: usize, degree: usize },
    #[error("Cayley table has {len} entries, expected {n}x{n}")]
    TableShape { n: usize, len: usize },
    #[error("Cayley table is not a Latin square (row or column {0})")]
    NotLatin(usize),
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    BadIdentity(usize),
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("action list has {got} maps, acting group has order {expected}")]
    ActionLength { expected: usize, got: usize },
    #[error("action of {gamma} is not an automorphism (fails on {x}, {y})")]
    NotAutomorphism { gamma: usize, x: usize, y: usize },
    #[error("action is not a homomorphism (fails on {g1}, {g2} at element {x})")]
    NotHomomorphism { g1: usize, g2: usize, x: usize },
    #[error("the given generators do not generate the group")]
    GeneratorsIncomplete,
    #[error("element {0} is out of range")]
    BadElement(usize),
    #[error("the given set is not a subgroup")]
    NotSubgroup,
    #[error("invalid group description: {0}")]
    Description(String),
}

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    labels: Vec<String>,
    classes: ClassPartition,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.n)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a full row-major Cayley table and validates it.
    ///
    /// Associativity is checked on every triple up to order 64 and on a
    /// fixed-seed sample of 10^6 triples above that.
    pub fn from_table(
        name: impl Into<String>,
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge { order: n });
        }
        if table.len() != n * n {
            return Err(GroupError::TableShape {
                n,
                len: table.len(),
            });
        }
        validate_latin(n, &table)?;
        for g in 0..n {
            if table[g] as usize != g || table[g * n] as usize != g {
                return Err(GroupError::BadIdentity(g));
            }
        }
        validate_associative(n, &table)?;

        let mut inv = vec![0u32; n];
        for g in 0..n {
            let row = &table[g * n..(g + 1) * n];
            inv[g] = row.iter().position(|&x| x == 0).expect("Latin row") as u32;
        }
        let mut orders = vec![0u32; n];
        for g in 0..n {
            let (mut x, mut m) = (g, 1u32);
            while x != 0 {
                x = table[x * n + g] as usize;
                m += 1;
            }
            orders[g] = m;
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(GroupError::Description(format!(
                    "{} labels for {} elements",
                    l.len(),
                    n
                )))
            }
            None => (0..n)
                .map(|i| {
                    if i == 0 {
                        "1".to_string()
                    } else {
                        format!("e{i}")
                    }
                })
                .collect(),
        };
        let classes = ClassPartition::compute(n, &table, &inv);
        Ok(FiniteGroup {
            name: name.into(),
            n,
            table,
            inv,
            orders,
            labels,
            classes,
        })
    }

    /// Builds the table by evaluating `mul` on every pair.
    pub fn from_fn(
        name: impl Into<String>,
        n: usize,
        labels: Option<Vec<String>>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge { order: n });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(GroupError::BadElement(c));
                }
                table.push(c as u32);
            }
        }
        Self::from_table(name, n, table, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e % self.element_order(a)).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `a^-1 x a`.
    #[inline]
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(self.inv(a), x), a)
    }

    /// `(x, y) = x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the element carrying `label`.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn conjugacy_classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Re-runs the full validation on this group's table.
    pub fn validate(&self) -> Result<(), GroupError> {
        validate_latin(self.n, &self.table)?;
        validate_associative(self.n, &self.table)?;
        for g in 0..self.n {
            if self.mul(g, 0) != g || self.mul(0, g) != g {
                return Err(GroupError::BadIdentity(g));
            }
            if self.mul(g, self.inv(g)) != 0 {
                return Err(GroupError::BadIdentity(g));
            }
        }
        Ok(())
    }

    /// The subgroup on `set`, re-indexed in increasing parent order, and
    /// the embedding of its indices into this group.
    pub fn subgroup(
        &self,
        set: &ElementSet,
        name: impl Into<String>,
    ) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(set) {
            return Err(GroupError::NotSubgroup);
        }
        let embed: Vec<usize> = set.iter().copied().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &g) in embed.iter().enumerate() {
            local[g] = i;
        }
        let labels = embed.iter().map(|&g| self.labels[g].clone()).collect();
        let sub = FiniteGroup::from_fn(name, embed.len(), Some(labels), |a, b| {
            local[self.mul(embed[a], embed[b])]
        })?;
        Ok((sub, embed))
    }

    /// Direct product with pair `(x, y)` stored at index `x + |self| * y`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        let (n1, n2) = (self.n, other.n);
        let n =
            n1.checked_mul(n2)
                .filter(|&n| n <= MAX_GROUP_ORDER)
                .ok_or(GroupError::TooLarge {
                    order: n1.saturating_mul(n2),
                })?;
        let labels = (0..n)
            .map(|i| join_labels(&[self.label(i % n1), other.label(i / n1)]))
            .collect();
        FiniteGroup::from_fn(
            format!("{} x {}", self.name, other.name),
            n,
            Some(labels),
            |a, b| {
                let x = self.mul(a % n1, b % n1);
                let y = other.mul(a / n1, b / n1);
                x + n1 * y
            },
        )
    }

    /// Semidirect product `self ⋊ gamma` with multiplication
    /// `(x, g)(x', g') = (x · action[g](x'), g g')`.
    ///
    /// `action[g]` lists the image of every element of `self` under `g`.
    /// Pairs are indexed like [`FiniteGroup::direct_product`], so a trivial
    /// action reproduces the direct product table exactly.
    pub fn semidirect_product(
        &self,
        gamma: &FiniteGroup,
        action: &[Vec<usize>],
    ) -> Result<FiniteGroup, GroupError> {
        let (n1, n2) = (self.n, gamma.n);
        if action.len() != n2 {
            return Err(GroupError::ActionLength {
                expected: n2,
                got: action.len(),
            });
        }
        for (g, map) in action.iter().enumerate() {
            self.check_automorphism(map)
                .map_err(|(x, y)| GroupError::NotAutomorphism { gamma: g, x, y })?;
        }
        if let Some(x) = (0..n1).find(|&x| action[0][x] != x) {
            return Err(GroupError::NotAutomorphism { gamma: 0, x, y: x });
        }
        for g1 in 0..n2 {
            for g2 in 0..n2 {
                let composed = &action[gamma.mul(g1, g2)];
                if let Some(x) = (0..n1).find(|&x| composed[x] != action[g1][action[g2][x]]) {
                    return Err(GroupError::NotHomomorphism { g1, g2, x });
                }
            }
        }
        let n =
            n1.checked_mul(n2)
                .filter(|&n| n <= MAX_GROUP_ORDER)
                .ok_or(GroupError::TooLarge {
                    order: n1.saturating_mul(n2),
                })?;
        let labels = (0..n)
            .map(|i| join_labels(&[self.label(i % n1), gamma.label(i / n1)]))
            .collect();
        FiniteGroup::from_fn(
            format!("{} : {}", self.name, gamma.name),
            n,
            Some(labels),
            |a, b| {
                let (x, g) = (a % n1, a / n1);
                let (x2, g2) = (b % n1, b / n1);
                self.mul(x, action[g][x2]) + n1 * gamma.mul(g, g2)
            },
        )
    }

    /// `Ok` when `map` is a bijective endomorphism; otherwise the first pair
    /// `(x, y)` where it fails (`x == y` for a bijectivity failure).
    pub fn check_automorphism(&self, map: &[usize]) -> Result<(), (usize, usize)> {
        let n = self.n;
        if map.len() != n {
            return Err((0, 0));
        }
        let mut seen = vec![false; n];
        for (x, &y) in map.iter().enumerate() {
            if y >= n || seen[y] {
                return Err((x, x));
            }
            seen[y] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if map[self.mul(x, y)] != self.mul(map[x], map[y]) {
                    return Err((x, y));
                }
            }
        }
        Ok(())
    }
}

/// Product label: non-identity parts joined by `·`.
fn join_labels(parts: &[&str]) -> String {
    let kept: Vec<&str> = parts.iter().copied().filter(|p| *p != "1").collect();
    if kept.is_empty() {
        "1".to_string()
    } else {
        kept.join("·")
    }
}

fn validate_latin(n: usize, table: &[u32]) -> Result<(), GroupError> {
    let mut seen = vec![0usize; n];
    let mut stamp = 0usize;
    for r in 0..n {
        stamp += 1;
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if v >= n || seen[v] == stamp {
                return Err(GroupError::NotLatin(r));
            }
            seen[v] = stamp;
        }
    }
    for c in 0..n {
        stamp += 1;
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == stamp {
                return Err(GroupError::NotLatin(c));
            }
            seen[v] = stamp;
        }
    }
    Ok(())
}

fn validate_associative(n: usize, table: &[u32]) -> Result<(), GroupError> {
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_a55e);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if m(m(a, b), c) != m(a, m(b, c)) {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
    }
    Ok(())
}
