use std::collections::BTreeMap;

use serde::Serialize;

use super::{ElementSet, FiniteGroup};

/// Partition of a group into conjugacy classes, ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    pub(super) fn compute(n: usize, table: &[u32], inv: &[u32]) -> Self {
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for a in 0..n {
                let c = mul(mul(inv[a] as usize, g), a);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        ClassPartition { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Upper central series `Z_0 ⊆ Z_1 ⊆ ...`, stopped once it stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    pub subgroups: Vec<ElementSet>,
    /// Least `c` with `Z_c = G`; `None` when the series stops short of `G`.
    pub nilpotency_class: Option<usize>,
}

impl CentralSeries {
    pub fn sizes(&self) -> Vec<usize> {
        self.subgroups.iter().map(ElementSet::len).collect()
    }

    /// `Z_i`, with the terminal term repeated past the end of the chain.
    pub fn term(&self, i: usize) -> &ElementSet {
        &self.subgroups[i.min(self.subgroups.len() - 1)]
    }
}

/// Result of the search for central cosets inside conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarCertificate {
    /// For each non-central class `(class index, z)` with `g<z> ⊆ g^G`
    /// for the class's least element `g`.
    Holds(Vec<(usize, usize)>),
    /// A non-central element with no such `z`.
    Fails(usize),
}

impl StarCertificate {
    pub fn holds(&self) -> bool {
        matches!(self, StarCertificate::Holds(_))
    }
}

/// Isomorphism invariants used to tell catalog groups apart.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs in increasing order.
    pub element_orders: Vec<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    pub central_series: Vec<usize>,
    pub derived_order: usize,
    /// Invariant factors of `G/G'`, each dividing the next.
    pub abelianization: Vec<usize>,
}

impl FiniteGroup {
    fn mask(&self, set: &ElementSet) -> Vec<bool> {
        let mut m = vec![false; self.order()];
        for &g in set {
            m[g] = true;
        }
        m
    }

    pub fn center(&self) -> ElementSet {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn centralizer(&self, s: &ElementSet) -> ElementSet {
        self.elements()
            .filter(|&x| s.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Closure of `s ∪ {1}` under multiplication (finite, so inverses follow).
    pub fn subgroup_generated(&self, s: &ElementSet) -> ElementSet {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut elems = vec![0usize];
        let gens: Vec<usize> = s.iter().copied().filter(|&g| g != 0).collect();
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.into_iter().collect()
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if !s.contains(&0) || s.iter().any(|&g| g >= self.order()) {
            return false;
        }
        let m = self.mask(s);
        s.iter().all(|&a| s.iter().all(|&b| m[self.mul(a, b)]))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        let m = self.mask(s);
        self.is_subgroup(s)
            && s.iter()
                .all(|&h| self.elements().all(|a| m[self.conjugate(h, a)]))
    }

    pub fn commutator_subgroup(&self) -> ElementSet {
        let mut comms = ElementSet::new();
        for x in self.elements() {
            for y in self.elements() {
                comms.insert(self.commutator(x, y));
            }
        }
        self.subgroup_generated(&comms)
    }

    /// `Z_{i+1} = {g : (g, a) ∈ Z_i for all a}`, iterated until it stops growing.
    pub fn upper_central_series(&self) -> CentralSeries {
        let n = self.order();
        let mut current: ElementSet = [0].into_iter().collect();
        let mut subgroups = vec![current.clone()];
        loop {
            if current.len() == n {
                break;
            }
            let m = self.mask(&current);
            let next: ElementSet = self
                .elements()
                .filter(|&g| self.elements().all(|a| m[self.commutator(g, a)]))
                .collect();
            if next.len() == current.len() {
                break;
            }
            subgroups.push(next.clone());
            current = next;
        }
        let nilpotency_class = (current.len() == n).then(|| subgroups.len() - 1);
        CentralSeries {
            subgroups,
            nilpotency_class,
        }
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.upper_central_series().nilpotency_class
    }

    /// Whether every non-central `g` has a nontrivial central subgroup `H`
    /// with `gH ⊆ g^G`.
    ///
    /// Only cyclic `H = <z>` are tried: any nontrivial `H` contains one, and
    /// `gH ⊆ g^G` passes to subgroups. Since conjugating `g<z> ⊆ g^G` by `a`
    /// gives `a^-1 g a <z> ⊆ g^G`, one representative per class suffices.
    pub fn star_condition(&self) -> StarCertificate {
        let center = self.center();
        let classes = self.conjugacy_classes();
        let candidates: Vec<(usize, ElementSet)> = center
            .iter()
            .filter(|&&z| z != 0)
            .map(|&z| (z, self.subgroup_generated(&[z].into_iter().collect())))
            .collect();
        let mut found = Vec::new();
        for (ci, class) in classes.classes().iter().enumerate() {
            if class.len() == 1 {
                continue;
            }
            let g = class[0];
            let hit = candidates
                .iter()
                .find(|(_, h)| h.iter().all(|&z| classes.class_of(self.mul(g, z)) == ci));
            match hit {
                Some(&(z, _)) => found.push((ci, z)),
                None => return StarCertificate::Fails(g),
            }
        }
        StarCertificate::Holds(found)
    }

    /// Whether the centralizer of `Z_2(G)` lies inside `Z_2(G)`.
    pub fn second_center_self_centralizing(&self) -> bool {
        let series = self.upper_central_series();
        let z2 = series.term(2);
        self.centralizer(z2).is_subset(z2)
    }

    /// Element-index group `G/N` for a normal subgroup `N`, with cosets
    /// ordered by least element.
    pub fn quotient(&self, normal: &ElementSet) -> Option<FiniteGroup> {
        if !self.is_normal(normal) {
            return None;
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] == usize::MAX {
                for &h in normal {
                    coset_of[self.mul(g, h)] = reps.len();
                }
                reps.push(g);
            }
        }
        let labels = reps.iter().map(|&g| self.label(g).to_string()).collect();
        FiniteGroup::from_fn(
            format!("{} / N", self.name()),
            reps.len(),
            Some(labels),
            |a, b| coset_of[self.mul(reps[a], reps[b])],
        )
        .ok()
    }

    /// Invariant factors `d_1 | d_2 | ...` of an abelian group (empty for the trivial group).
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order();
        // elementary divisors per prime from |A[p^i]|
        let mut primary: Vec<Vec<usize>> = Vec::new();
        for p in prime_factors(n) {
            let mut counts = vec![1usize];
            let mut pk = 1usize;
            loop {
                pk *= p;
                let c = self
                    .elements()
                    .filter(|&g| pk % self.element_order(g) == 0)
                    .count();
                counts.push(c);
                if c == *counts.iter().rev().nth(1).unwrap() || n % pk != 0 {
                    break;
                }
            }
            // number of cyclic factors of order >= p^i is log_p(counts[i]/counts[i-1])
            let mut ge: Vec<usize> = Vec::new();
            for i in 1..counts.len() {
                let mut ratio = counts[i] / counts[i - 1];
                let mut e = 0;
                while ratio > 1 {
                    ratio /= p;
                    e += 1;
                }
                ge.push(e);
            }
            let mut divisors = Vec::new();
            for i in 0..ge.len() {
                let next = ge.get(i + 1).copied().unwrap_or(0);
                for _ in 0..ge[i] - next {
                    divisors.push(p.pow(i as u32 + 1));
                }
            }
            divisors.sort_unstable_by(|a, b| b.cmp(a));
            primary.push(divisors);
        }
        // combine: largest factor takes the largest power of each prime, and so on
        let rank = primary.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<usize> = (0..rank)
            .map(|i| {
                primary
                    .iter()
                    .map(|d| d.get(i).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        factors.reverse();
        Some(factors)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
        for g in self.elements() {
            *orders.entry(self.element_order(g)).or_default() += 1;
        }
        let mut class_sizes = self.conjugacy_classes().sizes();
        class_sizes.sort_unstable();
        let derived = self.commutator_subgroup();
        let abelianization = self
            .quotient(&derived)
            .and_then(|q| q.abelian_invariants())
            .expect("G/G' is abelian");
        Fingerprint {
            order: self.order(),
            element_orders: orders.into_iter().collect(),
            class_sizes,
            central_series: self.upper_central_series().sizes(),
            derived_order: derived.len(),
            abelianization,
        }
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
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
