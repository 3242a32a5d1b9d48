//! Named groups: cyclic and elementary abelian groups, the dihedral,
//! semidihedral, modular and generalized quaternion families, all fourteen
//! groups of order 16, and the class-3 groups of order `p^5` whose group
//! algebras in characteristic `p` are not centrally essential.
//!
//! Group specs on the command line follow the grammar
//! `Q8 | C<n> | E<p>^<r> | D<2m> | QD16 | Q<2^m> | M<p^n> | Heis<p> | S3 | order16:<i> | prop29:<p>`,
//! and `A x B` for direct products.

use thiserror::Error;

use crate::field::is_prime;
use crate::group::{automorphism_from_generators, FiniteGroup, GroupError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown group `{0}`")]
    Unknown(String),
    #[error("unsupported parameter for {name}: {reason}")]
    Parameter { name: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn param_err(name: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::Parameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}

/// `x^e` in label form: empty for `e = 0`.
fn power(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

fn word(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|&(n, e)| power(n, e)).collect();
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, CatalogError> {
    cyclic_named(n, "g")
}

pub fn cyclic_named(n: usize, generator: &str) -> Result<FiniteGroup, CatalogError> {
    if n == 0 {
        return Err(param_err("cyclic", "order must be positive"));
    }
    let labels = (0..n).map(|e| word(&[(generator, e)])).collect();
    Ok(FiniteGroup::from_fn(
        format!("C{n}"),
        n,
        Some(labels),
        |a, b| (a + b) % n,
    )?)
}

/// `(C_p)^r`, element `sum c_i p^i` standing for `e1^c_1 e2^c_2 ...`.
pub fn elementary_abelian(p: usize, r: usize) -> Result<FiniteGroup, CatalogError> {
    if !is_prime(p as u32) {
        return Err(param_err("elementary abelian", format!("{p} is not prime")));
    }
    let n = p
        .checked_pow(r as u32)
        .filter(|&n| n <= crate::group::MAX_GROUP_ORDER)
        .ok_or_else(|| param_err("elementary abelian", "order too large"))?;
    let names: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    let digits = |mut x: usize| {
        (0..r)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let labels = (0..n)
        .map(|x| {
            let ds = digits(x);
            let parts: Vec<(&str, usize)> = names.iter().map(String::as_str).zip(ds).collect();
            word(&parts)
        })
        .collect();
    Ok(FiniteGroup::from_fn(
        format!("E{p}^{r}"),
        n,
        Some(labels),
        |a, b| {
            let (da, db) = (digits(a), digits(b));
            da.iter()
                .zip(&db)
                .rev()
                .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
        },
    )?)
}

/// Dihedral group of order `2m`: `r^a s^e` at index `a + m e`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, CatalogError> {
    if order < 4 || order % 2 != 0 {
        return Err(param_err("dihedral", "order must be even and at least 4"));
    }
    let m = order / 2;
    let labels = (0..order)
        .map(|i| word(&[("r", i % m), ("s", i / m)]))
        .collect();
    Ok(FiniteGroup::from_fn(
        format!("D{order}"),
        order,
        Some(labels),
        |x, y| {
            let (a, e) = (x % m, x / m);
            let (b, f) = (y % m, y / m);
            let b = if e == 1 { (m - b) % m } else { b };
            (a + b) % m + m * ((e + f) % 2)
        },
    )?)
}

/// Metacyclic groups `<x, y | x^m = 1, y^k = x^t, y x y^-1 = x^s>`,
/// element `x^a y^e` at index `a + m e`.
fn metacyclic(
    name: String,
    m: usize,
    k: usize,
    s: usize,
    t: usize,
) -> Result<FiniteGroup, CatalogError> {
    let n = m * k;
    // s^e mod m for e < k
    let twist: Vec<usize> = (0..k)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = (*acc * s) % m;
            Some(cur)
        })
        .collect();
    let labels = (0..n)
        .map(|i| word(&[("x", i % m), ("y", i / m)]))
        .collect();
    Ok(FiniteGroup::from_fn(name, n, Some(labels), |u, v| {
        let (a, e) = (u % m, u / m);
        let (b, f) = (v % m, v / m);
        let mut exp = a + twist[e] * b;
        let mut ye = e + f;
        if ye >= k {
            ye -= k;
            exp += t;
        }
        exp % m + m * ye
    })?)
}

/// Generalized quaternion group of order `2^m`, `m >= 3`.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup, CatalogError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(param_err(
            "generalized quaternion",
            "order must be 2^m with m >= 3",
        ));
    }
    let m = order / 2;
    metacyclic(format!("Q{order}"), m, 2, m - 1, m / 2)
}

pub fn semidihedral16() -> Result<FiniteGroup, CatalogError> {
    metacyclic("QD16".into(), 8, 2, 3, 0)
}

/// `<x, y | x^(p^(n-1)) = y^p = 1, y x y^-1 = x^(1 + p^(n-2))>` of order `p^n`
/// (`n >= 4` for `p = 2`, `n >= 3` otherwise).
pub fn modular(order: usize) -> Result<FiniteGroup, CatalogError> {
    let p = (2..=order)
        .find(|d| order % d == 0)
        .ok_or_else(|| param_err("modular", "order must be a prime power"))?;
    let mut n = 0;
    let mut rest = order;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    if rest != 1 || n < 3 || (p == 2 && n < 4) {
        return Err(param_err(
            "modular",
            "order must be p^n with n >= 3 (n >= 4 for p = 2)",
        ));
    }
    let m = order / p;
    metacyclic(format!("M{order}"), m, p, 1 + m / p, 0)
}

pub fn modular16() -> Result<FiniteGroup, CatalogError> {
    modular(16)
}

/// Upper unitriangular 3x3 matrices over `GF(p)`: `x^a y^b z^c` at
/// `a + p b + p^2 c` with `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup, CatalogError> {
    if !is_prime(p as u32) || p > 19 {
        return Err(param_err("heisenberg", "p must be a prime below 20"));
    }
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    let labels = (0..p * p * p)
        .map(|x| {
            let (a, b, c) = split(x);
            word(&[("x", a), ("y", b), ("z", c)])
        })
        .collect();
    Ok(FiniteGroup::from_fn(
        format!("Heis{p}"),
        p * p * p,
        Some(labels),
        |u, v| {
            let (a, b, c) = split(u);
            let (a2, b2, c2) = split(v);
            (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
        },
    )?)
}

/// The quaternion group `{±1, ±i, ±j, ±k}`, indexed `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> Result<FiniteGroup, CatalogError> {
    // unit products: (sign, unit) for units 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(FiniteGroup::from_fn("Q8", 8, Some(labels), |x, y| {
        let (u, s) = (x / 2, x % 2);
        let (v, t) = (y / 2, y % 2);
        let (sign, w) = UNIT[u][v];
        2 * w + (s + t + sign) % 2
    })?)
}

/// The symmetric group on three letters, from the permutations `(0 1)` and `(0 1 2)`.
pub fn symmetric3() -> Result<FiniteGroup, CatalogError> {
    let s = Permutation::from_cycles(3, &[&[0, 1]]);
    let r = Permutation::from_cycles(3, &[&[0, 1, 2]]);
    Ok(FiniteGroup::from_generators(3, &[s, r], Some(&["s", "r"]))?.with_name("S3"))
}

fn product(a: FiniteGroup, b: FiniteGroup) -> Result<FiniteGroup, CatalogError> {
    Ok(a.direct_product(&b)?)
}

/// `<a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, bc = cb, c a c^-1 = ab>`,
/// element `a^i b^j c^k` at index `i + 4j + 8k`.
fn c4c2_by_c2() -> Result<FiniteGroup, CatalogError> {
    let labels = (0..16)
        .map(|x| word(&[("a", x % 4), ("b", (x / 4) % 2), ("c", x / 8)]))
        .collect();
    Ok(FiniteGroup::from_fn(
        "(C4 x C2) : C2",
        16,
        Some(labels),
        |x, y| {
            let (i, j, k) = (x % 4, (x / 4) % 2, x / 8);
            let (i2, j2, k2) = (y % 4, (y / 4) % 2, y / 8);
            (i + i2) % 4 + 4 * ((j + j2 + k * i2) % 2) + 8 * ((k + k2) % 2)
        },
    )?)
}

/// `<x, y | x^4 = y^4 = 1, y x y^-1 = x^-1>`.
fn c4_by_c4() -> Result<FiniteGroup, CatalogError> {
    metacyclic("C4 : C4".into(), 4, 4, 3, 0)
}

/// Central product of `D8` and `C4 = <c>` over `c^2 = r^2`; element `d c^t`
/// at index `d + 8t` with `d` indexed as in [`dihedral`].
fn central_product_c4_d8() -> Result<FiniteGroup, CatalogError> {
    let d8 = dihedral(8)?;
    let r2 = 2;
    let labels = (0..16)
        .map(|x| {
            let d = d8.label(x % 8);
            match (d, x / 8) {
                (d, 0) => d.to_string(),
                ("1", _) => "c".to_string(),
                (d, _) => format!("{d}c"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_fn(
        "C4 o D8",
        16,
        Some(labels),
        |x, y| {
            let (d, t) = (x % 8, x / 8);
            let (d2, t2) = (y % 8, y / 8);
            let mut prod = d8.mul(d, d2);
            if t == 1 && t2 == 1 {
                prod = d8.mul(prod, r2);
            }
            prod + 8 * ((t + t2) % 2)
        },
    )?)
}

/// Group of order 16 by its position `1..=14` in the standard small-group numbering.
pub fn order16(index: usize) -> Result<FiniteGroup, CatalogError> {
    let g = match index {
        1 => cyclic(16)?,
        2 => product(cyclic_named(4, "x")?, cyclic_named(4, "y")?)?,
        3 => c4c2_by_c2()?,
        4 => c4_by_c4()?,
        5 => product(cyclic_named(8, "x")?, cyclic_named(2, "y")?)?,
        6 => modular16()?,
        7 => dihedral(16)?,
        8 => semidihedral16()?,
        9 => generalized_quaternion(16)?,
        10 => product(
            product(cyclic_named(4, "x")?, cyclic_named(2, "y")?)?,
            cyclic_named(2, "z")?,
        )?,
        11 => product(dihedral(8)?, cyclic_named(2, "z")?)?,
        12 => product(quaternion()?, cyclic_named(2, "z")?)?,
        13 => central_product_c4_d8()?,
        14 => elementary_abelian(2, 4)?,
        _ => return Err(param_err("order16", "index must be in 1..=14")),
    };
    Ok(g)
}

pub fn order16_all() -> Result<Vec<FiniteGroup>, CatalogError> {
    (1..=14).map(order16).collect()
}

/// The group of order `p^5` with `C_G(Z_2) = Z_2` and nilpotency class 3.
///
/// For `p = 2` it is `(Q8 x <a>) ⋊ <α>` with `α(i) = j`, `α(j) = i`,
/// `α(a) = -a`. For odd `p` it is `N ⋊ <β>` where `N` has normal form
/// `a^k b^l c^m γ^r` with
/// `a^k b^l c^m γ^r · a^k' b^l' c^m' γ^r' = a^(k+k') b^(l+l'+rm') c^(m+m') γ^(r+r')`
/// and `β(a^k b^l c^m γ^r) = a^(k+m+r) b^(l+r(r+1)/2) c^(m+r) γ^r`.
pub fn order_p5_counterexample(p: usize) -> Result<FiniteGroup, CatalogError> {
    match p {
        2 => order32_counterexample(),
        3 | 5 => odd_order_p5_counterexample(p),
        _ => Err(param_err(
            "prop29",
            format!("p must be 2, 3 or 5 (got {p}); larger p exceeds the order cap"),
        )),
    }
}

fn order32_counterexample() -> Result<FiniteGroup, CatalogError> {
    let n = product(quaternion()?, cyclic_named(2, "a")?)?.with_name("Q8 x C2");
    let find = |l: &str| n.find(l).expect("label present");
    let alpha = automorphism_from_generators(
        &n,
        &[
            (find("i"), find("j")),
            (find("j"), find("i")),
            (find("a"), find("-1·a")),
        ],
    )?;
    let gamma = cyclic_named(2, "α")?;
    let identity: Vec<usize> = n.elements().collect();
    Ok(n.semidirect_product(&gamma, &[identity, alpha])?
        .with_name("(Q8 x C2) : C2"))
}

/// Normal form of `N` for odd `p`: `(k, l, m, r)` at `k + p l + p^2 m + p^3 r`.
struct NormalForm {
    p: usize,
}

impl NormalForm {
    fn split(&self, x: usize) -> [usize; 4] {
        let p = self.p;
        [x % p, (x / p) % p, (x / (p * p)) % p, x / (p * p * p)]
    }

    fn join(&self, [k, l, m, r]: [usize; 4]) -> usize {
        let p = self.p;
        k % p + p * (l % p) + p * p * (m % p) + p * p * p * (r % p)
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let [k, l, m, r] = self.split(x);
        let [k2, l2, m2, r2] = self.split(y);
        self.join([k + k2, l + l2 + r * m2, m + m2, r + r2])
    }

    fn beta(&self, x: usize) -> usize {
        let [k, l, m, r] = self.split(x);
        self.join([k + m + r, l + r * (r + 1) / 2, m + r, r])
    }
}

fn odd_order_p5_counterexample(p: usize) -> Result<FiniteGroup, CatalogError> {
    let nf = NormalForm { p };
    let order_n = p.pow(4);
    let labels = (0..order_n)
        .map(|x| {
            let [k, l, m, r] = nf.split(x);
            word(&[("a", k), ("b", l), ("c", m), ("γ", r)])
        })
        .collect();
    let n = FiniteGroup::from_fn(format!("E{p}^3 : C{p}"), order_n, Some(labels), |x, y| {
        nf.mul(x, y)
    })?;
    let beta: Vec<usize> = (0..order_n).map(|x| nf.beta(x)).collect();
    let mut action = vec![(0..order_n).collect::<Vec<_>>()];
    for s in 1..p {
        let prev = &action[s - 1];
        action.push(prev.iter().map(|&x| beta[x]).collect());
    }
    let gamma = cyclic_named(p, "β")?;
    Ok(n.semidirect_product(&gamma, &action)?
        .with_name(format!("(E{p}^3 : C{p}) : C{p}")))
}

/// Parses a group spec (see the module docs); `A x B` builds direct products.
pub fn parse(spec: &str) -> Result<FiniteGroup, CatalogError> {
    let parts: Vec<&str> = spec.split(" x ").map(str::trim).collect();
    let mut groups = parts.iter().map(|s| parse_atom(s));
    let mut acc = groups
        .next()
        .ok_or_else(|| CatalogError::Unknown(spec.into()))??;
    for g in groups {
        acc = product(acc, g?)?;
    }
    Ok(if parts.len() > 1 {
        acc.with_name(parts.join(" x "))
    } else {
        acc
    })
}

fn number(name: &str, s: &str) -> Result<usize, CatalogError> {
    s.parse::<usize>()
        .map_err(|_| param_err(name, format!("`{s}` is not a number")))
}

fn parse_atom(s: &str) -> Result<FiniteGroup, CatalogError> {
    let g = if let Some(rest) = s.strip_prefix("order16:") {
        order16(number("order16", rest)?)?
    } else if let Some(rest) = s.strip_prefix("prop29:") {
        order_p5_counterexample(number("prop29", rest)?)?
    } else {
        match s {
            "Q8" => quaternion()?,
            "QD16" => semidihedral16()?,
            "S3" => symmetric3()?,
            _ => {
                if let Some(rest) = s.strip_prefix('C') {
                    cyclic(number("cyclic", rest)?)?
                } else if let Some(rest) = s.strip_prefix('E') {
                    let (p, r) = rest
                        .split_once('^')
                        .ok_or_else(|| param_err("elementary abelian", "expected E<p>^<r>"))?;
                    elementary_abelian(
                        number("elementary abelian", p)?,
                        number("elementary abelian", r)?,
                    )?
                } else if let Some(rest) = s.strip_prefix("Heis") {
                    heisenberg(number("heisenberg", rest)?)?
                } else if let Some(rest) = s.strip_prefix('M') {
                    modular(number("modular", rest)?)?
                } else if let Some(rest) = s.strip_prefix('D') {
                    dihedral(number("dihedral", rest)?)?
                } else if let Some(rest) = s.strip_prefix('Q') {
                    generalized_quaternion(number("generalized quaternion", rest)?)?
                } else {
                    return Err(CatalogError::Unknown(s.to_string()));
                }
            }
        }
    };
    Ok(g.with_name(s))
}

/// Lookup by family name and integer parameters.
pub fn get(name: &str, params: &[usize]) -> Result<FiniteGroup, CatalogError> {
    let arg = |i: usize| {
        params
            .get(i)
            .copied()
            .ok_or_else(|| param_err(name, format!("missing parameter {}", i + 1)))
    };
    match name {
        "cyclic" => cyclic(arg(0)?),
        "elem_abelian" => elementary_abelian(arg(0)?, arg(1)?),
        "dihedral" => dihedral(arg(0)?),
        "gen_quaternion" => generalized_quaternion(arg(0)?),
        "semidihedral" if arg(0)? == 16 => semidihedral16(),
        "semidihedral" => Err(param_err(name, "only order 16 is available")),
        "modular" => modular(arg(0)?),
        "heisenberg" => heisenberg(arg(0)?),
        "Q8" => quaternion(),
        "order16" => order16(arg(0)?),
        "prop29" => order_p5_counterexample(arg(0)?),
        "sym" if arg(0)? == 3 => symmetric3(),
        "sym" => Err(param_err(name, "only degree 3 is available")),
        _ => Err(CatalogError::Unknown(name.to_string())),
    }
}

/// Known invariants a catalog construction must reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub order: usize,
    pub center: usize,
    pub classes: usize,
    pub nilpotency_class: Option<usize>,
    pub derived: usize,
    pub abelianization: Vec<usize>,
    pub involutions: usize,
}

impl Profile {
    pub fn of(g: &FiniteGroup) -> Profile {
        let fp = g.fingerprint();
        Profile {
            order: g.order(),
            center: g.center().len(),
            classes: g.conjugacy_classes().len(),
            nilpotency_class: g.nilpotency_class(),
            derived: fp.derived_order,
            abelianization: fp.abelianization,
            involutions: g.elements().filter(|&x| g.element_order(x) == 2).count(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Spec string accepted by [`parse`].
    pub spec: String,
    pub expected: Option<Profile>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup, CatalogError> {
        parse(&self.spec)
    }
}

fn profile(
    order: usize,
    center: usize,
    classes: usize,
    nc: Option<usize>,
    derived: usize,
    ab: &[usize],
    involutions: usize,
) -> Option<Profile> {
    Some(Profile {
        order,
        center,
        classes,
        nilpotency_class: nc,
        derived,
        abelianization: ab.to_vec(),
        involutions,
    })
}

/// The fourteen groups of order 16 with their textbook invariants.
pub fn order16_entries() -> Vec<CatalogEntry> {
    let known = [
        profile(16, 16, 16, Some(1), 1, &[16], 1),
        profile(16, 16, 16, Some(1), 1, &[4, 4], 3),
        profile(16, 4, 10, Some(2), 2, &[2, 4], 7),
        profile(16, 4, 10, Some(2), 2, &[2, 4], 3),
        profile(16, 16, 16, Some(1), 1, &[2, 8], 3),
        profile(16, 4, 10, Some(2), 2, &[2, 4], 3),
        profile(16, 2, 7, Some(3), 4, &[2, 2], 9),
        profile(16, 2, 7, Some(3), 4, &[2, 2], 5),
        profile(16, 2, 7, Some(3), 4, &[2, 2], 1),
        profile(16, 16, 16, Some(1), 1, &[2, 2, 4], 7),
        profile(16, 4, 10, Some(2), 2, &[2, 2, 2], 11),
        profile(16, 4, 10, Some(2), 2, &[2, 2, 2], 3),
        profile(16, 4, 10, Some(2), 2, &[2, 2, 2], 7),
        profile(16, 16, 16, Some(1), 1, &[2, 2, 2, 2], 15),
    ];
    known
        .into_iter()
        .enumerate()
        .map(|(i, expected)| CatalogEntry {
            spec: format!("order16:{}", i + 1),
            expected,
        })
        .collect()
}

/// Every catalog group of order at most 16. Family members that coincide
/// with a named group (`D6 = S3`, `C16 = order16:1`, ...) are listed once.
pub fn small_entries() -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = (1..16)
        .map(|n| CatalogEntry {
            spec: format!("C{n}"),
            expected: None,
        })
        .collect();
    let named = [
        ("E2^2", None),
        ("E2^3", None),
        ("E3^2", None),
        ("C4 x C2", None),
        ("C6 x C2", None),
        ("S3", profile(6, 1, 3, None, 3, &[2], 3)),
        ("D8", profile(8, 2, 5, Some(2), 2, &[2, 2], 5)),
        ("Q8", profile(8, 2, 5, Some(2), 2, &[2, 2], 1)),
        ("D10", profile(10, 1, 4, None, 5, &[2], 5)),
        ("D12", profile(12, 2, 6, None, 3, &[2, 2], 7)),
        ("D14", profile(14, 1, 5, None, 7, &[2], 7)),
    ];
    entries.extend(named.into_iter().map(|(spec, expected)| CatalogEntry {
        spec: spec.to_string(),
        expected,
    }));
    entries.extend(order16_entries());
    entries
}

/// The whole catalog: [`small_entries`], further `p`-groups of order 27
/// and 32, a few mixed-order products, and both order-`p^5` groups for
/// `p = 2, 3`.
pub fn entries() -> Vec<CatalogEntry> {
    let mut all = small_entries();
    let more = [
        ("C3 x S3", None),
        ("Q8 x C3", profile(24, 6, 15, Some(2), 2, &[2, 6], 1)),
        ("C27", None),
        ("C9 x C3", None),
        ("E3^3", None),
        ("Heis3", profile(27, 3, 11, Some(2), 3, &[3, 3], 0)),
        ("M27", profile(27, 3, 11, Some(2), 3, &[3, 3], 0)),
        ("E2^5", None),
        ("Q8 x C4", None),
        ("D8 x C4", None),
        ("Q8 x E2^2", None),
        ("order16:3 x C2", None),
        ("M16 x C2", None),
        ("order16:13 x C2", None),
        ("D16 x C2", None),
        ("Q16 x C2", None),
        ("Q32", None),
        ("D32", None),
        ("prop29:2", None),
        ("prop29:3", None),
    ];
    all.extend(more.into_iter().map(|(spec, expected)| CatalogEntry {
        spec: spec.to_string(),
        expected,
    }));
    all
}
