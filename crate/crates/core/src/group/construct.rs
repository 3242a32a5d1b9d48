use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError, MAX_GROUP_ORDER};

/// A permutation of `0..degree` as its image list: `self.0[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut img: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                img[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }
}

/// JSON group description accepted on the command line:
/// `{ "name": ..., "degree": ..., "generators": [[...], ...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDescription {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupDescription {
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::Description(e.to_string()))
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<Permutation> = self.generators.iter().cloned().map(Permutation).collect();
        FiniteGroup::from_generators(self.degree, &gens, None).map(|g| g.with_name(&self.name))
    }
}

/// Elements in breadth-first discovery order, with each element's parent
/// and the generator index that reached it.
struct Closure<T> {
    elements: Vec<T>,
    parent: Vec<(usize, usize)>,
}

impl FiniteGroup {
    /// The group generated by `gens` under left-to-right composition.
    ///
    /// Elements are enumerated breadth-first from the identity, extending
    /// each word on the right by the generators in index order. Labels are
    /// the discovered words, written with `names` (default `g0`, `g1`, ...).
    pub fn from_generators(
        degree: usize,
        gens: &[Permutation],
        names: Option<&[&str]>,
    ) -> Result<FiniteGroup, GroupError> {
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != degree || !g.is_valid() {
                return Err(GroupError::NotPermutation { index, degree });
            }
        }
        let closure = closure(Permutation::identity(degree), gens.len(), |x, i| {
            x.then(&gens[i])
        })?;
        let n = closure.elements.len();
        let index: HashMap<&Permutation, usize> = closure
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let rmul: Vec<Vec<usize>> = closure
            .elements
            .iter()
            .map(|x| gens.iter().map(|g| index[&x.then(g)]).collect())
            .collect();

        // x * y = (x * parent(y)) * gen(y), filled column by column in discovery order
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            table[x * n] = x as u32;
        }
        for y in 1..n {
            let (py, gi) = closure.parent[y];
            for x in 0..n {
                table[x * n + y] = rmul[table[x * n + py] as usize][gi] as u32;
            }
        }

        let default_names: Vec<String> = (0..gens.len()).map(|i| format!("g{i}")).collect();
        let names: Vec<&str> = match names {
            Some(ns) if ns.len() == gens.len() => ns.to_vec(),
            _ => default_names.iter().map(String::as_str).collect(),
        };
        let labels = word_labels(&closure.parent, &names);
        FiniteGroup::from_table(
            format!("<{} generators>", gens.len()),
            n,
            table,
            Some(labels),
        )
    }
}

/// Breadth-first word enumeration; `step(x, i)` returns `x · gen_i`.
fn closure<T: Clone + Eq + std::hash::Hash>(
    identity: T,
    ngens: usize,
    step: impl Fn(&T, usize) -> T,
) -> Result<Closure<T>, GroupError> {
    let mut elements = vec![identity.clone()];
    let mut parent = vec![(0, 0)];
    let mut seen: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for i in 0..ngens {
            let y = step(&elements[x], i);
            if !seen.contains_key(&y) {
                if elements.len() == MAX_GROUP_ORDER {
                    return Err(GroupError::TooLarge {
                        order: MAX_GROUP_ORDER + 1,
                    });
                }
                seen.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
                parent.push((x, i));
            }
        }
    }
    Ok(Closure { elements, parent })
}

fn word_labels(parent: &[(usize, usize)], names: &[&str]) -> Vec<String> {
    // run-length encoded words: [(generator, exponent)]
    let mut words: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for &(p, gi) in &parent[1..] {
        let mut w = words[p].clone();
        match w.last_mut() {
            Some((g, e)) if *g == gi => *e += 1,
            _ => w.push((gi, 1)),
        }
        words.push(w);
    }
    words
        .iter()
        .map(|w| {
            if w.is_empty() {
                return "1".to_string();
            }
            w.iter()
                .map(|&(g, e)| {
                    if e == 1 {
                        names[g].to_string()
                    } else {
                        format!("{}^{}", names[g], e)
                    }
                })
                .collect::<Vec<_>>()
                .join("")
        })
        .collect()
}

/// Extends an assignment on generators to a map on the whole group and
/// checks that it is an automorphism.
///
/// `images` pairs each generator with its intended image.
pub fn automorphism_from_generators(
    group: &FiniteGroup,
    images: &[(usize, usize)],
) -> Result<Vec<usize>, GroupError> {
    let n = group.order();
    for &(g, h) in images {
        if g >= n || h >= n {
            return Err(GroupError::BadElement(g.max(h)));
        }
    }
    let closure = closure(0usize, images.len(), |&x, i| group.mul(x, images[i].0))?;
    if closure.elements.len() != n {
        return Err(GroupError::GeneratorsIncomplete);
    }
    let mut map = vec![0usize; n];
    for (idx, &x) in closure.elements.iter().enumerate().skip(1) {
        let (p, gi) = closure.parent[idx];
        map[x] = group.mul(map[closure.elements[p]], images[gi].1);
    }
    group
        .check_automorphism(&map)
        .map_err(|(x, y)| GroupError::NotAutomorphism { gamma: 0, x, y })?;
    Ok(map)
}
