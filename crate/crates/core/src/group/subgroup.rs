use std::collections::HashSet;

use super::group::Group;
use crate::error::{Error, Result};

/// Largest group whose full subgroup lattice is enumerated.
pub const MAX_LATTICE_ORDER: usize = 2000;

/// A subgroup given by generators, with its element set cached.
///
/// Equality and hashing look at the element set only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    gens: Vec<usize>,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Subgroup {
    /// Closure of `gens` under multiplication.
    pub fn generate(group: &Group, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; group.order()];
        seen[group.identity()] = true;
        let mut elements = vec![group.identity()];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &s in gens {
                let y = group.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup { gens, elements }
    }

    /// Wrap an explicit element set after checking it is a subgroup.
    pub fn from_elements(group: &Group, elements: &[usize]) -> Result<Subgroup> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.iter().any(|&x| x >= group.order()) {
            return Err(Error::InvalidGroup("element outside the group".into()));
        }
        if els.binary_search(&group.identity()).is_err() {
            return Err(Error::InvalidGroup("subset lacks the identity".into()));
        }
        for &a in &els {
            for &b in &els {
                if els.binary_search(&group.mul(a, b)).is_err() {
                    return Err(Error::InvalidGroup("subset is not closed".into()));
                }
            }
        }
        let gens = greedy_generators(group, &els);
        Ok(Subgroup {
            gens,
            elements: els,
        })
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup::generate(group, &[])
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup {
            gens: greedy_generators(group, &group.elements().collect::<Vec<_>>()),
            elements: group.elements().collect(),
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `x H x^{-1}`.
    pub fn conjugate(&self, group: &Group, x: usize) -> Subgroup {
        let xi = group.inv(x);
        let gens: Vec<usize> = self
            .gens
            .iter()
            .map(|&h| group.mul(group.mul(x, h), xi))
            .collect();
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&h| group.mul(group.mul(x, h), xi))
            .collect();
        elements.sort_unstable();
        Subgroup { gens, elements }
    }

    /// Intersection with another subgroup of the same group.
    pub fn intersect(&self, group: &Group, other: &Subgroup) -> Subgroup {
        let els: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup {
            gens: greedy_generators(group, &els),
            elements: els,
        }
    }
}

/// Generators picked in index order, skipping anything already generated.
fn greedy_generators(group: &Group, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut cur = Subgroup::trivial(group);
    for &x in elements {
        if !cur.contains(x) {
            gens.push(x);
            cur = Subgroup::generate(group, &gens);
        }
    }
    gens
}

/// Every subgroup of a group with at most [`MAX_LATTICE_ORDER`] elements,
/// sorted by order and then by element set.
pub fn all_subgroups(group: &Group) -> Result<Vec<Subgroup>> {
    if group.order() > MAX_LATTICE_ORDER {
        return Err(Error::GroupTooLarge {
            order: group.order(),
            bound: MAX_LATTICE_ORDER,
            what: "subgroup lattice enumeration",
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut cyclic = Vec::new();
    for g in group.elements() {
        let c = Subgroup::generate(group, &[g]);
        if seen.insert(c.elements.clone()) {
            cyclic.push(c);
        }
    }
    // One generator per cyclic subgroup suffices for joins.
    let cyc_gens: Vec<usize> = cyclic.iter().map(|c| *c.gens.first().unwrap_or(&0)).collect();
    let mut all = cyclic.clone();
    let mut frontier = cyclic;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for &g in &cyc_gens {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.gens.clone();
                gens.push(g);
                let j = Subgroup::generate(group, &gens);
                if seen.insert(j.elements.clone()) {
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(all)
}
