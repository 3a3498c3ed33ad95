use std::collections::HashMap;
use std::hash::Hash;

/// A partition of `0..n`, each point mapped to the smallest member of its class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class: Vec<usize>,
}

impl Partition {
    /// Points with equal labels share a class.
    pub fn from_labels<T: Hash + Eq>(n: usize, label: impl Fn(usize) -> T) -> Partition {
        let mut first: HashMap<T, usize> = HashMap::new();
        let class = (0..n).map(|x| *first.entry(label(x)).or_insert(x)).collect();
        Partition { class }
    }

    /// Build from a class map; ids are re-canonicalised to minimal members.
    pub fn from_class_map(map: &[usize]) -> Partition {
        Partition::from_labels(map.len(), |x| map[x])
    }

    pub fn discrete(n: usize) -> Partition {
        Partition {
            class: (0..n).collect(),
        }
    }

    pub fn single(n: usize) -> Partition {
        Partition { class: vec![0; n] }
    }

    pub fn domain_size(&self) -> usize {
        self.class.len()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class[x]
    }

    pub fn num_classes(&self) -> usize {
        self.class.iter().enumerate().filter(|(i, &c)| *i == c).count()
    }

    /// Classes in order of their minimal members, each sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (x, &c) in self.class.iter().enumerate() {
            let i = *slot.entry(c).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[i].push(x);
        }
        out
    }

    /// Sorted multiset of class sizes.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.class.len() == other.class.len()
            && (0..self.class.len()).all(|x| other.class[x] == other.class[self.class[x]])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ids_are_minimal_members() {
        let p = Partition::from_labels(6, |x| x % 3);
        assert_eq!(p.as_slice(), &[0, 1, 2, 0, 1, 2]);
        assert_eq!(p.num_classes(), 3);
        assert_eq!(p.classes(), vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn refinement_order() {
        let fine = Partition::from_labels(6, |x| x % 6);
        let mid = Partition::from_labels(6, |x| x % 3);
        let coarse = Partition::single(6);
        assert!(fine.refines(&mid) && mid.refines(&coarse) && fine.refines(&coarse));
        assert!(!coarse.refines(&mid));
        assert!(!Partition::from_labels(6, |x| x % 2).refines(&mid));
        assert_eq!(fine, Partition::discrete(6));
    }
}
