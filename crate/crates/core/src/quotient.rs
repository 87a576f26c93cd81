//! Union-find and the quotient constructions built on it.
//!
//! Tensor products, the set quotient in the Rees construction and the
//! Rees congruence all go through [`UnionFind::into_partition`].

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::semigroup::MulTable;

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Classes numbered in order of their smallest member.
    pub fn into_partition(mut self) -> Partition {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut root_class = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if root_class[r] == usize::MAX {
                root_class[r] = members.len();
                members.push(Vec::new());
            }
            class_of[x] = root_class[r];
            members[root_class[r]].push(x);
        }
        Partition { class_of, members }
    }
}

/// A partition of `0..n` into classes with deterministic numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        UnionFind::new(n).into_partition()
    }

    /// Builds the partition from an equivalence given as a predicate.
    /// The predicate is trusted to be an equivalence relation.
    pub fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                if related(a, b) {
                    uf.union(a, b);
                }
            }
        }
        uf.into_partition()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn num_classes(&self) -> usize {
        self.members.len()
    }

    /// Smallest member of a class.
    pub fn rep(&self, class: usize) -> usize {
        self.members[class][0]
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    /// True if every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.members
            .iter()
            .all(|c| c.iter().all(|&x| other.class_of(x) == other.class_of(c[0])))
    }

    /// Quotient multiplication table, checking compatibility on all representatives.
    pub fn quotient_table(&self, table: &MulTable) -> Result<MulTable> {
        let k = self.num_classes();
        let mut cells = vec![0; k * k];
        for (ca, ma) in self.members.iter().enumerate() {
            for (cb, mb) in self.members.iter().enumerate() {
                let v = self.class_of(table.mul(ma[0], mb[0]));
                for &a in ma {
                    for &b in mb {
                        if self.class_of(table.mul(a, b)) != v {
                            return Err(Error::Inconsistency(format!(
                                "partition is not a congruence at ({a}, {b})"
                            )));
                        }
                    }
                }
                cells[ca * k + cb] = v;
            }
        }
        MulTable::new(k, cells)
    }
}

/// Least congruence on `table` containing the given pairs.
pub fn congruence_closure(table: &MulTable, pairs: &[(usize, usize)]) -> Partition {
    let n = table.order();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = queue.pop() {
        if uf.union(a, b) {
            for c in 0..n {
                queue.push((table.mul(a, c), table.mul(b, c)));
                queue.push((table.mul(c, a), table.mul(c, b)));
            }
        }
    }
    uf.into_partition()
}

/// Every congruence on `table`, obtained as joins of principal congruences.
/// Fails once more than `limit` congruences have been found.
pub fn all_congruences(table: &MulTable, limit: usize) -> Result<Vec<Partition>> {
    let n = table.order();
    let mut principal: Vec<Partition> = Vec::new();
    let mut seen_principal = HashSet::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let p = congruence_closure(table, &[(a, b)]);
            if seen_principal.insert(p.clone()) {
                principal.push(p);
            }
        }
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut all = vec![Partition::discrete(n)];
    found.insert(all[0].class_of.clone());
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            for p in &principal {
                if p.refines(c) {
                    continue;
                }
                let joined = join(table, c, p);
                if found.insert(joined.class_of.clone()) {
                    if found.len() > limit {
                        return Err(Error::SizeLimit(format!(
                            "more than {limit} congruences"
                        )));
                    }
                    next.push(joined.clone());
                    all.push(joined);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.class_of.cmp(&b.class_of));
    Ok(all)
}

fn join(table: &MulTable, a: &Partition, b: &Partition) -> Partition {
    let mut pairs = Vec::new();
    for p in [a, b] {
        for c in p.classes() {
            for &x in &c[1..] {
                pairs.push((c[0], x));
            }
        }
    }
    congruence_closure(table, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn partition_numbering_follows_smallest_member() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 1);
        uf.union(3, 0);
        let p = uf.into_partition();
        assert_eq!(p.classes(), &[vec![0, 3], vec![1, 4], vec![2]]);
        assert_eq!(p.class_of(4), 1);
        assert_eq!(p.rep(1), 1);
    }

    #[test]
    fn congruences_of_e2_and_z2() {
        // E2 and Z2 each have exactly two congruences: equality and the full relation
        for s in [fixtures::e2(), fixtures::z2()] {
            assert_eq!(all_congruences(s.table(), 100).unwrap().len(), 2);
        }
        // the chain E3 has congruences with classes that are intervals: 4 of them
        assert_eq!(all_congruences(fixtures::e3().table(), 100).unwrap().len(), 4);
        // B2: equality, the Rees congruence collapsing everything, nothing else
        assert_eq!(all_congruences(fixtures::b2().table(), 100).unwrap().len(), 2);
    }

    #[test]
    fn closure_is_compatible() {
        let t = fixtures::i2();
        let p = congruence_closure(t.table(), &[(1, 4)]);
        assert!(p.quotient_table(t.table()).is_ok());
    }
}
