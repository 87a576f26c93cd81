//! Finite semigroups given by Cayley tables, and recognition of inverse
//! semigroups among them.

mod hom;
mod ideal;
mod partial;

use std::fmt;

pub use hom::{check_hom, find_isomorphism, homomorphisms, restrict_hom_ideal_agreement};
pub use ideal::{
    ideal_closure, is_essential_ideal, is_essential_ideal_left, subsemigroup, TwoSidedIdeal,
};
pub use partial::{
    compose_partial, invert_partial, partial_bijections, symmetric_inverse_monoid, PartialMap,
};

use crate::error::{Error, Result};

/// A multiplication table on `0..order`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTable {
    order: usize,
    cells: Vec<usize>,
}

impl MulTable {
    pub fn new(order: usize, cells: Vec<usize>) -> Result<Self> {
        if cells.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&c| c >= order) {
            return Err(Error::InvalidTable(format!(
                "entry ({}, {}) = {} is out of range",
                pos / order,
                pos % order,
                cells[pos]
            )));
        }
        Ok(MulTable { order, cells })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidTable(format!("row {r} has the wrong length")));
        }
        MulTable::new(n, rows.concat())
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                cells.push(f(a, b));
            }
        }
        MulTable::new(order, cells)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order.max(1)).map(|r| r.to_vec()).take(self.order).collect()
    }

    /// First triple (in lexicographic order) breaking associativity.
    pub fn non_associative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Copy of the table with a single entry replaced.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Result<MulTable> {
        let mut cells = self.cells.clone();
        cells[a * self.order + b] = value;
        MulTable::new(self.order, cells)
    }
}

pub fn check_associative(t: &MulTable) -> bool {
    t.non_associative_triple().is_none()
}

/// A finite inverse semigroup with its inverse map and idempotents.
///
/// Equality compares tables only; the name is a label.
#[derive(Clone)]
pub struct InverseSemigroup {
    name: String,
    table: MulTable,
    inv: Vec<usize>,
    idempotent: Vec<bool>,
    idempotents: Vec<usize>,
}

impl PartialEq for InverseSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for InverseSemigroup {}

impl fmt::Debug for InverseSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InverseSemigroup({:?}, order {})", self.name, self.order())
    }
}

impl InverseSemigroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    pub fn is_empty(&self) -> bool {
        self.order() == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inv
    }

    #[inline]
    pub fn is_idempotent(&self, s: usize) -> bool {
        self.idempotent[s]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// s* s
    pub fn source(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// s s*
    pub fn range(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    /// Natural partial order: s = t s* s.
    pub fn leq(&self, s: usize, t: usize) -> bool {
        s == self.mul(t, self.source(s))
    }

    pub fn zero(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.elements().all(|s| self.mul(z, s) == z && self.mul(s, z) == z))
    }

    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|s| self.mul(e, s) == s && self.mul(s, e) == s))
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }
}

/// Recognizes an inverse semigroup, computing generalized inverses by scan.
///
/// The uniqueness scan is cross-checked against commutation of idempotents;
/// for a regular semigroup the two must agree.
pub fn recognize_inverse(table: MulTable) -> Result<InverseSemigroup> {
    if let Some((a, b, c)) = table.non_associative_triple() {
        return Err(Error::NotAssociative(a, b, c));
    }
    let n = table.order();
    let mut candidates = Vec::with_capacity(n);
    for s in 0..n {
        let c: Vec<usize> = (0..n)
            .filter(|&x| {
                table.mul(table.mul(s, x), s) == s && table.mul(table.mul(x, s), x) == x
            })
            .collect();
        if c.is_empty() {
            return Err(Error::NotRegular(s));
        }
        candidates.push(c);
    }
    let idempotent: Vec<bool> = (0..n).map(|s| table.mul(s, s) == s).collect();
    let idempotents: Vec<usize> = (0..n).filter(|&s| idempotent[s]).collect();
    let commute = idempotents.iter().all(|&e| {
        idempotents
            .iter()
            .all(|&f| table.mul(e, f) == table.mul(f, e))
    });
    let non_unique = candidates.iter().position(|c| c.len() > 1);
    if commute != non_unique.is_none() {
        return Err(Error::Inconsistency(format!(
            "idempotents commute = {commute}, but inverses unique = {}",
            non_unique.is_none()
        )));
    }
    if let Some(s) = non_unique {
        return Err(Error::NotUnique {
            element: s,
            candidates: candidates[s].clone(),
        });
    }
    Ok(InverseSemigroup {
        name: String::new(),
        inv: candidates.into_iter().map(|c| c[0]).collect(),
        idempotent,
        idempotents,
        table,
    })
}

/// Natural partial order s ≤ t.
pub fn natural_order(s_: &InverseSemigroup, s: usize, t: usize) -> bool {
    s_.leq(s, t)
}

/// The four equivalent descriptions of s ≤ t:
/// s = t s*s, s = t e for an idempotent e, s = s s* t, s = f t for an idempotent f.
pub fn order_conditions(sg: &InverseSemigroup, s: usize, t: usize) -> [bool; 4] {
    let e = sg.idempotents();
    [
        s == sg.mul(t, sg.source(s)),
        e.iter().any(|&e| s == sg.mul(t, e)),
        s == sg.mul(sg.range(s), t),
        e.iter().any(|&f| s == sg.mul(f, t)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[usize]]) -> MulTable {
        MulTable::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn associativity_examples() {
        assert!(check_associative(&table(&[&[0]])));
        assert!(check_associative(&table(&[&[0, 1], &[1, 0]])));
        let t = table(&[&[0, 0], &[1, 0]]);
        assert!(!check_associative(&t));
        let (a, b, c) = t.non_associative_triple().unwrap();
        assert_ne!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
    }

    #[test]
    fn out_of_range_entry_rejected() {
        assert!(MulTable::new(2, vec![0, 1, 2, 0]).is_err());
        assert!(MulTable::new(2, vec![0, 1, 1]).is_err());
    }

    #[test]
    fn recognize_small_examples() {
        let z2 = recognize_inverse(table(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(z2.inverse_map(), &[0, 1]);
        let e2 = recognize_inverse(table(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(e2.inverse_map(), &[0, 1]);
        assert_eq!(e2.idempotents(), &[0, 1]);
        match recognize_inverse(table(&[&[0, 0], &[1, 1]])) {
            Err(Error::NotUnique { element, candidates }) => {
                assert_eq!(element, 0);
                assert_eq!(candidates, vec![0, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            recognize_inverse(table(&[&[0, 0], &[1, 0]])),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn not_regular_detected() {
        // null semigroup: element 1 has no generalized inverse
        let t = table(&[&[0, 0], &[0, 0]]);
        assert_eq!(recognize_inverse(t).unwrap_err(), Error::NotRegular(1));
    }

    #[test]
    fn order_examples() {
        let e2 = recognize_inverse(table(&[&[0, 0], &[0, 1]])).unwrap();
        assert!(natural_order(&e2, 0, 1));
        assert!(!natural_order(&e2, 1, 0));
        let z2 = recognize_inverse(table(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(!natural_order(&z2, 1, 0));
        for s in 0..2 {
            assert!(natural_order(&z2, s, s));
            assert_eq!(order_conditions(&z2, s, 1 - s), [false; 4]);
        }
    }
}
