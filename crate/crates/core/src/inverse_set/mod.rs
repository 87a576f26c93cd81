//! Regular and inverse S-sets with pairings, partial Morita equivalences,
//! structure-preserving maps and the standard examples.

mod biset;
mod examples;
pub mod generate;
mod maps;
mod order;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use biset::{check_partial_morita, PartialMoritaEquivalence};
pub use examples::{
    direct_sum, enlargement_set, partial_bijection_biset, presheaf_set, restrict_to_closed,
    semigroup_as_left_set, semigroup_as_right_set, Presheaf,
};
pub use maps::{all_set_isomorphisms, check_map, find_left_set_isomorphism, find_set_isomorphism, MapKind};
pub use order::{set_order, set_order_conditions};

use crate::error::{Error, Result};
use crate::semigroup::InverseSemigroup;

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

/// Every violation found by a checker, in scan order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, axiom: &str, witness: Vec<usize>) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness,
        });
    }

    pub fn violates(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    /// Distinct violated axioms, in first-seen order.
    pub fn axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }

    /// Appends another report, prefixing its axiom names.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for v in other.violations {
            self.violations.push(Violation {
                axiom: format!("{prefix}{}", v.axiom),
                witness: v.witness,
            });
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "no violations");
        }
        write!(f, "{} violations", self.violations.len())?;
        for v in self.violations.iter().take(3) {
            write!(f, "; {} at {:?}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

fn check_table(what: &str, table: &[usize], len: usize, bound: usize) -> Result<()> {
    if table.len() != len {
        return Err(Error::InvalidTable(format!(
            "{what}: expected {len} entries, found {}",
            table.len()
        )));
    }
    if let Some(p) = table.iter().position(|&x| x >= bound) {
        return Err(Error::InvalidTable(format!(
            "{what}: entry {p} = {} is out of range",
            table[p]
        )));
    }
    Ok(())
}

/// A right T-set with a pairing into T, stored as dense tables.
///
/// Construction only checks shapes; use the checkers for the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSet {
    semigroup: Arc<InverseSemigroup>,
    size: usize,
    action: Vec<usize>,
    pairing: Vec<usize>,
}

impl RightSet {
    pub fn new(
        semigroup: Arc<InverseSemigroup>,
        size: usize,
        action: Vec<usize>,
        pairing: Vec<usize>,
    ) -> Result<Self> {
        check_table("action", &action, size * semigroup.order(), size)?;
        check_table("pairing", &pairing, size * size, semigroup.order())?;
        Ok(RightSet {
            semigroup,
            size,
            action,
            pairing,
        })
    }

    pub fn from_fns(
        semigroup: Arc<InverseSemigroup>,
        size: usize,
        act: impl Fn(usize, usize) -> usize,
        pair: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = semigroup.order();
        let action = (0..size * n).map(|i| act(i / n, i % n)).collect();
        let pairing = (0..size * size).map(|i| pair(i / size, i % size)).collect();
        RightSet::new(semigroup, size, action, pairing)
    }

    pub fn empty(semigroup: Arc<InverseSemigroup>) -> Self {
        RightSet {
            semigroup,
            size: 0,
            action: Vec::new(),
            pairing: Vec::new(),
        }
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// u·t
    #[inline]
    pub fn act(&self, u: usize, t: usize) -> usize {
        self.action[u * self.semigroup.order() + t]
    }

    /// ⟨u|u'⟩
    #[inline]
    pub fn pair(&self, u: usize, v: usize) -> usize {
        self.pairing[u * self.size + v]
    }

    pub fn action(&self) -> &[usize] {
        &self.action
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// ω_{v,u}(x) = v⟨u|x⟩ for elements of the same set.
    pub fn omega(&self, v: usize, u: usize, x: usize) -> usize {
        self.act(v, self.pair(u, x))
    }

    /// Elements u·t for t in T.
    pub fn orbit(&self, u: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        for t in self.semigroup.elements() {
            seen[self.act(u, t)] = true;
        }
        (0..self.size).filter(|&x| seen[x]).collect()
    }

    pub fn is_full(&self) -> bool {
        let mut hit = vec![false; self.semigroup.order()];
        for &p in &self.pairing {
            hit[p] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// Sorted image of the pairing.
    pub fn pairing_image(&self) -> Vec<usize> {
        let mut img = self.pairing.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

pub fn is_right_full(u: &RightSet) -> bool {
    u.is_full()
}

/// A left S-set with a pairing into S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftSet {
    semigroup: Arc<InverseSemigroup>,
    size: usize,
    action: Vec<usize>,
    pairing: Vec<usize>,
}

impl LeftSet {
    /// `action` is stored row-major by carrier element: entry `u * |S| + s` is s·u.
    pub fn new(
        semigroup: Arc<InverseSemigroup>,
        size: usize,
        action: Vec<usize>,
        pairing: Vec<usize>,
    ) -> Result<Self> {
        check_table("left action", &action, size * semigroup.order(), size)?;
        check_table("left pairing", &pairing, size * size, semigroup.order())?;
        Ok(LeftSet {
            semigroup,
            size,
            action,
            pairing,
        })
    }

    pub fn from_fns(
        semigroup: Arc<InverseSemigroup>,
        size: usize,
        act: impl Fn(usize, usize) -> usize,
        pair: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = semigroup.order();
        let action = (0..size * n).map(|i| act(i % n, i / n)).collect();
        let pairing = (0..size * size).map(|i| pair(i / size, i % size)).collect();
        LeftSet::new(semigroup, size, action, pairing)
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// s·u
    #[inline]
    pub fn act(&self, s: usize, u: usize) -> usize {
        self.action[u * self.semigroup.order() + s]
    }

    #[inline]
    pub fn pair(&self, u: usize, v: usize) -> usize {
        self.pairing[u * self.size + v]
    }

    pub fn action(&self) -> &[usize] {
        &self.action
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn is_full(&self) -> bool {
        let mut hit = vec![false; self.semigroup.order()];
        for &p in &self.pairing {
            hit[p] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// The same data read as a right S-set: u·s := s*·u, pairing unchanged.
    /// A left set is regular (inverse) iff this right set is.
    pub fn to_right(&self) -> RightSet {
        let s = &self.semigroup;
        RightSet::from_fns(
            s.clone(),
            self.size,
            |u, t| self.act(s.inv(t), u),
            |a, b| self.pair(a, b),
        )
        .expect("shapes preserved")
    }
}

/// Action law, (R-i), (R-ii), (R-iii), with every failing instance.
pub fn check_right_regular(u: &RightSet) -> AxiomReport {
    let t = u.semigroup();
    let mut r = AxiomReport::default();
    for x in u.elements() {
        for a in t.elements() {
            for b in t.elements() {
                if u.act(u.act(x, a), b) != u.act(x, t.mul(a, b)) {
                    r.record("action-law", vec![x, a, b]);
                }
            }
        }
    }
    for x in u.elements() {
        for y in u.elements() {
            for a in t.elements() {
                if u.pair(x, u.act(y, a)) != t.mul(u.pair(x, y), a) {
                    r.record("R-i", vec![x, y, a]);
                }
            }
        }
    }
    for x in u.elements() {
        for y in u.elements() {
            if t.inv(u.pair(x, y)) != u.pair(y, x) {
                r.record("R-ii", vec![x, y]);
            }
        }
    }
    for x in u.elements() {
        if u.act(x, u.pair(x, x)) != x {
            r.record("R-iii", vec![x]);
        }
    }
    r
}

/// Action law, (L-i), (L-ii), (L-iii).
pub fn check_left_regular(l: &LeftSet) -> AxiomReport {
    let s = l.semigroup();
    let mut r = AxiomReport::default();
    for x in l.elements() {
        for a in s.elements() {
            for b in s.elements() {
                if l.act(b, l.act(a, x)) != l.act(s.mul(b, a), x) {
                    r.record("action-law", vec![b, a, x]);
                }
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            for a in s.elements() {
                if l.pair(l.act(a, x), y) != s.mul(a, l.pair(x, y)) {
                    r.record("L-i", vec![a, x, y]);
                }
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            if s.inv(l.pair(x, y)) != l.pair(y, x) {
                r.record("L-ii", vec![x, y]);
            }
        }
    }
    for x in l.elements() {
        if l.act(l.pair(x, x), x) != x {
            r.record("L-iii", vec![x]);
        }
    }
    r
}

/// Failing pairs for each of the four equivalent forms of the inverse axiom:
/// the (R-iv) implication, cancellation from ⟨u|u⟩ = ⟨u'|u'⟩ = ⟨u|u'⟩,
/// the identity u⟨u|u'⟩ = u'⟨u'|u⟩⟨u|u'⟩, and commutation of ω_{u,u} with ω_{u',u'}.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InverseConditions {
    pub implication: Vec<(usize, usize)>,
    pub cancellation: Vec<(usize, usize)>,
    pub identity: Vec<(usize, usize)>,
    pub commutation: Vec<(usize, usize)>,
}

impl InverseConditions {
    pub fn verdicts(&self) -> [bool; 4] {
        [
            self.implication.is_empty(),
            self.cancellation.is_empty(),
            self.identity.is_empty(),
            self.commutation.is_empty(),
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }

    pub fn is_inverse(&self) -> bool {
        self.implication.is_empty()
    }
}

/// Evaluates the four conditions independently, without asserting anything.
pub fn inverse_conditions(u: &RightSet) -> InverseConditions {
    let t = u.semigroup();
    let mut c = InverseConditions::default();
    for x in u.elements() {
        for y in u.elements() {
            if x != y && u.act(x, u.pair(y, x)) == x && u.act(y, u.pair(x, y)) == y {
                c.implication.push((x, y));
            }
            let p = u.pair(x, y);
            if x != y && u.pair(x, x) == u.pair(y, y) && u.pair(y, y) == p {
                c.cancellation.push((x, y));
            }
            if u.act(x, p) != u.act(y, t.mul(u.pair(y, x), p)) {
                c.identity.push((x, y));
            }
            if x < y
                && u
                    .elements()
                    .any(|z| u.omega(x, x, u.omega(y, y, z)) != u.omega(y, y, u.omega(x, x, z)))
            {
                c.commutation.push((x, y));
            }
        }
    }
    c
}

/// Decides whether a regular right set is inverse, asserting that the four
/// equivalent conditions agree.
pub fn check_right_inverse(u: &RightSet) -> Result<InverseConditions> {
    let regular = check_right_regular(u);
    if !regular.passed() {
        return Err(Error::NotRegularSet(regular));
    }
    let c = inverse_conditions(u);
    if !c.agree() {
        return Err(Error::Inconsistency(format!(
            "inverse-axiom forms disagree: {:?}",
            c.verdicts()
        )));
    }
    Ok(c)
}

pub fn check_left_inverse(l: &LeftSet) -> Result<InverseConditions> {
    let regular = check_left_regular(l);
    if !regular.passed() {
        return Err(Error::NotRegularSet(regular));
    }
    check_right_inverse(&l.to_right())
}

/// Ok when `u` is a right inverse set, otherwise an error naming the failure.
pub fn require_inverse(u: &RightSet) -> Result<()> {
    let c = check_right_inverse(u)?;
    if c.is_inverse() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!(
            "set is regular but not inverse, (R-iv) fails at {:?}",
            c.implication[0]
        )))
    }
}
