use std::sync::Arc;

use super::{
    check_left_regular, check_right_regular, inverse_conditions, AxiomReport,
    LeftSet, RightSet,
};
use crate::error::{Error, Result};
use crate::semigroup::InverseSemigroup;

/// An S-T biset with a left pairing into S and a right pairing into T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMoritaEquivalence {
    left: LeftSet,
    right: RightSet,
}

impl PartialMoritaEquivalence {
    pub fn new(left: LeftSet, right: RightSet) -> Result<Self> {
        if left.size() != right.size() {
            return Err(Error::InvalidTable(format!(
                "left carrier has {} elements, right carrier {}",
                left.size(),
                right.size()
            )));
        }
        Ok(PartialMoritaEquivalence { left, right })
    }

    pub fn from_tables(
        left_semigroup: Arc<InverseSemigroup>,
        right_semigroup: Arc<InverseSemigroup>,
        size: usize,
        left_action: Vec<usize>,
        right_action: Vec<usize>,
        left_pairing: Vec<usize>,
        right_pairing: Vec<usize>,
    ) -> Result<Self> {
        let left = LeftSet::new(left_semigroup, size, left_action, left_pairing)?;
        let right = RightSet::new(right_semigroup, size, right_action, right_pairing)?;
        PartialMoritaEquivalence::new(left, right)
    }

    pub fn left_set(&self) -> &LeftSet {
        &self.left
    }

    pub fn right_set(&self) -> &RightSet {
        &self.right
    }

    pub fn left_semigroup(&self) -> &Arc<InverseSemigroup> {
        self.left.semigroup()
    }

    pub fn right_semigroup(&self) -> &Arc<InverseSemigroup> {
        self.right.semigroup()
    }

    pub fn size(&self) -> usize {
        self.right.size()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn left_act(&self, s: usize, u: usize) -> usize {
        self.left.act(s, u)
    }

    pub fn right_act(&self, u: usize, t: usize) -> usize {
        self.right.act(u, t)
    }

    pub fn left_pair(&self, u: usize, v: usize) -> usize {
        self.left.pair(u, v)
    }

    pub fn right_pair(&self, u: usize, v: usize) -> usize {
        self.right.pair(u, v)
    }

    pub fn is_left_full(&self) -> bool {
        self.left.is_full()
    }

    pub fn is_right_full(&self) -> bool {
        self.right.is_full()
    }

    /// Both pairings full.
    pub fn is_morita(&self) -> bool {
        self.is_left_full() && self.is_right_full()
    }
}

/// Biset law, compatibility and both regularity suites.
///
/// When all of these pass, both sides must be inverse; a failure there is
/// reported as an inconsistency rather than a violation.
pub fn check_partial_morita(m: &PartialMoritaEquivalence) -> Result<AxiomReport> {
    let s = m.left_semigroup();
    let t = m.right_semigroup();
    let mut r = AxiomReport::default();
    for u in m.elements() {
        for a in s.elements() {
            for b in t.elements() {
                if m.left_act(a, m.right_act(u, b)) != m.right_act(m.left_act(a, u), b) {
                    r.record("biset-law", vec![a, u, b]);
                }
            }
        }
    }
    for u in m.elements() {
        for v in m.elements() {
            for w in m.elements() {
                if m.left_act(m.left_pair(u, v), w) != m.right_act(u, m.right_pair(v, w)) {
                    r.record("compatibility", vec![u, v, w]);
                }
            }
        }
    }
    r.absorb("left ", check_left_regular(m.left_set()));
    r.absorb("right ", check_right_regular(m.right_set()));
    if r.passed() {
        let left = inverse_conditions(&m.left_set().to_right());
        let right = inverse_conditions(m.right_set());
        if !left.is_inverse() || !right.is_inverse() || !left.agree() || !right.agree() {
            return Err(Error::Inconsistency(
                "a partial Morita context failed the inverse axiom".into(),
            ));
        }
    }
    Ok(r)
}
