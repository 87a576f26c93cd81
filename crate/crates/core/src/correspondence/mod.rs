//! Inverse correspondences S → T: a right inverse T-set with a left S-action
//! by adjointable maps. Recovery of partial Morita structure, and tensor
//! products with their induced maps.

mod tensor;

use std::sync::Arc;

pub use tensor::{tensor, tensor_map, tensor_partial_morita, Tensor};

use crate::adjointable::k_semigroup;
use crate::error::{Error, Result};
use crate::inverse_set::{
    check_map, check_partial_morita, check_right_regular, restrict_to_closed, semigroup_as_right_set,
    AxiomReport, LeftSet, MapKind, PartialMoritaEquivalence, RightSet,
};
use crate::semigroup::{check_hom, InverseSemigroup, TwoSidedIdeal};

/// A right inverse T-set with a left action of S. The left action table is
/// laid out like [`LeftSet`]: entry `u * |S| + s` is `s·u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCorrespondence {
    left: Arc<InverseSemigroup>,
    right: RightSet,
    left_action: Vec<usize>,
}

impl InverseCorrespondence {
    pub fn new(left: Arc<InverseSemigroup>, right: RightSet, left_action: Vec<usize>) -> Result<Self> {
        if left_action.len() != right.size() * left.order()
            || left_action.iter().any(|&x| x >= right.size())
        {
            return Err(Error::InvalidTable(
                "left action table does not fit the carrier".into(),
            ));
        }
        Ok(InverseCorrespondence {
            left,
            right,
            left_action,
        })
    }

    pub fn from_fn(
        left: Arc<InverseSemigroup>,
        right: RightSet,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = left.order();
        let table = (0..right.size() * n).map(|i| act(i % n, i / n)).collect();
        InverseCorrespondence::new(left, right, table)
    }

    /// Forgets the left pairing.
    pub fn from_partial_morita(m: &PartialMoritaEquivalence) -> Self {
        InverseCorrespondence {
            left: m.left_semigroup().clone(),
            right: m.right_set().clone(),
            left_action: m.left_set().action().to_vec(),
        }
    }

    /// T as a correspondence from T to T.
    pub fn identity(t: &Arc<InverseSemigroup>) -> Self {
        let right = semigroup_as_right_set(t);
        InverseCorrespondence::from_fn(t.clone(), right, |s, u| t.mul(s, u))
            .expect("multiplication table fits")
    }

    pub fn left_semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.left
    }

    pub fn right_semigroup(&self) -> &Arc<InverseSemigroup> {
        self.right.semigroup()
    }

    pub fn right_set(&self) -> &RightSet {
        &self.right
    }

    pub fn left_action(&self) -> &[usize] {
        &self.left_action
    }

    pub fn size(&self) -> usize {
        self.right.size()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.right.elements()
    }

    pub fn left_act(&self, s: usize, u: usize) -> usize {
        self.left_action[u * self.left.order() + s]
    }

    pub fn right_act(&self, u: usize, t: usize) -> usize {
        self.right.act(u, t)
    }

    pub fn pair(&self, u: usize, v: usize) -> usize {
        self.right.pair(u, v)
    }

    /// θ(s) as a map table.
    pub fn theta(&self, s: usize) -> Vec<usize> {
        self.elements().map(|u| self.left_act(s, u)).collect()
    }

    /// SU = U.
    pub fn is_non_degenerate(&self) -> bool {
        let mut hit = vec![false; self.size()];
        for u in self.elements() {
            for s in self.left.elements() {
                hit[self.left_act(s, u)] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// Attaches a left pairing, giving a partial Morita equivalence (unchecked).
    pub fn with_left_pairing(&self, pairing: Vec<usize>) -> Result<PartialMoritaEquivalence> {
        let left = LeftSet::new(self.left.clone(), self.size(), self.left_action.clone(), pairing)?;
        PartialMoritaEquivalence::new(left, self.right.clone())
    }
}

/// Left action law, adjointability of each θ(s), mixed associativity, and
/// right regularity.
pub fn check_correspondence(c: &InverseCorrespondence) -> AxiomReport {
    let s = c.left_semigroup();
    let t = c.right_semigroup();
    let mut r = AxiomReport::default();
    for u in c.elements() {
        for a in s.elements() {
            for b in s.elements() {
                if c.left_act(b, c.left_act(a, u)) != c.left_act(s.mul(b, a), u) {
                    r.record("left-action-law", vec![b, a, u]);
                }
            }
            for v in c.elements() {
                if c.pair(v, c.left_act(a, u)) != c.pair(c.left_act(s.inv(a), v), u) {
                    r.record("adjointability", vec![a, u, v]);
                }
            }
            for x in t.elements() {
                if c.left_act(a, c.right_act(u, x)) != c.right_act(c.left_act(a, u), x) {
                    r.record("mixed-associativity", vec![a, u, x]);
                }
            }
        }
    }
    r.absorb("right ", check_right_regular(c.right_set()));
    r
}

/// U_θ = θ(S)T inside T, with left action θ(s)u. Also returns the embedding
/// of the carrier into T.
pub fn from_hom(
    s: &Arc<InverseSemigroup>,
    t: &Arc<InverseSemigroup>,
    theta: &[usize],
) -> Result<(InverseCorrespondence, Vec<usize>)> {
    if theta.len() != s.order() || theta.iter().any(|&x| x >= t.order()) || !check_hom(s, t, theta) {
        return Err(Error::InvalidMap("not a semigroup homomorphism".into()));
    }
    let mut members: Vec<usize> = s
        .elements()
        .flat_map(|a| t.elements().map(move |b| t.mul(theta[a], b)))
        .collect();
    members.sort_unstable();
    members.dedup();
    let (right, emb) = restrict_to_closed(&semigroup_as_right_set(t), &members)?;
    let mut pos = vec![usize::MAX; t.order()];
    for (i, &x) in emb.iter().enumerate() {
        pos[x] = i;
    }
    let c = InverseCorrespondence::from_fn(s.clone(), right, |a, u| pos[t.mul(theta[a], emb[u])])?;
    Ok((c, emb))
}

/// Recovers the unique partial Morita equivalence underlying `c`, together
/// with the ideal I of S on which θ is an isomorphism onto K(U).
///
/// If such an I exists, its element over ω ∈ K(U) lies below every element
/// of θ⁻¹(ω) in the natural order. So I is forced to be the set of fiber
/// minima, which this computes and then checks.
pub fn recover_partial_morita(
    c: &InverseCorrespondence,
) -> Result<(PartialMoritaEquivalence, TwoSidedIdeal)> {
    let s = c.left_semigroup();
    let k = k_semigroup(c.right_set())?;
    let mut preimage = vec![usize::MAX; k.order()];
    for (i, m) in k.maps().iter().enumerate() {
        let fiber: Vec<usize> = s.elements().filter(|&a| c.theta(a) == m.fwd).collect();
        if fiber.is_empty() {
            return Err(Error::NotPartialMorita(format!(
                "image mismatch: rank-one map {i} of K(U) is not in θ(S)"
            )));
        }
        preimage[i] = fiber
            .iter()
            .copied()
            .find(|&a| fiber.iter().all(|&b| s.leq(a, b)))
            .ok_or_else(|| {
                Error::NotPartialMorita(format!(
                    "no ideal: the fiber over rank-one map {i} has no least element"
                ))
            })?;
    }
    let ideal = TwoSidedIdeal::new(s, preimage.iter().copied()).map_err(|_| {
        Error::NotPartialMorita("no ideal: the fiber minima are not a two-sided ideal".into())
    })?;
    if ideal.len() != k.order() {
        return Err(Error::NotPartialMorita(
            "not injective: fiber minima coincide".into(),
        ));
    }
    let mut pairing = Vec::with_capacity(c.size() * c.size());
    for u1 in c.elements() {
        for u2 in c.elements() {
            let om = crate::adjointable::rank_one(c.right_set(), c.right_set(), u1, u2);
            pairing.push(preimage[k.index_of(&om.fwd).expect("ω lies in K(U)")]);
        }
    }
    let m = c.with_left_pairing(pairing)?;
    if !check_partial_morita(&m)?.passed() {
        return Err(Error::Inconsistency(
            "recovered left pairing fails the partial Morita axioms".into(),
        ));
    }
    Ok((m, ideal))
}

/// Checks that `map` is a right pairing preserving left S-map (and a right T-map).
pub fn check_correspondence_map(
    src: &InverseCorrespondence,
    dst: &InverseCorrespondence,
    map: &[usize],
) -> Result<AxiomReport> {
    if src.left_semigroup() != dst.left_semigroup() {
        return Err(Error::InvalidMap("correspondences from different semigroups".into()));
    }
    let mut r = check_map(src.right_set(), dst.right_set(), map, MapKind::Both)?;
    for u in src.elements() {
        for a in src.left_semigroup().elements() {
            if map[src.left_act(a, u)] != dst.left_act(a, map[u]) {
                r.record("left-map", vec![a, u]);
            }
        }
    }
    Ok(r)
}

/// Searches for a correspondence isomorphism `src -> dst`.
pub fn find_correspondence_isomorphism(
    src: &InverseCorrespondence,
    dst: &InverseCorrespondence,
) -> Result<Option<Vec<usize>>> {
    if src.size() != dst.size() || src.left_semigroup() != dst.left_semigroup() {
        return Ok(None);
    }
    let candidates = crate::inverse_set::all_set_isomorphisms(src.right_set(), dst.right_set())?;
    for map in candidates {
        if check_correspondence_map(src, dst, &map)?.passed() {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjointable::morita_from_set;
    use crate::fixtures;
    use crate::inverse_set::{enlargement_set, require_inverse};
    use crate::semigroup::homomorphisms;

    fn arc(s: InverseSemigroup) -> Arc<InverseSemigroup> {
        Arc::new(s)
    }

    #[test]
    fn partial_morita_forgets_to_correspondence() {
        let i2 = arc(fixtures::i2());
        let m = enlargement_set(&i2, &[0, 1]).unwrap();
        let c = InverseCorrespondence::from_partial_morita(&m);
        assert!(check_correspondence(&c).passed());
        assert!(c.is_non_degenerate());
    }

    #[test]
    fn non_hom_left_action_fails() {
        let z2 = arc(fixtures::z2());
        // the identity element swaps, so e·(e·u) != (ee)·u
        let c = InverseCorrespondence::from_fn(z2.clone(), semigroup_as_right_set(&z2), |s, u| {
            if s == 0 {
                1 - u
            } else {
                u
            }
        })
        .unwrap();
        let r = check_correspondence(&c);
        assert!(r.violates("left-action-law"));
    }

    #[test]
    fn degenerate_zero_action() {
        let e2 = arc(fixtures::e2());
        let c = InverseCorrespondence::from_fn(e2.clone(), semigroup_as_right_set(&e2), |_, _| 0).unwrap();
        assert!(check_correspondence(&c).passed());
        assert!(!c.is_non_degenerate());
        let empty = InverseCorrespondence::new(e2.clone(), RightSet::empty(e2), Vec::new()).unwrap();
        assert!(check_correspondence(&empty).passed());
        assert!(empty.is_non_degenerate());
    }

    #[test]
    fn from_identity_hom() {
        for s in fixtures::all() {
            let s = arc(s);
            let id: Vec<usize> = s.elements().collect();
            let (c, emb) = from_hom(&s, &s, &id).unwrap();
            assert_eq!(emb, id);
            assert_eq!(c, InverseCorrespondence::identity(&s));
            assert!(c.is_non_degenerate());
            let (m, ideal) = recover_partial_morita(&c).unwrap();
            assert_eq!(ideal.len(), s.order());
            assert!(m.is_morita());
        }
    }

    #[test]
    fn from_constant_idempotent() {
        let i2 = arc(fixtures::i2());
        let z2 = arc(fixtures::z2());
        // both elements of Z2 to the idempotent {0->0}
        let (c, emb) = from_hom(&z2, &i2, &[1, 1]).unwrap();
        let expect: Vec<usize> = {
            let mut v: Vec<usize> = i2.elements().map(|t| i2.mul(1, t)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        assert_eq!(emb, expect);
        assert!(c.is_non_degenerate());
        assert!(check_correspondence(&c).passed());
    }

    #[test]
    fn z2_into_i2() {
        let i2 = arc(fixtures::i2());
        let z2 = arc(fixtures::z2());
        let (c, emb) = from_hom(&z2, &i2, &[5, 6]).unwrap();
        assert_eq!(emb.len(), 7);
        assert!(check_correspondence(&c).passed());
        // θ(Z2) has only the units, K(I2) has all seven maps
        assert!(matches!(recover_partial_morita(&c), Err(Error::NotPartialMorita(_))));
    }

    #[test]
    fn homs_give_correspondences() {
        for s in fixtures::all() {
            for t in fixtures::all() {
                let (s, t) = (arc(s.clone()), arc(t));
                for h in homomorphisms(&s, &t, 50) {
                    let (c, _) = from_hom(&s, &t, &h).unwrap();
                    require_inverse(c.right_set()).unwrap();
                    assert!(check_correspondence(&c).passed());
                    assert!(c.is_non_degenerate());
                }
            }
        }
    }

    #[test]
    fn recover_from_set_morita() {
        let b2 = arc(fixtures::b2());
        let u = semigroup_as_right_set(&b2);
        let (v, _) = restrict_to_closed(&u, &[0, 1, 2]).unwrap();
        for set in [u, v] {
            let m = morita_from_set(&set).unwrap();
            let c = InverseCorrespondence::from_partial_morita(&m);
            let (back, ideal) = recover_partial_morita(&c).unwrap();
            assert_eq!(back, m);
            assert_eq!(ideal.len(), m.left_semigroup().order());
        }
    }

    #[test]
    fn non_injective_theta_is_rejected() {
        // Z2 acting trivially on the one-point E2-set {0}: θ(e) = θ(a) = id,
        // and the fiber {e, a} has no least element
        let e2 = arc(fixtures::e2());
        let z2 = arc(fixtures::z2());
        let (pt, _) = restrict_to_closed(&semigroup_as_right_set(&e2), &[0]).unwrap();
        let c = InverseCorrespondence::from_fn(z2, pt, |_, u| u).unwrap();
        assert!(check_correspondence(&c).passed());
        let err = recover_partial_morita(&c).unwrap_err();
        assert!(matches!(err, Error::NotPartialMorita(ref m) if m.contains("no ideal")), "{err}");
    }
}
