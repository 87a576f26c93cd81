//! Multiplier semigroups, realized concretely as M(S) = L(S), together with
//! extension of non-degenerate homomorphisms, idealizers, and the
//! identification M(K(U)) ≅ L(U).

use std::sync::Arc;

use crate::adjointable::{adjoint_of, k_semigroup, l_semigroup, MapSemigroup};
use crate::correspondence::InverseCorrespondence;
use crate::error::{Error, Result};
use crate::inverse_set::{semigroup_as_right_set, RightSet};
use crate::semigroup::{
    check_hom, find_isomorphism, homomorphisms, is_essential_ideal, InverseSemigroup, TwoSidedIdeal,
};

/// M(S) = L(S-as-set) with the embedding λ: s ↦ λ_s.
#[derive(Clone, Debug)]
pub struct MultiplierSemigroup {
    base: Arc<InverseSemigroup>,
    carrier: MapSemigroup,
    embedding: Vec<usize>,
}

impl MultiplierSemigroup {
    pub fn base(&self) -> &Arc<InverseSemigroup> {
        &self.base
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        self.carrier.semigroup()
    }

    pub fn carrier(&self) -> &MapSemigroup {
        &self.carrier
    }

    /// λ as indices into the carrier.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    pub fn ideal(&self) -> TwoSidedIdeal {
        TwoSidedIdeal::new(self.semigroup(), self.embedding.iter().copied())
            .expect("λ(S) was checked to be an ideal")
    }
}

/// Builds M(S) and checks that λ is an injective homomorphism onto an
/// essential ideal and that M(S) has an identity.
pub fn multiplier(s: &Arc<InverseSemigroup>, budget: u64) -> Result<MultiplierSemigroup> {
    let carrier = l_semigroup(&semigroup_as_right_set(s), budget)?;
    let m = carrier.semigroup();
    let embedding: Vec<usize> = s
        .elements()
        .map(|a| {
            let fwd: Vec<usize> = s.elements().map(|x| s.mul(a, x)).collect();
            carrier.index_of(&fwd).expect("left translations are adjointable")
        })
        .collect();
    if !check_hom(s, m, &embedding) {
        return Err(Error::Inconsistency("λ is not a homomorphism".into()));
    }
    let mut image = embedding.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != s.order() {
        return Err(Error::Inconsistency("λ is not injective".into()));
    }
    let ideal = TwoSidedIdeal::new(m, image)
        .map_err(|e| Error::Inconsistency(format!("λ(S) is not an ideal of M(S): {e}")))?;
    if !is_essential_ideal(m, &ideal) {
        return Err(Error::Inconsistency("λ(S) is not essential in M(S)".into()));
    }
    if m.identity().is_none() {
        return Err(Error::Inconsistency("M(S) has no identity".into()));
    }
    Ok(MultiplierSemigroup {
        base: s.clone(),
        carrier,
        embedding,
    })
}

fn require_ideal_embedding(sup: &InverseSemigroup, s: &InverseSemigroup, inc: &[usize]) -> Result<Vec<usize>> {
    if inc.len() != s.order() || inc.iter().any(|&x| x >= sup.order()) || !check_hom(s, sup, inc) {
        return Err(Error::InvalidMap("inclusion is not a homomorphism".into()));
    }
    let mut pos = vec![usize::MAX; sup.order()];
    for (i, &x) in inc.iter().enumerate() {
        if pos[x] != usize::MAX {
            return Err(Error::InvalidMap("inclusion is not injective".into()));
        }
        pos[x] = i;
    }
    TwoSidedIdeal::new(sup, inc.iter().copied())?;
    Ok(pos)
}

/// Extends θ: S → L(U) (the left action of `c`) to θ̃: S̃ → L(U), where
/// `inc` embeds S as a two-sided ideal of `sup`:
/// θ̃(s0)(θ(s)u) := θ(s0 s)(u). Returns θ̃(s0) as a map table for each s0.
pub fn extend_hom(sup: &InverseSemigroup, inc: &[usize], c: &InverseCorrespondence) -> Result<Vec<Vec<usize>>> {
    let s = c.left_semigroup();
    let pos = require_ideal_embedding(sup, s, inc)?;
    if !c.is_non_degenerate() {
        return Err(Error::NotNonDegenerate);
    }
    let mut out = Vec::with_capacity(sup.order());
    for s0 in sup.elements() {
        let mut map = vec![usize::MAX; c.size()];
        for a in s.elements() {
            let prod = pos[sup.mul(s0, inc[a])];
            for u in c.elements() {
                let x = c.left_act(a, u);
                let y = c.left_act(prod, u);
                if map[x] == usize::MAX {
                    map[x] = y;
                } else if map[x] != y {
                    return Err(Error::Inconsistency(format!(
                        "extension at {s0} is not well defined at {x}"
                    )));
                }
            }
        }
        out.push(map);
    }
    for (s0, map) in out.iter().enumerate() {
        let adj = adjoint_of(c.right_set(), c.right_set(), map)?;
        if adj.as_deref() != Some(out[sup.inv(s0)].as_slice()) {
            return Err(Error::Inconsistency(format!(
                "extension at {s0} is not adjointable with adjoint at its inverse"
            )));
        }
    }
    for a in sup.elements() {
        for b in sup.elements() {
            let composite: Vec<usize> = out[b].iter().map(|&x| out[a][x]).collect();
            if composite != out[sup.mul(a, b)] {
                return Err(Error::Inconsistency("extension is not a homomorphism".into()));
            }
        }
    }
    for a in s.elements() {
        if out[inc[a]] != c.theta(a) {
            return Err(Error::Inconsistency("extension does not restrict to θ".into()));
        }
    }
    Ok(out)
}

/// Number of homomorphisms S̃ → L(U) restricting to θ, by brute force.
/// Fails with `SizeLimit` when more than `limit` homomorphisms exist.
pub fn count_extensions(
    sup: &InverseSemigroup,
    inc: &[usize],
    c: &InverseCorrespondence,
    budget: u64,
    limit: usize,
) -> Result<usize> {
    let l = l_semigroup(c.right_set(), budget)?;
    let theta: Vec<usize> = c
        .left_semigroup()
        .elements()
        .map(|a| l.index_of(&c.theta(a)).expect("θ(s) is adjointable"))
        .collect();
    let all = homomorphisms(sup, l.semigroup(), limit + 1);
    if all.len() > limit {
        return Err(Error::SizeLimit(format!("more than {limit} homomorphisms")));
    }
    Ok(all
        .iter()
        .filter(|h| inc.iter().zip(&theta).all(|(&x, &t)| h[x] == t))
        .count())
}

/// The idealizer {s | sU ⊆ U, Us ⊆ U} of a subsemigroup U.
pub fn idealizer(l: &InverseSemigroup, members: &[usize]) -> Result<Vec<usize>> {
    let mut mask = vec![false; l.order()];
    for &m in members {
        if m >= l.order() {
            return Err(Error::NotSubsemigroup(format!("{m} is not an element")));
        }
        mask[m] = true;
    }
    for &a in members {
        for &b in members {
            if !mask[l.mul(a, b)] {
                return Err(Error::NotSubsemigroup(format!("{a}*{b} leaves the set")));
            }
        }
    }
    Ok(l
        .elements()
        .filter(|&s| members.iter().all(|&u| mask[l.mul(s, u)] && mask[l.mul(u, s)]))
        .collect())
}

/// Witness that M(K(U)) ≅ L(U).
#[derive(Clone, Debug)]
pub struct KasparovWitness {
    /// Isomorphism from M(K(U)) (indices of L(K(U)-as-set)) to L(U), extending K ↪ L(U).
    pub iso: Vec<usize>,
    pub l_order: usize,
    pub k_order: usize,
}

/// Extends the inclusion K(U) ↪ L(U) along λ: K(U) → M(K(U)) and checks the
/// result is an isomorphism onto L(U), which is the idealizer of K(U).
/// An abstract isomorphism search cross-checks the conclusion.
pub fn verify_kasparov(u: &RightSet, budget: u64) -> Result<KasparovWitness> {
    let l = l_semigroup(u, budget)?;
    let k = k_semigroup(u)?;
    let mk = multiplier(k.semigroup(), budget)?;
    let c = InverseCorrespondence::from_fn(k.semigroup().clone(), u.clone(), |a, x| k.map(a).apply(x))?;
    let ext = extend_hom(mk.semigroup(), mk.embedding(), &c)?;
    let iso: Vec<usize> = ext
        .iter()
        .map(|m| {
            l.index_of(m)
                .ok_or_else(|| Error::Inconsistency("extension leaves L(U)".into()))
        })
        .collect::<Result<_>>()?;
    let mut sorted = iso.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != l.order() || iso.len() != l.order() {
        return Err(Error::Inconsistency(format!(
            "extension M(K(U)) → L(U) is not bijective ({} → {})",
            iso.len(),
            l.order()
        )));
    }
    if !check_hom(mk.semigroup(), l.semigroup(), &iso) {
        return Err(Error::Inconsistency("extension is not a homomorphism".into()));
    }
    let k_in_l: Vec<usize> = k.maps().iter().map(|m| l.index_of(&m.fwd).expect("K ⊆ L")).collect();
    if idealizer(l.semigroup(), &k_in_l)?.len() != l.order() {
        return Err(Error::Inconsistency("idealizer of K(U) is not all of L(U)".into()));
    }
    if find_isomorphism(mk.semigroup(), l.semigroup()).is_none() {
        return Err(Error::Inconsistency("isomorphism search disagrees with the extension".into()));
    }
    Ok(KasparovWitness {
        iso,
        l_order: l.order(),
        k_order: k.order(),
    })
}
