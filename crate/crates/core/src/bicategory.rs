//! The bicategory of inverse semigroups and non-degenerate correspondences:
//! unitors, associators and their coherence, opposite bisets, and the
//! equivalence between Morita equivalences and invertible 1-arrows.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::adjointable::{k_semigroup, rank_one};
use crate::correspondence::{
    check_correspondence_map, recover_partial_morita, tensor, tensor_map, InverseCorrespondence, Tensor,
};
use crate::error::{Error, Result};
use crate::inverse_set::{check_partial_morita, LeftSet, PartialMoritaEquivalence, RightSet};
use crate::semigroup::InverseSemigroup;

/// Ũ: the opposite partial Morita equivalence T → S on the same indices,
/// with t·ũ = (ut*)~, ũ·s = (s*u)~ and the pairings swapped.
pub fn opposite(m: &PartialMoritaEquivalence) -> Result<PartialMoritaEquivalence> {
    let s = m.left_semigroup();
    let t = m.right_semigroup();
    let left = LeftSet::from_fns(
        t.clone(),
        m.size(),
        |x, u| m.right_act(u, t.inv(x)),
        |u1, u2| m.right_pair(u1, u2),
    )?;
    let right = RightSet::from_fns(
        s.clone(),
        m.size(),
        |u, x| m.left_act(s.inv(x), u),
        |u1, u2| m.left_pair(u1, u2),
    )?;
    PartialMoritaEquivalence::new(left, right)
}

fn require_iso(
    src: &InverseCorrespondence,
    dst: &InverseCorrespondence,
    map: &[usize],
    what: &str,
) -> Result<()> {
    let r = check_correspondence_map(src, dst, map)?;
    if !r.passed() {
        return Err(Error::Inconsistency(format!("{what} is not a correspondence map: {r}")));
    }
    if !is_bijection(map, dst.size()) {
        return Err(Error::Inconsistency(format!("{what} is not bijective")));
    }
    Ok(())
}

fn is_bijection(map: &[usize], target: usize) -> bool {
    map.len() == target && is_surjection(map, target)
}

fn is_surjection(map: &[usize], target: usize) -> bool {
    let mut hit = vec![false; target];
    for &y in map {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Evaluates `f` on every member of every class, requiring agreement.
fn class_map(t: &Tensor, f: impl Fn(usize, usize) -> usize, what: &str) -> Result<Vec<usize>> {
    let mut map = Vec::with_capacity(t.size());
    for c in 0..t.size() {
        let (u, v) = t.rep(c);
        let value = f(u, v);
        if t.members(c).any(|(a, b)| f(a, b) != value) {
            return Err(Error::Inconsistency(format!("{what} is not well defined on classes")));
        }
        map.push(value);
    }
    Ok(map)
}

/// T as a Morita equivalence from T to T, with ⟨s|t⟩ = st* on the left.
pub fn identity_biset(t: &Arc<InverseSemigroup>) -> PartialMoritaEquivalence {
    let n = t.order();
    InverseCorrespondence::identity(t)
        .with_left_pairing((0..n * n).map(|k| t.mul(k / n, t.inv(k % n))).collect())
        .expect("pairing table fits")
}

/// ρ: U ⊗ T → U, u ⊗ t ↦ ut. Returns the tensor and the verified isomorphism.
pub fn right_unitor(c: &InverseCorrespondence) -> Result<(Tensor, Vec<usize>)> {
    let id = InverseCorrespondence::identity(c.right_semigroup());
    let t = tensor(c, &id)?;
    let map = class_map(&t, |u, x| c.right_act(u, x), "right unitor")?;
    require_iso(t.correspondence(), c, &map, "right unitor")?;
    Ok((t, map))
}

/// λ: S ⊗ U → U, s ⊗ u ↦ su. Requires U non-degenerate.
pub fn left_unitor(c: &InverseCorrespondence) -> Result<(Tensor, Vec<usize>)> {
    if !c.is_non_degenerate() {
        return Err(Error::Degenerate);
    }
    let id = InverseCorrespondence::identity(c.left_semigroup());
    let t = tensor(&id, c)?;
    let map = class_map(&t, |x, u| c.left_act(x, u), "left unitor")?;
    require_iso(t.correspondence(), c, &map, "left unitor")?;
    Ok((t, map))
}

/// α: U1 ⊗ (U2 ⊗ U3) → (U1 ⊗ U2) ⊗ U3 with every tensor involved.
#[derive(Clone, Debug)]
pub struct Associator {
    /// U2 ⊗ U3
    pub inner_right: Tensor,
    /// U1 ⊗ (U2 ⊗ U3)
    pub source: Tensor,
    /// U1 ⊗ U2
    pub inner_left: Tensor,
    /// (U1 ⊗ U2) ⊗ U3
    pub target: Tensor,
    pub map: Vec<usize>,
}

pub fn associator(
    c1: &InverseCorrespondence,
    c2: &InverseCorrespondence,
    c3: &InverseCorrespondence,
) -> Result<Associator> {
    let inner_right = tensor(c2, c3)?;
    let source = tensor(c1, inner_right.correspondence())?;
    let inner_left = tensor(c1, c2)?;
    let target = tensor(inner_left.correspondence(), c3)?;
    let mut map = Vec::with_capacity(source.size());
    for k in 0..source.size() {
        let mut value = None;
        for (u1, w) in source.members(k) {
            for (u2, u3) in inner_right.members(w) {
                let y = target.class(inner_left.class(u1, u2), u3);
                if *value.get_or_insert(y) != y {
                    return Err(Error::Inconsistency("associator is not well defined".into()));
                }
            }
        }
        map.push(value.expect("classes are nonempty"));
    }
    require_iso(source.correspondence(), target.correspondence(), &map, "associator")?;
    Ok(Associator {
        inner_right,
        source,
        inner_left,
        target,
        map,
    })
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// (ρ_{U1} ⊗ id) ∘ α_{U1,T,U2} == id ⊗ λ_{U2} on U1 ⊗ (T ⊗ U2).
pub fn check_triangle(c1: &InverseCorrespondence, c2: &InverseCorrespondence) -> Result<bool> {
    let id_t = InverseCorrespondence::identity(c1.right_semigroup());
    let a = associator(c1, &id_t, c2)?;
    let (_, rho) = right_unitor(c1)?;
    let (_, lambda) = left_unitor(c2)?;
    let plain = tensor(c1, c2)?;
    let rho_id = tensor_map(&a.target, &plain, &rho, &identity(c2.size()))?;
    let id_lambda = tensor_map(&a.source, &plain, &identity(c1.size()), &lambda)?;
    Ok(compose(&rho_id, &a.map) == id_lambda)
}

/// The pentagon from U1⊗(U2⊗(U3⊗U4)) to ((U1⊗U2)⊗U3)⊗U4.
pub fn check_pentagon(
    c1: &InverseCorrespondence,
    c2: &InverseCorrespondence,
    c3: &InverseCorrespondence,
    c4: &InverseCorrespondence,
) -> Result<bool> {
    let t34 = tensor(c3, c4)?;
    let t12 = tensor(c1, c2)?;
    // top path: α_{U1⊗U2,U3,U4} ∘ α_{U1,U2,U3⊗U4}
    let a1 = associator(c1, c2, t34.correspondence())?;
    let a2 = associator(t12.correspondence(), c3, c4)?;
    let top = compose(&a2.map, &a1.map);
    // bottom path: (α_{U1,U2,U3} ⊗ id) ∘ α_{U1,U2⊗U3,U4} ∘ (id ⊗ α_{U2,U3,U4})
    let a234 = associator(c2, c3, c4)?;
    let t1_a = tensor(c1, a234.target.correspondence())?;
    let id_a234 = tensor_map(&a1.source, &t1_a, &identity(c1.size()), &a234.map)?;
    let a_mid = associator(c1, a234.inner_left.correspondence(), c4)?;
    let a123 = associator(c1, c2, c3)?;
    let a123_id = tensor_map(&a_mid.target, &a2.target, &a123.map, &identity(c4.size()))?;
    let bottom = compose(&a123_id, &compose(&a_mid.map, &id_a234));
    Ok(top == bottom)
}

/// Naturality of ρ and λ along a correspondence map σ: U → U'.
pub fn check_unitor_naturality(
    c: &InverseCorrespondence,
    c_prime: &InverseCorrespondence,
    sigma: &[usize],
) -> Result<bool> {
    let (tr, rho) = right_unitor(c)?;
    let (tr2, rho2) = right_unitor(c_prime)?;
    let n_t = c.right_semigroup().order();
    let s_id = tensor_map(&tr, &tr2, sigma, &identity(n_t))?;
    let right_ok = compose(sigma, &rho) == compose(&rho2, &s_id);
    if !c.is_non_degenerate() || !c_prime.is_non_degenerate() {
        return Ok(right_ok);
    }
    let (tl, lambda) = left_unitor(c)?;
    let (tl2, lambda2) = left_unitor(c_prime)?;
    let n_s = c.left_semigroup().order();
    let id_s = tensor_map(&tl, &tl2, &identity(n_s), sigma)?;
    Ok(right_ok && compose(sigma, &lambda) == compose(&lambda2, &id_s))
}

/// Naturality of α along correspondence maps σi: Ui → Ui'.
pub fn check_associator_naturality(
    cs: [&InverseCorrespondence; 3],
    cs_prime: [&InverseCorrespondence; 3],
    sigmas: [&[usize]; 3],
) -> Result<bool> {
    let a = associator(cs[0], cs[1], cs[2])?;
    let b = associator(cs_prime[0], cs_prime[1], cs_prime[2])?;
    let s23 = tensor_map(&a.inner_right, &b.inner_right, sigmas[1], sigmas[2])?;
    let left = tensor_map(&a.source, &b.source, sigmas[0], &s23)?;
    let s12 = tensor_map(&a.inner_left, &b.inner_left, sigmas[0], sigmas[1])?;
    let right = tensor_map(&a.target, &b.target, &s12, sigmas[2])?;
    Ok(compose(&b.map, &left) == compose(&right, &a.map))
}

/// Outcome of the Morita decision procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MoritaVerdict {
    Morita,
    /// Comes from a partial Morita equivalence, but not a Morita one.
    PartialOnly(String),
    Neither(String),
}

impl fmt::Display for MoritaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoritaVerdict::Morita => write!(f, "MORITA"),
            MoritaVerdict::PartialOnly(why) => write!(f, "PARTIAL_ONLY ({why})"),
            MoritaVerdict::Neither(why) => write!(f, "NEITHER ({why})"),
        }
    }
}

/// Decides whether `c` comes from a Morita equivalence: θ must be an
/// isomorphism S → K(U) and U right full.
pub fn check_morita(c: &InverseCorrespondence) -> Result<MoritaVerdict> {
    let s = c.left_semigroup();
    let k = k_semigroup(c.right_set())?;
    let images: Vec<Option<usize>> = s.elements().map(|a| k.index_of(&c.theta(a))).collect();
    let failure = if images.iter().any(Option::is_none) {
        Some("θ(S) is not contained in K(U)".to_string())
    } else {
        let mut hit: Vec<usize> = images.iter().map(|x| x.expect("checked")).collect();
        hit.sort_unstable();
        let injective = hit.windows(2).all(|w| w[0] != w[1]);
        hit.dedup();
        if !injective {
            Some("θ is not injective".to_string())
        } else if hit.len() != k.order() {
            Some("θ(S) is not all of K(U)".to_string())
        } else if !c.right_set().is_full() {
            Some("U is not right full".to_string())
        } else {
            None
        }
    };
    let Some(why) = failure else {
        return Ok(MoritaVerdict::Morita);
    };
    match recover_partial_morita(c) {
        Ok(_) => Ok(MoritaVerdict::PartialOnly(why)),
        Err(Error::NotPartialMorita(reason)) => Ok(MoritaVerdict::Neither(format!("{why}; {reason}"))),
        Err(e) => Err(e),
    }
}

/// [`check_morita`] on a checked biset, cross-checked against fullness of both pairings.
pub fn check_morita_biset(m: &PartialMoritaEquivalence) -> Result<MoritaVerdict> {
    let report = check_partial_morita(m)?;
    if !report.passed() {
        return Err(Error::NotPartialMorita(report.to_string()));
    }
    let verdict = check_morita(&InverseCorrespondence::from_partial_morita(m))?;
    if (verdict == MoritaVerdict::Morita) != m.is_morita() {
        return Err(Error::Inconsistency(format!(
            "verdict {verdict} disagrees with fullness of both pairings"
        )));
    }
    if matches!(verdict, MoritaVerdict::Neither(_)) {
        return Err(Error::Inconsistency("a checked biset has no partial Morita structure".into()));
    }
    Ok(verdict)
}

/// U: S → T and V: T → S with ι1: U ⊗ V → S and ι2: V ⊗ U → T.
#[derive(Clone, Debug)]
pub struct EquivalenceCertificate {
    pub u: InverseCorrespondence,
    pub v: InverseCorrespondence,
    pub uv: Tensor,
    pub vu: Tensor,
    pub iota1: Vec<usize>,
    pub iota2: Vec<usize>,
}

/// Builds V = Ũ, ι1(u' ⊗ ũ) = ⟨u'|u⟩_left and ι2(ũ ⊗ u') = ⟨u|u'⟩_right,
/// without requiring the ι to be surjective.
pub fn candidate_certificate(m: &PartialMoritaEquivalence) -> Result<EquivalenceCertificate> {
    let u = InverseCorrespondence::from_partial_morita(m);
    let v = InverseCorrespondence::from_partial_morita(&opposite(m)?);
    let uv = tensor(&u, &v)?;
    let vu = tensor(&v, &u)?;
    let iota1 = class_map(&uv, |a, b| m.left_pair(a, b), "ι1")?;
    let iota2 = class_map(&vu, |a, b| m.right_pair(a, b), "ι2")?;
    let s_id = InverseCorrespondence::identity(m.left_semigroup());
    let t_id = InverseCorrespondence::identity(m.right_semigroup());
    for (t, map, target, what) in [(&uv, &iota1, &s_id, "ι1"), (&vu, &iota2, &t_id, "ι2")] {
        let r = check_correspondence_map(t.correspondence(), target, map)?;
        if !r.passed() {
            return Err(Error::Inconsistency(format!("{what} is not a correspondence map: {r}")));
        }
    }
    Ok(EquivalenceCertificate {
        u,
        v,
        uv,
        vu,
        iota1,
        iota2,
    })
}

/// The certificate of a Morita equivalence; NOT_MORITA if either ι misses
/// part of its target.
pub fn morita_to_certificate(m: &PartialMoritaEquivalence) -> Result<EquivalenceCertificate> {
    let cert = candidate_certificate(m)?;
    if !is_surjection(&cert.iota1, m.left_semigroup().order()) {
        return Err(Error::NotMorita("ι1 is not surjective: U is not left full".into()));
    }
    if !is_surjection(&cert.iota2, m.right_semigroup().order()) {
        return Err(Error::NotMorita("ι2 is not surjective: U is not right full".into()));
    }
    Ok(cert)
}

/// Checks both ι are surjective correspondence maps onto the identity correspondences.
pub fn verify_certificate(cert: &EquivalenceCertificate) -> Result<()> {
    let s = cert.u.left_semigroup();
    let t = cert.u.right_semigroup();
    if cert.v.left_semigroup() != t || cert.v.right_semigroup() != s {
        return Err(Error::CertInvalid("V does not run from T to S".into()));
    }
    let s_id = InverseCorrespondence::identity(s);
    let t_id = InverseCorrespondence::identity(t);
    for (tensor, map, target, what) in [
        (&cert.uv, &cert.iota1, &s_id, "ι1: U⊗V → S"),
        (&cert.vu, &cert.iota2, &t_id, "ι2: V⊗U → T"),
    ] {
        if map.len() != tensor.size() || map.iter().any(|&x| x >= target.size()) {
            return Err(Error::CertInvalid(format!("{what} does not fit its carriers")));
        }
        let r = check_correspondence_map(tensor.correspondence(), target, map)?;
        if !r.passed() {
            return Err(Error::CertInvalid(format!("{what} is not a correspondence map: {r}")));
        }
        if !is_surjection(map, target.size()) {
            return Err(Error::CertInvalid(format!("{what} is not surjective")));
        }
    }
    Ok(())
}

/// Recovers the Morita equivalence on U from a verified certificate.
///
/// Φ: V → U is solved from ⟨Φ(v)|u⟩ = ι2(v ⊗ u); then the left pairing is
/// ⟨Φ(v1)|Φ(v2)⟩ := ⟨v1|v2⟩_V.
pub fn certificate_to_morita(cert: &EquivalenceCertificate) -> Result<PartialMoritaEquivalence> {
    if !cert.u.is_non_degenerate() || !cert.v.is_non_degenerate() {
        return Err(Error::Degenerate);
    }
    verify_certificate(cert)?;
    let (u, v) = (&cert.u, &cert.v);
    let mut phi = Vec::with_capacity(v.size());
    for y in v.elements() {
        let candidates: Vec<usize> = u
            .elements()
            .filter(|&x0| u.elements().all(|x| u.pair(x0, x) == cert.iota2[cert.vu.class(y, x)]))
            .collect();
        match candidates.as_slice() {
            [x0] => phi.push(*x0),
            [] => return Err(Error::CertInvalid(format!("Φ has no value at {y}"))),
            _ => return Err(Error::CertInvalid(format!("Φ has several values at {y}"))),
        }
    }
    if !is_surjection(&phi, u.size()) {
        return Err(Error::CertInvalid("Φ is not surjective".into()));
    }
    let s = u.left_semigroup();
    let thetas: Vec<Vec<usize>> = s.elements().map(|a| u.theta(a)).collect();
    for a in s.elements() {
        for b in 0..a {
            if thetas[a] == thetas[b] {
                return Err(Error::CertInvalid(format!("θ_U identifies {b} and {a}")));
            }
        }
    }
    let mut preimage = vec![usize::MAX; u.size()];
    for (y, &x) in phi.iter().enumerate() {
        if preimage[x] == usize::MAX {
            preimage[x] = y;
        }
    }
    let mut pairing = Vec::with_capacity(u.size() * u.size());
    for u1 in u.elements() {
        for u2 in u.elements() {
            let value = v.pair(preimage[u1], preimage[u2]);
            let omega = rank_one(u.right_set(), u.right_set(), u1, u2);
            if thetas[value] != omega.fwd {
                return Err(Error::CertInvalid(format!(
                    "θ(⟨v1|v2⟩) differs from ω at ({u1},{u2})"
                )));
            }
            pairing.push(value);
        }
    }
    let m = u.with_left_pairing(pairing)?;
    if check_morita_biset(&m)? != MoritaVerdict::Morita {
        return Err(Error::Inconsistency(
            "a certificate produced a structure that is not Morita".into(),
        ));
    }
    Ok(m)
}
