//! The inverse set U_p of a partial McAlister function and the round trips
//! U ↦ p_U ↦ U_{p_U} and IM(T, I, p) ≅ K(U_p).

use std::collections::HashMap;

use super::{inverse_rees, mcalister_from_set, require_equivalence, InverseRees, PartialMcAlisterFunction, ReesElement};
use crate::adjointable::k_semigroup;
use crate::error::{Error, Result};
use crate::inverse_set::{check_map, check_partial_morita, LeftSet, MapKind, PartialMoritaEquivalence, RightSet};
use crate::quotient::Partition;
use crate::semigroup::{check_hom, InverseSemigroup};

/// U_p = {(j, t) | p_jj t = t} / ∼ as a partial Morita equivalence from
/// IM(T, I, p) to T.
#[derive(Clone, Debug)]
pub struct UpSet {
    im: InverseRees,
    pairs: Vec<(usize, usize)>,
    partition: Partition,
    morita: PartialMoritaEquivalence,
}

impl UpSet {
    pub fn inverse_rees(&self) -> &InverseRees {
        &self.im
    }

    pub fn morita(&self) -> &PartialMoritaEquivalence {
        &self.morita
    }

    pub fn right_set(&self) -> &RightSet {
        self.morita.right_set()
    }

    pub fn size(&self) -> usize {
        self.partition.num_classes()
    }

    /// Class [j, t], if (j, t) is admissible.
    pub fn class_of(&self, j: usize, t: usize) -> Option<usize> {
        self.pairs.binary_search(&(j, t)).ok().map(|n| self.partition.class_of(n))
    }

    /// Smallest (j, t) in a class.
    pub fn label(&self, class: usize) -> (usize, usize) {
        self.pairs[self.partition.rep(class)]
    }

    fn members(&self, class: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partition.classes()[class].iter().map(|&n| self.pairs[n])
    }
}

/// Requires every representative combination to give the same defined value.
fn agree<I: Iterator<Item = Option<usize>>>(what: &str, mut values: I) -> Result<usize> {
    let first = values.next().flatten().ok_or_else(|| Error::Inconsistency(format!("{what} is undefined")))?;
    for v in values {
        if v != Some(first) {
            return Err(Error::Inconsistency(format!("{what} is not well defined")));
        }
    }
    Ok(first)
}

/// Builds U_p with its right T-structure and left IM-structure, and asserts
/// that it is a left full partial Morita equivalence (right full too when
/// p satisfies (MF5)).
pub fn inverse_set_from_p(pm: &PartialMcAlisterFunction, budget: u64) -> Result<UpSet> {
    let im = inverse_rees(pm, budget)?;
    let t = pm.semigroup().clone();
    let mut pairs = Vec::new();
    for j in 0..pm.index_size() {
        for x in t.elements() {
            if t.mul(pm.p(j, j), x) == x {
                pairs.push((j, x));
            }
        }
    }
    let related = |a: usize, b: usize| {
        let ((j1, t1), (j2, t2)) = (pairs[a], pairs[b]);
        t1 == t.mul(pm.p(j1, j2), t2) && t2 == t.mul(pm.p(j2, j1), t1)
    };
    let partition = require_equivalence("∼", pairs.len(), related)?;
    let mut up = UpSet {
        im,
        pairs,
        partition,
        morita: PartialMoritaEquivalence::new(
            LeftSet::new(t.clone(), 0, Vec::new(), Vec::new())?,
            RightSet::empty(t.clone()),
        )?,
    };
    let n = up.size();
    let s = up.im.semigroup().clone();

    let mut right_action = vec![0; n * t.order()];
    let mut right_pairing = vec![0; n * n];
    let mut left_action = vec![0; n * s.order()];
    let mut left_pairing = vec![0; n * n];
    for c in 0..n {
        for y in t.elements() {
            right_action[c * t.order() + y] = agree(
                "right action",
                up.members(c).map(|(j, x)| up.class_of(j, t.mul(x, y))),
            )?;
        }
        for d in 0..n {
            // ⟨[j2, t2] | [j1, t1]⟩ = t2* p_{j2 j1} t1 with [j2, t2] = c
            right_pairing[c * n + d] = agree(
                "right pairing",
                up.members(c).flat_map(|(j2, t2)| {
                    let t = &t;
                    up.members(d).map(move |(j1, t1)| Some(t.mul3(t.inv(t2), pm.p(j2, j1), t1)))
                }),
            )?;
            left_pairing[c * n + d] = agree(
                "left pairing",
                up.members(c).flat_map(|(j2, t2)| {
                    let (t, up) = (&t, &up);
                    up.members(d).map(move |(j1, t1)| {
                        up.im.class_of(ReesElement { j: j2, t: t.mul(t2, t.inv(t1)), i: j1 })
                    })
                }),
            )?;
        }
    }
    let rm = up.im.regular().elements();
    for a in s.elements() {
        let triples: Vec<ReesElement> = up.im.gamma().classes()[a].iter().map(|&x| rm[x]).collect();
        for c in 0..n {
            // the left action layout is u·|S| + s
            left_action[c * s.order() + a] = agree(
                "left action",
                triples.iter().flat_map(|e| {
                    let (t, up) = (&t, &up);
                    up.members(c)
                        .map(move |(j1, t1)| up.class_of(e.j, t.mul3(e.t, pm.p(e.i, j1), t1)))
                }),
            )?;
        }
    }
    up.morita = PartialMoritaEquivalence::from_tables(
        s.clone(),
        t.clone(),
        n,
        left_action,
        right_action,
        left_pairing,
        right_pairing,
    )?;
    let report = check_partial_morita(&up.morita)?;
    if !report.passed() {
        return Err(Error::Inconsistency(format!("U_p is not a partial Morita equivalence: {report}")));
    }
    for e in rm {
        let lhs = up.morita.left_pair(
            up.class_of(e.j, e.t).expect("admissible"),
            up.class_of(e.i, t.mul(t.inv(e.t), e.t)).expect("admissible"),
        );
        if Some(lhs) != up.im.class_of(*e) {
            return Err(Error::Inconsistency(format!("left fullness witness fails at {e:?}")));
        }
    }
    if !up.morita.is_left_full() {
        return Err(Error::Inconsistency("U_p is not left full".into()));
    }
    if pm.is_full() && !up.morita.is_right_full() {
        return Err(Error::Inconsistency("U_p is not right full under (MF5)".into()));
    }
    Ok(up)
}

fn require_bijective_hom(s: &InverseSemigroup, t: &InverseSemigroup, map: &[usize], what: &str) -> Result<()> {
    let mut seen = vec![false; t.order()];
    for &x in map {
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::Inconsistency(format!("{what} is not injective")));
        }
    }
    if map.len() != t.order() {
        return Err(Error::Inconsistency(format!("{what} is not surjective")));
    }
    if !check_hom(s, t, map) {
        return Err(Error::Inconsistency(format!("{what} is not a homomorphism")));
    }
    Ok(())
}

/// The left action IM(T, I, p) → K(U_p), checked to be an isomorphism.
pub fn im_to_k(up: &UpSet) -> Result<Vec<usize>> {
    let k = k_semigroup(up.right_set())?;
    let m = up.morita();
    let iso = m
        .left_semigroup()
        .elements()
        .map(|a| {
            let fwd: Vec<usize> = m.elements().map(|x| m.left_act(a, x)).collect();
            k.index_of(&fwd)
                .ok_or_else(|| Error::Inconsistency(format!("IM element {a} does not act compactly")))
        })
        .collect::<Result<Vec<_>>>()?;
    require_bijective_hom(m.left_semigroup(), k.semigroup(), &iso, "IM → K(U_p)")?;
    Ok(iso)
}

/// Witnesses for the round trips of a right inverse set U.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    /// [u, t] ↦ u·t, from U_{p_U} onto U.
    pub set_iso: Vec<usize>,
    /// IM(T, U, p_U) → K(U_{p_U}).
    pub im_iso: Vec<usize>,
    /// IM(T, U, p_U) → K(U), composing `im_iso` with conjugation by `set_iso`.
    pub chain: Vec<usize>,
}

/// Verifies U_{p_U} ≅ U through [u, t] ↦ u·t, IM(T, U, p_U) ≅ K(U_{p_U}),
/// and the composite IM(T, U, p_U) ≅ K(U).
pub fn roundtrip_checks(u: &RightSet, budget: u64) -> Result<RoundTrip> {
    let pm = mcalister_from_set(u)?;
    let up = inverse_set_from_p(&pm, budget)?;
    let set_iso = (0..up.size())
        .map(|c| agree("[u, t] ↦ u·t", up.members(c).map(|(x, t)| Some(u.act(x, t)))))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; u.size()];
    for &x in &set_iso {
        seen[x] = true;
    }
    if set_iso.len() != u.size() || seen.iter().any(|&b| !b) {
        return Err(Error::Inconsistency("[u, t] ↦ u·t is not bijective".into()));
    }
    let report = check_map(up.right_set(), u, &set_iso, MapKind::Both)?;
    if !report.passed() {
        return Err(Error::Inconsistency(format!("[u, t] ↦ u·t is not an isomorphism: {report}")));
    }

    let im_iso = im_to_k(&up)?;
    let kp = k_semigroup(up.right_set())?;
    let ku = k_semigroup(u)?;
    let mut back = vec![0; u.size()];
    for (c, &x) in set_iso.iter().enumerate() {
        back[x] = c;
    }
    let conj: Vec<usize> = kp
        .maps()
        .iter()
        .map(|f| {
            let fwd: Vec<usize> = u.elements().map(|x| set_iso[f.apply(back[x])]).collect();
            ku.index_of(&fwd)
                .ok_or_else(|| Error::Inconsistency("conjugate of a compact map is not compact".into()))
        })
        .collect::<Result<_>>()?;
    require_bijective_hom(kp.semigroup(), ku.semigroup(), &conj, "K(U_p) → K(U)")?;
    let chain: Vec<usize> = im_iso.iter().map(|&k| conj[k]).collect();
    require_bijective_hom(up.inverse_rees().semigroup(), ku.semigroup(), &chain, "IM → K(U)")?;
    Ok(RoundTrip { set_iso, im_iso, chain })
}

/// For a Morita equivalence from S to T, an isomorphism IM(T, U, p_U) → S.
pub fn recover_from_morita(m: &PartialMoritaEquivalence, budget: u64) -> Result<Vec<usize>> {
    if !m.is_morita() {
        return Err(Error::NotMorita("pairings are not both full".into()));
    }
    let u = m.right_set();
    let rt = roundtrip_checks(u, budget)?;
    let ku = k_semigroup(u)?;
    let s = m.left_semigroup();
    let mut of_k: HashMap<usize, usize> = HashMap::new();
    for a in s.elements() {
        let fwd: Vec<usize> = m.elements().map(|x| m.left_act(a, x)).collect();
        let k = ku
            .index_of(&fwd)
            .ok_or_else(|| Error::Inconsistency(format!("{a} does not act compactly")))?;
        if of_k.insert(k, a).is_some() {
            return Err(Error::Inconsistency("left action of S is not injective".into()));
        }
    }
    let pm = mcalister_from_set(u)?;
    let im = inverse_rees(&pm, budget)?;
    let iso = rt
        .chain
        .iter()
        .map(|k| of_k.get(k).copied().ok_or_else(|| Error::Inconsistency("K(U) is larger than S".into())))
        .collect::<Result<Vec<_>>>()?;
    require_bijective_hom(im.semigroup(), s, &iso, "IM(T, U, p_U) → S")?;
    Ok(iso)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;

    use super::*;
    use crate::adjointable::{morita_from_set, DEFAULT_BUDGET};
    use crate::fixtures;
    use crate::inverse_set::generate::random_regular_sets;
    use crate::inverse_set::{inverse_conditions, partial_bijection_biset, semigroup_as_right_set};
    use crate::rees::check_mcalister;

    #[test]
    fn chain_instance_has_two_classes() {
        let pm = check_mcalister(&Arc::new(fixtures::e2()), &[vec![1]]).unwrap();
        let up = inverse_set_from_p(&pm, DEFAULT_BUDGET).unwrap();
        assert_eq!(up.size(), 2);
        assert!(up.morita().is_morita());
        let iso = im_to_k(&up).unwrap();
        assert_eq!(iso.len(), 2);
    }

    #[test]
    fn partial_function_is_only_left_full() {
        // p = [[0]] over E2 misses the idempotent 1
        let pm = check_mcalister(&Arc::new(fixtures::e2()), &[vec![0]]).unwrap();
        let up = inverse_set_from_p(&pm, DEFAULT_BUDGET).unwrap();
        assert!(up.morita().is_left_full());
        assert!(!up.morita().is_right_full());
        im_to_k(&up).unwrap();
    }

    #[test]
    fn round_trips_on_fixtures() {
        for s in fixtures::all() {
            let u = semigroup_as_right_set(&Arc::new(s));
            let rt = roundtrip_checks(&u, DEFAULT_BUDGET).unwrap();
            assert_eq!(rt.set_iso.len(), u.size());
        }
    }

    #[test]
    fn round_trip_on_empty_set() {
        let u = RightSet::empty(Arc::new(fixtures::i2()));
        let rt = roundtrip_checks(&u, DEFAULT_BUDGET).unwrap();
        assert!(rt.set_iso.is_empty() && rt.chain.is_empty());
    }

    #[test]
    fn round_trips_on_generated_sets() {
        let i2 = Arc::new(fixtures::i2());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for u in random_regular_sets(&i2, &mut rng, 30, 5) {
            if inverse_conditions(&u).is_inverse() {
                roundtrip_checks(&u, DEFAULT_BUDGET).unwrap();
            }
        }
    }

    #[test]
    fn morita_partner_is_recovered() {
        let b2 = Arc::new(fixtures::b2());
        let m = morita_from_set(&semigroup_as_right_set(&b2)).unwrap();
        recover_from_morita(&m, DEFAULT_BUDGET).unwrap();
        let m = partial_bijection_biset(2, 2).unwrap();
        recover_from_morita(&m, DEFAULT_BUDGET).unwrap();
        let m = partial_bijection_biset(1, 2).unwrap();
        assert!(matches!(recover_from_morita(&m, DEFAULT_BUDGET), Err(Error::NotMorita(_))));
    }
}
