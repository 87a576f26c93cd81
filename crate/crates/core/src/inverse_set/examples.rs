use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{LeftSet, PartialMoritaEquivalence, RightSet};
use crate::error::{Error, Result};
use crate::semigroup::{
    compose_partial, invert_partial, partial_bijections, subsemigroup, symmetric_inverse_monoid,
    InverseSemigroup, PartialMap,
};

/// T as a right T-set: u·t = ut, ⟨a|b⟩ = a*b.
pub fn semigroup_as_right_set(t: &Arc<InverseSemigroup>) -> RightSet {
    RightSet::from_fns(t.clone(), t.order(), |x, a| t.mul(x, a), |a, b| t.mul(t.inv(a), b))
        .expect("shapes are correct")
}

/// S as a left S-set: s·u = su, ⟨a|b⟩ = ab*.
pub fn semigroup_as_left_set(s: &Arc<InverseSemigroup>) -> LeftSet {
    LeftSet::from_fns(s.clone(), s.order(), |a, x| s.mul(a, x), |a, b| s.mul(a, s.inv(b)))
        .expect("shapes are correct")
}

/// Restriction of `u` to a subset closed under the action, re-indexed in
/// increasing order. Returns the set and the inclusion map.
pub fn restrict_to_closed(u: &RightSet, members: &[usize]) -> Result<(RightSet, Vec<usize>)> {
    let mut emb = members.to_vec();
    emb.sort_unstable();
    emb.dedup();
    let mut index = vec![usize::MAX; u.size()];
    for (i, &x) in emb.iter().enumerate() {
        index[x] = i;
    }
    for &x in &emb {
        for t in u.semigroup().elements() {
            if index[u.act(x, t)] == usize::MAX {
                return Err(Error::PreconditionFailed(format!(
                    "subset not closed: {x}·{t} leaves it"
                )));
            }
        }
    }
    let set = RightSet::from_fns(
        u.semigroup().clone(),
        emb.len(),
        |i, t| index[u.act(emb[i], t)],
        |i, j| u.pair(emb[i], emb[j]),
    )?;
    Ok((set, emb))
}

/// The biset TS for an inverse subsemigroup T of S with TST ⊆ T.
///
/// Left semigroup is T re-indexed (sorted members), right semigroup is S.
pub fn enlargement_set(s: &Arc<InverseSemigroup>, t_sub: &[usize]) -> Result<PartialMoritaEquivalence> {
    let (t, emb) = subsemigroup(s, t_sub)
        .map_err(|e| Error::PreconditionFailed(format!("not an inverse subsemigroup: {e}")))?;
    let mut in_t = vec![usize::MAX; s.order()];
    for (i, &x) in emb.iter().enumerate() {
        in_t[x] = i;
    }
    for &a in &emb {
        for b in s.elements() {
            for &c in &emb {
                let p = s.mul3(a, b, c);
                if in_t[p] == usize::MAX {
                    return Err(Error::PreconditionFailed(format!(
                        "TST is not inside T: {a}*{b}*{c} = {p}"
                    )));
                }
            }
        }
    }
    let mut carrier: Vec<usize> = emb
        .iter()
        .flat_map(|&a| s.elements().map(move |b| (a, b)))
        .map(|(a, b)| s.mul(a, b))
        .collect();
    carrier.sort_unstable();
    carrier.dedup();
    let mut idx = vec![usize::MAX; s.order()];
    for (i, &x) in carrier.iter().enumerate() {
        idx[x] = i;
    }
    let t = Arc::new(t);
    let m = carrier.len();
    let left = LeftSet::from_fns(
        t.clone(),
        m,
        |a, u| idx[s.mul(emb[a], carrier[u])],
        |u, v| in_t[s.mul(carrier[u], s.inv(carrier[v]))],
    )?;
    let right = RightSet::from_fns(
        s.clone(),
        m,
        |u, b| idx[s.mul(carrier[u], b)],
        |u, v| s.mul(s.inv(carrier[u]), carrier[v]),
    )?;
    if left.action().contains(&usize::MAX) || left.pairing().contains(&usize::MAX) {
        return Err(Error::Inconsistency("enlargement tables left the carrier".into()));
    }
    PartialMoritaEquivalence::new(left, right)
}

/// Disjoint union of two right sets over a semigroup with zero, glued at
/// their zero elements. Cross pairings are zero.
///
/// Elements of `u` keep their indices; non-zero elements of `v` follow in order.
pub fn direct_sum(u: &RightSet, v: &RightSet) -> Result<RightSet> {
    if u.semigroup() != v.semigroup() {
        return Err(Error::PreconditionFailed("sets over different semigroups".into()));
    }
    let s = u.semigroup();
    let z = s.zero().ok_or(Error::NoZero)?;
    if u.size() == 0 || v.size() == 0 {
        return Err(Error::PreconditionFailed("direct sum needs nonempty sets".into()));
    }
    let zero_of = |w: &RightSet| -> Result<usize> {
        let z0 = w.act(0, z);
        if w.elements().any(|x| w.act(x, z) != z0) {
            return Err(Error::Inconsistency("u·0 is not constant".into()));
        }
        Ok(z0)
    };
    let (zu, zv) = (zero_of(u)?, zero_of(v)?);
    let m = u.size();
    let mut v_index = vec![zu; v.size()];
    let mut next = m;
    for y in v.elements() {
        if y != zv {
            v_index[y] = next;
            next += 1;
        }
    }
    let mut v_of = vec![None; next];
    for y in v.elements() {
        if y != zv {
            v_of[v_index[y]] = Some(y);
        }
    }
    // the glued zero lies in u; its pairing with itself is z either way
    RightSet::from_fns(
        s.clone(),
        next,
        |x, t| match v_of[x] {
            Some(y) => v_index[v.act(y, t)],
            None => u.act(x, t),
        },
        |a, b| match (v_of[a], v_of[b]) {
            (None, None) => u.pair(a, b),
            (Some(x), Some(y)) => v.pair(x, y),
            (None, Some(y)) if a == zu => v.pair(zv, y),
            (Some(x), None) if b == zu => v.pair(x, zv),
            _ => z,
        },
    )
}

/// A presheaf of sets over a semilattice E: sets U_e and restriction maps
/// σ_{e,f}: U_f → U_e for e ≤ f.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presheaf {
    pub parts: Vec<usize>,
    pub restrictions: BTreeMap<(usize, usize), Vec<usize>>,
}

/// The left inverse E-set built from a presheaf: f·u = σ_{fe,e}(u) and
/// ⟨u1|u2⟩ the largest g with σ_{g,e1}(u1) = σ_{g,e2}(u2).
pub fn presheaf_set(e: &Arc<InverseSemigroup>, p: &Presheaf) -> Result<LeftSet> {
    if e.idempotents().len() != e.order() {
        return Err(Error::PreconditionFailed("semigroup is not a semilattice".into()));
    }
    if p.parts.len() != e.order() {
        return Err(Error::PreconditionFailed("one part per idempotent is required".into()));
    }
    let sigma = |g: usize, f: usize| -> Result<&Vec<usize>> {
        let m = p.restrictions.get(&(g, f)).ok_or_else(|| {
            Error::PreconditionFailed(format!("missing restriction ({g}, {f})"))
        })?;
        if m.len() != p.parts[f] || m.iter().any(|&x| x >= p.parts[g]) {
            return Err(Error::PreconditionFailed(format!("restriction ({g}, {f}) has the wrong shape")));
        }
        Ok(m)
    };
    for f in e.elements() {
        if sigma(f, f)?.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::ConditionFails {
                condition: "i",
                witness: vec![f],
            });
        }
    }
    for a in e.elements() {
        for b in e.elements() {
            for c in e.elements() {
                if !(e.leq(a, b) && e.leq(b, c)) {
                    continue;
                }
                let (ab, bc, ac) = (sigma(a, b)?, sigma(b, c)?, sigma(a, c)?);
                if let Some(x) = (0..p.parts[c]).find(|&x| ab[bc[x]] != ac[x]) {
                    return Err(Error::ConditionFails {
                        condition: "ii",
                        witness: vec![a, b, c, x],
                    });
                }
            }
        }
    }
    let mut offset = Vec::with_capacity(e.order());
    let mut owner = Vec::new();
    for f in e.elements() {
        offset.push(owner.len());
        owner.extend((0..p.parts[f]).map(|i| (f, i)));
    }
    let m = owner.len();
    let mut pairing = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            let ((e1, i1), (e2, i2)) = (owner[x], owner[y]);
            let agree: Vec<usize> = e
                .elements()
                .filter(|&g| e.leq(g, e1) && e.leq(g, e2))
                .filter(|&g| sigma(g, e1).map(|s| s[i1]).ok() == sigma(g, e2).map(|s| s[i2]).ok())
                .collect();
            let top = agree.iter().copied().find(|&g| agree.iter().all(|&h| e.leq(h, g)));
            match top {
                Some(g) => pairing[x * m + y] = g,
                None => {
                    return Err(Error::ConditionFails {
                        condition: "iii",
                        witness: vec![x, y],
                    })
                }
            }
        }
    }
    let mut action = vec![0; m * e.order()];
    for x in 0..m {
        let (f0, i) = owner[x];
        for f in e.elements() {
            let g = e.mul(f, f0);
            action[x * e.order() + f] = offset[g] + sigma(g, f0)?[i];
        }
    }
    LeftSet::new(e.clone(), m, action, pairing)
}

/// Partial bijections X → Y as a biset from I(Y) to I(X).
pub fn partial_bijection_biset(nx: usize, ny: usize) -> Result<PartialMoritaEquivalence> {
    if nx > 3 || ny > 3 {
        return Err(Error::SizeLimit(format!("I({nx},{ny}) exceeds sizes <= 3")));
    }
    let carrier = partial_bijections(nx, ny);
    let iy_elems = partial_bijections(ny, ny);
    let ix_elems = partial_bijections(nx, nx);
    let lookup = |v: &[PartialMap]| -> HashMap<PartialMap, usize> {
        v.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect()
    };
    let (ci, yi, xi) = (lookup(&carrier), lookup(&iy_elems), lookup(&ix_elems));
    let iy = Arc::new(symmetric_inverse_monoid(ny)?);
    let ix = Arc::new(symmetric_inverse_monoid(nx)?);
    let m = carrier.len();
    let left = LeftSet::from_fns(
        iy,
        m,
        |s, u| ci[&compose_partial(&iy_elems[s], &carrier[u])],
        |a, b| yi[&compose_partial(&carrier[a], &invert_partial(&carrier[b], ny))],
    )?;
    let right = RightSet::from_fns(
        ix,
        m,
        |u, t| ci[&compose_partial(&carrier[u], &ix_elems[t])],
        |a, b| xi[&compose_partial(&invert_partial(&carrier[a], ny), &carrier[b])],
    )?;
    PartialMoritaEquivalence::new(left, right)
}
