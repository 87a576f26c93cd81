use super::{recognize_inverse, InverseSemigroup, MulTable};
use crate::error::{Error, Result};

/// A two-sided ideal, kept as a sorted member list plus a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedIdeal {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl TwoSidedIdeal {
    /// Validates that `members` is closed under multiplication by `s` on both sides.
    pub fn new(s: &InverseSemigroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; s.order()];
        for m in members {
            if m >= s.order() {
                return Err(Error::PreconditionFailed(format!("{m} is not an element")));
            }
            mask[m] = true;
        }
        let ideal = Self::from_mask(mask);
        for &m in &ideal.members {
            for x in s.elements() {
                if !ideal.mask[s.mul(x, m)] || !ideal.mask[s.mul(m, x)] {
                    return Err(Error::NotIdeal(format!(
                        "member {m} times {x} leaves the set"
                    )));
                }
            }
        }
        Ok(ideal)
    }

    pub fn whole(s: &InverseSemigroup) -> Self {
        Self::from_mask(vec![true; s.order()])
    }

    fn from_mask(mask: Vec<bool>) -> Self {
        let members = (0..mask.len()).filter(|&i| mask[i]).collect();
        TwoSidedIdeal { members, mask }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, s: usize) -> bool {
        self.mask.get(s).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Least two-sided ideal containing `seed`.
pub fn ideal_closure(s: &InverseSemigroup, seed: &[usize]) -> TwoSidedIdeal {
    let mut mask = vec![false; s.order()];
    let mut stack: Vec<usize> = Vec::new();
    for &x in seed {
        if !mask[x] {
            mask[x] = true;
            stack.push(x);
        }
    }
    while let Some(m) = stack.pop() {
        for x in s.elements() {
            for y in [s.mul(x, m), s.mul(m, x)] {
                if !mask[y] {
                    mask[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    TwoSidedIdeal::from_mask(mask)
}

/// `s t = s' t` for all t in I forces s = s'.
pub fn is_essential_ideal(s: &InverseSemigroup, ideal: &TwoSidedIdeal) -> bool {
    separates(s, ideal, |a, t| s.mul(a, t))
}

/// `t s = t s'` for all t in I forces s = s'.
pub fn is_essential_ideal_left(s: &InverseSemigroup, ideal: &TwoSidedIdeal) -> bool {
    separates(s, ideal, |a, t| s.mul(t, a))
}

fn separates(s: &InverseSemigroup, ideal: &TwoSidedIdeal, prod: impl Fn(usize, usize) -> usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    s.elements().all(|a| {
        let row: Vec<usize> = ideal.members().iter().map(|&t| prod(a, t)).collect();
        seen.insert(row)
    })
}

/// Extracts an inverse subsemigroup, re-indexed by the sorted member order.
/// Returns the semigroup and the embedding (new index -> old index).
pub fn subsemigroup(s: &InverseSemigroup, members: &[usize]) -> Result<(InverseSemigroup, Vec<usize>)> {
    let mut emb: Vec<usize> = members.to_vec();
    emb.sort_unstable();
    emb.dedup();
    let mut index = vec![usize::MAX; s.order()];
    for (i, &m) in emb.iter().enumerate() {
        if m >= s.order() {
            return Err(Error::NotSubsemigroup(format!("{m} is not an element")));
        }
        index[m] = i;
    }
    let k = emb.len();
    let mut cells = Vec::with_capacity(k * k);
    for &a in &emb {
        for &b in &emb {
            let p = s.mul(a, b);
            if index[p] == usize::MAX {
                return Err(Error::NotSubsemigroup(format!("{a}*{b} = {p} is outside")));
            }
            cells.push(index[p]);
        }
    }
    for &a in &emb {
        if index[s.inv(a)] == usize::MAX {
            return Err(Error::NotSubsemigroup(format!("inverse of {a} is outside")));
        }
    }
    let sub = recognize_inverse(MulTable::new(k, cells)?)?;
    for (i, &a) in emb.iter().enumerate() {
        if emb[sub.inv(i)] != s.inv(a) {
            return Err(Error::Inconsistency(format!(
                "inverse of {a} differs inside the subsemigroup"
            )));
        }
    }
    let name = if s.name().is_empty() {
        String::new()
    } else {
        format!("{}|{:?}", s.name(), emb)
    };
    Ok((sub.with_name(name), emb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn closure_examples() {
        let e2 = fixtures::e2();
        assert!(ideal_closure(&e2, &[]).is_empty());
        assert_eq!(ideal_closure(&e2, &[1]).members(), &[0, 1]);
        let z2 = fixtures::z2();
        assert_eq!(ideal_closure(&z2, &[1]).members(), &[0, 1]);
        let b2 = fixtures::b2();
        // any non-zero element generates everything in the Brandt semigroup
        assert_eq!(ideal_closure(&b2, &[2]).len(), 5);
        assert_eq!(ideal_closure(&b2, &[0]).members(), &[0]);
    }

    #[test]
    fn essential_examples() {
        let e2 = fixtures::e2();
        let zero = TwoSidedIdeal::new(&e2, [0]).unwrap();
        assert!(!is_essential_ideal(&e2, &zero));
        assert!(!is_essential_ideal_left(&e2, &zero));
        let z2 = fixtures::z2();
        assert!(is_essential_ideal(&z2, &TwoSidedIdeal::whole(&z2)));
        for s in fixtures::all() {
            let whole = TwoSidedIdeal::whole(&s);
            assert!(is_essential_ideal(&s, &whole), "{}", s.name());
            assert!(is_essential_ideal_left(&s, &whole), "{}", s.name());
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let e2 = fixtures::e2();
        assert!(matches!(TwoSidedIdeal::new(&e2, [1]), Err(Error::NotIdeal(_))));
    }

    #[test]
    fn subsemigroup_of_i2() {
        let i2 = fixtures::i2();
        // 0 is the empty map, 5 the identity, 6 the swap
        let (sub, emb) = subsemigroup(&i2, &[5, 0]).unwrap();
        assert_eq!(emb, vec![0, 5]);
        assert_eq!(sub.table().cells(), &[0, 0, 0, 1]);
        let (group, _) = subsemigroup(&i2, &[5, 6]).unwrap();
        assert!(group.is_group());
        // {0->0} composed after {0->1} is empty
        assert!(matches!(subsemigroup(&i2, &[1, 2]), Err(Error::NotSubsemigroup(_))));
    }
}
