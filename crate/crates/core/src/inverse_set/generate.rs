//! Generators: closed subsets, regular-but-not-inverse duplications, random
//! families of regular sets, and exhaustive enumeration of small left inverse sets.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{
    check_left_regular, direct_sum, inverse_conditions, restrict_to_closed, semigroup_as_right_set,
    LeftSet, RightSet,
};
use crate::error::{Error, Result};
use crate::semigroup::InverseSemigroup;

/// Smallest subset containing `seed` and closed under the action.
pub fn closure(u: &RightSet, seed: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; u.size()];
    let mut stack: Vec<usize> = seed.to_vec();
    while let Some(x) = stack.pop() {
        if mask[x] {
            continue;
        }
        mask[x] = true;
        for t in u.semigroup().elements() {
            stack.push(u.act(x, t));
        }
    }
    (0..u.size()).filter(|&x| mask[x]).collect()
}

/// `u` together with `copies` extra copies of the closed subset `w`, every
/// element paired through its original. Regular, and not inverse as soon as
/// `w` is nonempty and `copies > 0`.
pub fn duplicate(u: &RightSet, w: &[usize], copies: usize) -> Result<RightSet> {
    if closure(u, w).len() != w.len() {
        return Err(Error::PreconditionFailed("duplicated subset is not closed".into()));
    }
    let m = u.size();
    let k = w.len();
    let mut pos = vec![usize::MAX; m];
    for (i, &x) in w.iter().enumerate() {
        pos[x] = i;
    }
    let base = |a: usize| if a < m { a } else { w[(a - m) % k] };
    RightSet::from_fns(
        u.semigroup().clone(),
        m + copies * k,
        |a, t| {
            if a < m {
                u.act(a, t)
            } else {
                let copy = (a - m) / k;
                m + copy * k + pos[u.act(base(a), t)]
            }
        },
        |a, b| u.pair(base(a), base(b)),
    )
}

/// A random family of right regular sets over `t`, each of size at most `max_size`.
///
/// The family mixes `t` itself, closed subsets, direct sums (when `t` has a
/// zero) and duplications, so both inverse and non-inverse sets occur.
pub fn random_regular_sets<R: Rng>(
    t: &Arc<InverseSemigroup>,
    rng: &mut R,
    count: usize,
    max_size: usize,
) -> Vec<RightSet> {
    let whole = semigroup_as_right_set(t);
    let mut pool: Vec<RightSet> = vec![whole.clone()];
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let base = pool.choose(rng).expect("pool is nonempty").clone();
        if base.size() == 0 {
            continue;
        }
        let candidate = match rng.gen_range(0..4) {
            0 => {
                let seeds: Vec<usize> = (0..rng.gen_range(1..=2))
                    .map(|_| rng.gen_range(0..base.size()))
                    .collect();
                restrict_to_closed(&base, &closure(&base, &seeds)).ok().map(|(s, _)| s)
            }
            1 => {
                let other = pool.choose(rng).expect("pool is nonempty");
                direct_sum(&base, other).ok()
            }
            2 => {
                let seed = rng.gen_range(0..base.size());
                let w = closure(&base, &[seed]);
                duplicate(&base, &w, rng.gen_range(1..=2)).ok()
            }
            _ => Some(base.clone()),
        };
        let Some(c) = candidate else { continue };
        if c.size() > max_size || c.size() == 0 {
            continue;
        }
        debug_assert!(super::check_right_regular(&c).passed());
        if inverse_conditions(&c).is_inverse() && pool.len() < 64 {
            pool.push(c.clone());
        }
        out.push(c);
    }
    out
}

struct LeftSearch<'a> {
    s: &'a InverseSemigroup,
    m: usize,
    nodes: u64,
    budget: u64,
}

impl LeftSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SizeLimit(format!(
                "left set enumeration exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    /// act[u * n + s] = s·u, filled in index order.
    fn actions(&mut self, act: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        self.tick()?;
        let n = self.s.order();
        let pos = act.len();
        if pos == self.m * n {
            out.push(act.clone());
            return Ok(());
        }
        for x in 0..self.m {
            act.push(x);
            if self.action_consistent(act) {
                self.actions(act, out)?;
            }
            act.pop();
        }
        Ok(())
    }

    /// Checks every law instance b·(a·w) = (ba)·w whose entries are all known.
    fn action_consistent(&self, act: &[usize]) -> bool {
        let n = self.s.order();
        let get = |s: usize, u: usize| act.get(u * n + s).copied();
        for w in 0..self.m {
            for a in self.s.elements() {
                let Some(aw) = get(a, w) else { continue };
                for b in self.s.elements() {
                    if let (Some(lhs), Some(rhs)) = (get(b, aw), get(self.s.mul(b, a), w)) {
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn pairings(&mut self, act: &[usize], pair: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        self.tick()?;
        if pair.len() == self.m * self.m {
            out.push(pair.clone());
            return Ok(());
        }
        for x in self.s.elements() {
            pair.push(x);
            if self.pairing_consistent(act, pair) {
                self.pairings(act, pair, out)?;
            }
            pair.pop();
        }
        Ok(())
    }

    fn pairing_consistent(&self, act: &[usize], pair: &[usize]) -> bool {
        let (s, m, n) = (self.s, self.m, self.s.order());
        let act = |a: usize, u: usize| act[u * n + a];
        let get = |u: usize, v: usize| pair.get(u * m + v).copied();
        let pos = pair.len() - 1;
        let (u, v, x) = (pos / m, pos % m, pair[pos]);
        if u == v && act(x, u) != u {
            return false;
        }
        if let Some(y) = get(v, u) {
            if s.inv(x) != y {
                return false;
            }
        }
        for a in s.elements() {
            if let Some(y) = get(act(a, u), v) {
                if y != s.mul(a, x) {
                    return false;
                }
            }
            for w in 0..m {
                if act(a, w) == u {
                    if let Some(y) = get(w, v) {
                        if x != s.mul(a, y) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Every left inverse S-set on the carrier `0..m` (all action and pairing
/// tables, not up to isomorphism). Fails with `SizeLimit` past `budget` nodes.
pub fn enumerate_left_inverse_sets(
    s: &Arc<InverseSemigroup>,
    m: usize,
    budget: u64,
) -> Result<Vec<LeftSet>> {
    let mut search = LeftSearch {
        s,
        m,
        nodes: 0,
        budget,
    };
    let mut actions = Vec::new();
    search.actions(&mut Vec::new(), &mut actions)?;
    let mut out = Vec::new();
    for act in actions {
        let mut pairings = Vec::new();
        search.pairings(&act, &mut Vec::new(), &mut pairings)?;
        for p in pairings {
            let l = LeftSet::new(s.clone(), m, act.clone(), p)?;
            if !check_left_regular(&l).passed() {
                return Err(Error::Inconsistency("search produced an irregular set".into()));
            }
            if inverse_conditions(&l.to_right()).is_inverse() {
                out.push(l);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::inverse_set::check_right_inverse;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn duplicate_breaks_inverse_axiom() {
        let e2 = Arc::new(fixtures::e2());
        let u = semigroup_as_right_set(&e2);
        let d = duplicate(&u, &[0], 1).unwrap();
        assert_eq!(d.size(), 3);
        let c = check_right_inverse(&d).unwrap();
        assert!(!c.is_inverse());
        assert_eq!(c.implication, vec![(0, 2), (2, 0)]);
    }

    #[test]
    fn random_family_is_regular() {
        let b2 = Arc::new(fixtures::b2());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sets = random_regular_sets(&b2, &mut rng, 40, 8);
        assert_eq!(sets.len(), 40);
        let mut inverse = 0;
        for s in &sets {
            let c = check_right_inverse(s).unwrap();
            inverse += c.is_inverse() as usize;
        }
        assert!(inverse > 0 && inverse < sets.len());
    }

    #[test]
    fn left_sets_over_trivial_group() {
        // a left inverse set over the trivial group has at most one element
        let t1 = Arc::new(fixtures::t1());
        assert_eq!(enumerate_left_inverse_sets(&t1, 1, 1_000).unwrap().len(), 1);
        assert!(enumerate_left_inverse_sets(&t1, 2, 1_000).unwrap().is_empty());
        assert_eq!(enumerate_left_inverse_sets(&t1, 0, 1_000).unwrap().len(), 1);
    }

    #[test]
    fn left_sets_over_z2() {
        // on two points only the regular action works, and it forces the pairing
        let z2 = Arc::new(fixtures::z2());
        let found = enumerate_left_inverse_sets(&z2, 2, 100_000).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].pairing(), &[0, 1, 1, 0]);
        assert!(enumerate_left_inverse_sets(&z2, 3, 100_000).unwrap().is_empty());
    }
}
