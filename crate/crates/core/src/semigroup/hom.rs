use super::{InverseSemigroup, TwoSidedIdeal};
use crate::error::{Error, Result};

pub fn check_hom(s: &InverseSemigroup, t: &InverseSemigroup, map: &[usize]) -> bool {
    map.len() == s.order()
        && map.iter().all(|&x| x < t.order())
        && s.elements().all(|a| {
            s.elements()
                .all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b]))
        })
}

/// Per-element invariants preserved by isomorphisms.
fn signature(s: &InverseSemigroup, x: usize) -> [usize; 6] {
    let down = s.elements().filter(|&y| s.leq(y, x)).count();
    let up = s.elements().filter(|&y| s.leq(x, y)).count();
    let mut right = vec![false; s.order()];
    let mut left = vec![false; s.order()];
    for y in s.elements() {
        right[s.mul(x, y)] = true;
        left[s.mul(y, x)] = true;
    }
    let mut seen = vec![false; s.order()];
    let mut p = x;
    let mut powers = 0;
    while !seen[p] {
        seen[p] = true;
        powers += 1;
        p = s.mul(p, x);
    }
    [
        s.is_idempotent(x) as usize,
        (s.inv(x) == x) as usize,
        down,
        up,
        right.iter().filter(|&&b| b).count() * 1000 + left.iter().filter(|&&b| b).count(),
        powers,
    ]
}

struct HomSearch<'a> {
    s: &'a InverseSemigroup,
    t: &'a InverseSemigroup,
    bijective: bool,
    sig_s: Vec<[usize; 6]>,
    sig_t: Vec<[usize; 6]>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl HomSearch<'_> {
    /// Assigns x -> y and everything it forces. Returns false on contradiction.
    fn assign(&self, map: &mut [Option<usize>], used: &mut [bool], x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            match map[a] {
                Some(c) if c == b => continue,
                Some(_) => return false,
                None => {}
            }
            if self.bijective && (used[b] || self.sig_s[a] != self.sig_t[b]) {
                return false;
            }
            map[a] = Some(b);
            used[b] = true;
            queue.push((self.s.inv(a), self.t.inv(b)));
            for c in self.s.elements() {
                if let Some(d) = map[c] {
                    queue.push((self.s.mul(a, c), self.t.mul(b, d)));
                    queue.push((self.s.mul(c, a), self.t.mul(d, b)));
                }
            }
        }
        true
    }

    fn run(&mut self, map: Vec<Option<usize>>, used: Vec<bool>) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(x) = map.iter().position(|m| m.is_none()) else {
            self.found.push(map.into_iter().map(|m| m.unwrap()).collect());
            return;
        };
        for y in self.t.elements() {
            let mut m = map.clone();
            let mut u = used.clone();
            if self.assign(&mut m, &mut u, x, y) {
                self.run(m, u);
                if self.found.len() >= self.limit {
                    return;
                }
            }
        }
    }
}

fn search(s: &InverseSemigroup, t: &InverseSemigroup, bijective: bool, limit: usize) -> Vec<Vec<usize>> {
    let mut hs = HomSearch {
        s,
        t,
        bijective,
        sig_s: s.elements().map(|x| signature(s, x)).collect(),
        sig_t: t.elements().map(|x| signature(t, x)).collect(),
        limit,
        found: Vec::new(),
    };
    if bijective {
        let mut a = hs.sig_s.clone();
        let mut b = hs.sig_t.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Vec::new();
        }
    }
    if s.is_empty() {
        return vec![Vec::new()];
    }
    hs.run(vec![None; s.order()], vec![false; t.order()]);
    hs.found
}

/// Backtracking isomorphism search pruned by element invariants.
pub fn find_isomorphism(s: &InverseSemigroup, t: &InverseSemigroup) -> Option<Vec<usize>> {
    if s.order() != t.order() || s.idempotents().len() != t.idempotents().len() {
        return None;
    }
    let iso = search(s, t, true, 1).into_iter().next()?;
    debug_assert!(check_hom(s, t, &iso));
    Some(iso)
}

/// All homomorphisms s -> t, up to `limit` of them, in lexicographic order.
pub fn homomorphisms(s: &InverseSemigroup, t: &InverseSemigroup, limit: usize) -> Vec<Vec<usize>> {
    search(s, t, false, limit)
}

/// Two ideals on which θ is injective with the same image must coincide.
///
/// Returns `Ok(false)` only on a counterexample.
pub fn restrict_hom_ideal_agreement(
    s: &InverseSemigroup,
    t: &InverseSemigroup,
    theta: &[usize],
    i1: &TwoSidedIdeal,
    i2: &TwoSidedIdeal,
) -> Result<bool> {
    if !check_hom(s, t, theta) {
        return Err(Error::PreconditionFailed("map is not a homomorphism".into()));
    }
    let image = |i: &TwoSidedIdeal| -> Option<Vec<usize>> {
        let mut img: Vec<usize> = i.members().iter().map(|&x| theta[x]).collect();
        img.sort_unstable();
        let n = img.len();
        img.dedup();
        (img.len() == n).then_some(img)
    };
    match (image(i1), image(i2)) {
        (Some(a), Some(b)) if a == b => Ok(i1 == i2),
        (Some(_), Some(_)) => Err(Error::PreconditionFailed("images differ".into())),
        _ => Err(Error::PreconditionFailed("restriction is not injective".into())),
    }
}
