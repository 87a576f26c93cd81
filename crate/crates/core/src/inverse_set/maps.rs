use serde::Serialize;

use super::{AxiomReport, LeftSet, RightSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MapKind {
    RightMap,
    PairingPreserving,
    Both,
}

/// Checks that `map: src -> dst` has the declared kind.
pub fn check_map(src: &RightSet, dst: &RightSet, map: &[usize], kind: MapKind) -> Result<AxiomReport> {
    if src.semigroup() != dst.semigroup() {
        return Err(Error::InvalidMap("sets over different semigroups".into()));
    }
    if map.len() != src.size() || map.iter().any(|&y| y >= dst.size()) {
        return Err(Error::InvalidMap("map does not fit the carriers".into()));
    }
    let mut r = AxiomReport::default();
    if matches!(kind, MapKind::RightMap | MapKind::Both) {
        for u in src.elements() {
            for t in src.semigroup().elements() {
                if map[src.act(u, t)] != dst.act(map[u], t) {
                    r.record("right-map", vec![u, t]);
                }
            }
        }
    }
    if matches!(kind, MapKind::PairingPreserving | MapKind::Both) {
        for u in src.elements() {
            for v in src.elements() {
                if dst.pair(map[u], map[v]) != src.pair(u, v) {
                    r.record("pairing", vec![u, v]);
                }
            }
        }
    }
    Ok(r)
}

fn fingerprint(u: &RightSet, x: usize) -> (usize, usize) {
    (u.pair(x, x), u.orbit(x).len())
}

/// Visits pairing-preserving bijections `u -> v` until `visit` returns true.
/// Returns false when the sets cannot match at all.
fn search_bijections(u: &RightSet, v: &RightSet, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if u.semigroup() != v.semigroup() || u.size() != v.size() {
        return false;
    }
    let fu: Vec<_> = u.elements().map(|x| fingerprint(u, x)).collect();
    let fv: Vec<_> = v.elements().map(|x| fingerprint(v, x)).collect();
    let (mut a, mut b) = (fu.clone(), fv.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    let mut map = Vec::with_capacity(u.size());
    let mut used = vec![false; v.size()];
    extend(u, v, &fu, &fv, &mut map, &mut used, visit);
    true
}

/// Searches for a pairing-preserving surjection `u -> v`.
///
/// Only pairing values constrain the search; the result is then checked to be
/// an injective right map.
pub fn find_set_isomorphism(u: &RightSet, v: &RightSet) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    search_bijections(u, v, &mut |m| {
        found = Some(m.to_vec());
        true
    });
    let Some(map) = found else { return Ok(None) };
    let report = check_map(u, v, &map, MapKind::Both)?;
    if !report.passed() {
        return Err(Error::Inconsistency(format!(
            "pairing-preserving surjection is not a right map: {report}"
        )));
    }
    Ok(Some(map))
}

/// Every isomorphism of right sets `u -> v`, in lexicographic order.
pub fn all_set_isomorphisms(u: &RightSet, v: &RightSet) -> Result<Vec<Vec<usize>>> {
    let mut all = Vec::new();
    search_bijections(u, v, &mut |m| {
        all.push(m.to_vec());
        false
    });
    let mut out = Vec::with_capacity(all.len());
    for map in all {
        if check_map(u, v, &map, MapKind::Both)?.passed() {
            out.push(map);
        }
    }
    Ok(out)
}

fn extend(
    u: &RightSet,
    v: &RightSet,
    fu: &[(usize, usize)],
    fv: &[(usize, usize)],
    map: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let x = map.len();
    if x == u.size() {
        return visit(map);
    }
    for y in v.elements() {
        if used[y] || fu[x] != fv[y] {
            continue;
        }
        let consistent = (0..x).all(|w| {
            v.pair(map[w], y) == u.pair(w, x) && v.pair(y, map[w]) == u.pair(x, w)
        });
        if !consistent {
            continue;
        }
        used[y] = true;
        map.push(y);
        if extend(u, v, fu, fv, map, used, visit) {
            return true;
        }
        map.pop();
        used[y] = false;
    }
    false
}

/// Isomorphism search between left sets, through their right-set readings.
pub fn find_left_set_isomorphism(u: &LeftSet, v: &LeftSet) -> Result<Option<Vec<usize>>> {
    find_set_isomorphism(&u.to_right(), &v.to_right())
}
