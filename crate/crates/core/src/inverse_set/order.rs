use super::RightSet;
use crate::error::{Error, Result};

/// Idempotent maps among the ω_{v,w}, as tables.
fn idempotent_rank_ones(u: &RightSet) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in u.elements() {
        for w in u.elements() {
            let k: Vec<usize> = u.elements().map(|x| u.omega(v, w, x)).collect();
            if k.iter().all(|&y| k[y] == y) && !out.contains(&k) {
                out.push(k);
            }
        }
    }
    out
}

/// The four descriptions of x ≤ y on an inverse set:
/// x = y⟨x|x⟩, x = y e for an idempotent e, x = ω_{x,x}(y), x = k(y) for k in E(K(U)).
pub fn set_order_conditions(u: &RightSet, x: usize, y: usize) -> [bool; 4] {
    let t = u.semigroup();
    [
        x == u.act(y, u.pair(x, x)),
        t.idempotents().iter().any(|&e| x == u.act(y, e)),
        x == u.omega(x, x, y),
        idempotent_rank_ones(u).iter().any(|k| k[y] == x),
    ]
}

/// x ≤ y in the order of an inverse set. Errors if the four forms disagree.
pub fn set_order(u: &RightSet, x: usize, y: usize) -> Result<bool> {
    let c = set_order_conditions(u, x, y);
    if c.iter().any(|&b| b != c[0]) {
        return Err(Error::Inconsistency(format!(
            "order conditions disagree on ({x}, {y}): {c:?}"
        )));
    }
    Ok(c[0])
}
