use super::{recognize_inverse, InverseSemigroup, MulTable};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// A partial injective map from `0..len` into some codomain.
pub type PartialMap = Vec<Option<usize>>;

/// All partial bijections from a set of size `nx` to a set of size `ny`,
/// ordered by domain bitmask and then by image tuple lexicographically.
pub fn partial_bijections(nx: usize, ny: usize) -> Vec<PartialMap> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << nx) {
        let domain: Vec<usize> = (0..nx).filter(|&i| mask & (1 << i) != 0).collect();
        let mut images = Vec::with_capacity(domain.len());
        let mut used = vec![false; ny];
        injections(&domain, ny, &mut images, &mut used, &mut |img| {
            let mut f = vec![None; nx];
            for (&d, &y) in domain.iter().zip(img) {
                f[d] = Some(y);
            }
            out.push(f);
        });
    }
    out
}

fn injections(
    domain: &[usize],
    ny: usize,
    images: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    if images.len() == domain.len() {
        emit(images);
        return;
    }
    for y in 0..ny {
        if !used[y] {
            used[y] = true;
            images.push(y);
            injections(domain, ny, images, used, emit);
            images.pop();
            used[y] = false;
        }
    }
}

/// `outer ∘ inner`: apply `inner` first.
pub fn compose_partial(outer: &PartialMap, inner: &PartialMap) -> PartialMap {
    inner
        .iter()
        .map(|x| x.and_then(|y| outer.get(y).copied().flatten()))
        .collect()
}

/// Relational inverse of a partial bijection into a set of size `ny`.
pub fn invert_partial(f: &PartialMap, ny: usize) -> PartialMap {
    let mut g = vec![None; ny];
    for (x, y) in f.iter().enumerate() {
        if let Some(y) = y {
            g[*y] = Some(x);
        }
    }
    g
}

/// The symmetric inverse monoid I_n with product `s t = s ∘ t`.
pub fn symmetric_inverse_monoid(n: usize) -> Result<InverseSemigroup> {
    if n > 4 {
        return Err(Error::SizeLimit(format!("I_{n} exceeds the supported n <= 4")));
    }
    let elems = partial_bijections(n, n);
    let index: HashMap<&PartialMap, usize> = elems.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let table = MulTable::from_fn(elems.len(), |a, b| index[&compose_partial(&elems[a], &elems[b])])?;
    let s = recognize_inverse(table)?;
    for (i, f) in elems.iter().enumerate() {
        if s.inv(i) != index[&invert_partial(f, n)] {
            return Err(Error::Inconsistency(format!(
                "inverse of partial bijection {i} is not its relational inverse"
            )));
        }
    }
    Ok(s.with_name(format!("I{n}")))
}
