use std::sync::Arc;

use super::{check_correspondence, recover_partial_morita, InverseCorrespondence};
use crate::error::{Error, Result};
use crate::inverse_set::{check_right_inverse, require_inverse, PartialMoritaEquivalence, RightSet};
use crate::quotient::{Partition, UnionFind};

/// U ⊗ V with its class structure. Pairs (u, v) are indexed `u * |V| + v`;
/// classes are numbered by their smallest pair.
#[derive(Clone, Debug)]
pub struct Tensor {
    correspondence: InverseCorrespondence,
    partition: Partition,
    nv: usize,
}

impl Tensor {
    pub fn correspondence(&self) -> &InverseCorrespondence {
        &self.correspondence
    }

    pub fn size(&self) -> usize {
        self.correspondence.size()
    }

    /// The class u ⊗ v.
    pub fn class(&self, u: usize, v: usize) -> usize {
        self.partition.class_of(u * self.nv + v)
    }

    /// Smallest pair in a class.
    pub fn rep(&self, class: usize) -> (usize, usize) {
        let p = self.partition.rep(class);
        (p / self.nv, p % self.nv)
    }

    /// Every pair in a class.
    pub fn members(&self, class: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let nv = self.nv;
        self.partition.classes()[class].iter().map(move |&p| (p / nv, p % nv))
    }
}

fn require_valid(c: &InverseCorrespondence, which: &str) -> Result<()> {
    require_inverse(c.right_set())?;
    let r = check_correspondence(c);
    if !r.passed() {
        return Err(Error::PreconditionFailed(format!("{which} factor: {r}")));
    }
    Ok(())
}

/// The tensor product of correspondences S → T and T → R.
///
/// Well-definedness of the action, pairing and left action on classes is
/// checked over every representative; a failure is an inconsistency.
pub fn tensor(c1: &InverseCorrespondence, c2: &InverseCorrespondence) -> Result<Tensor> {
    if c1.right_semigroup() != c2.left_semigroup() {
        return Err(Error::MiddleMismatch);
    }
    require_valid(c1, "left")?;
    require_valid(c2, "right")?;
    let (nu, nv) = (c1.size(), c2.size());
    let middle = c1.right_semigroup();
    let mut uf = UnionFind::new(nu * nv);
    for u in c1.elements() {
        for t in middle.elements() {
            for v in c2.elements() {
                uf.union(c1.right_act(u, t) * nv + v, u * nv + c2.left_act(t, v));
            }
        }
    }
    let partition = uf.into_partition();
    let class = |u: usize, v: usize| partition.class_of(u * nv + v);
    let pairs = || (0..nu * nv).map(|p| (p / nv, p % nv));
    let n = partition.num_classes();
    let r = c2.right_semigroup();
    let s = c1.left_semigroup();

    let mut action = vec![usize::MAX; n * r.order()];
    let mut left_action = vec![usize::MAX; n * s.order()];
    for (u, v) in pairs() {
        let c = class(u, v);
        for x in r.elements() {
            agree(&mut action[c * r.order() + x], class(u, c2.right_act(v, x)), "right action")?;
        }
        for a in s.elements() {
            agree(&mut left_action[c * s.order() + a], class(c1.left_act(a, u), v), "left action")?;
        }
    }
    let mut pairing = vec![usize::MAX; n * n];
    for (u1, v1) in pairs() {
        let c1_ = class(u1, v1);
        for (u, v) in pairs() {
            let value = c2.pair(v1, c2.left_act(c1.pair(u1, u), v));
            agree(&mut pairing[c1_ * n + class(u, v)], value, "pairing")?;
        }
    }
    let right = RightSet::new(r.clone(), n, action, pairing)?;
    let correspondence = InverseCorrespondence::new(s.clone(), right, left_action)?;
    if !check_right_inverse(correspondence.right_set())?.is_inverse() {
        return Err(Error::Inconsistency("tensor product is not an inverse set".into()));
    }
    let report = check_correspondence(&correspondence);
    if !report.passed() {
        return Err(Error::Inconsistency(format!(
            "tensor product is not a correspondence: {report}"
        )));
    }
    if c1.is_non_degenerate() && !correspondence.is_non_degenerate() {
        return Err(Error::Inconsistency(
            "non-degeneracy of the left factor did not propagate".into(),
        ));
    }
    Ok(Tensor {
        correspondence,
        partition,
        nv,
    })
}

fn agree(slot: &mut usize, value: usize, what: &str) -> Result<()> {
    if *slot == usize::MAX {
        *slot = value;
        Ok(())
    } else if *slot == value {
        Ok(())
    } else {
        Err(Error::Inconsistency(format!("{what} is not well defined on classes")))
    }
}

/// σ1 ⊗ σ2 between two tensor products, checked on every representative.
pub fn tensor_map(src: &Tensor, dst: &Tensor, sigma1: &[usize], sigma2: &[usize]) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; src.size()];
    for (c, slot) in map.iter_mut().enumerate() {
        for (u, v) in src.members(c) {
            let (Some(&a), Some(&b)) = (sigma1.get(u), sigma2.get(v)) else {
                return Err(Error::InvalidMap("map does not fit the carriers".into()));
            };
            agree(slot, dst.class(a, b), "tensor of maps")?;
        }
    }
    Ok(map)
}

fn left_pairing_image(m: &PartialMoritaEquivalence) -> Vec<bool> {
    let mut mask = vec![false; m.left_semigroup().order()];
    for &x in m.left_set().pairing() {
        mask[x] = true;
    }
    mask
}

/// The tensor product of partial Morita equivalences, with its left pairing
/// recovered. Checks that the recovered ideal is
/// W = {s ∈ ⟨U|U⟩ | ⟨u'|su⟩ ∈ ⟨V|V⟩ for all u, u'} and that
/// ⟨u2⊗v2|u1⊗v1⟩ = ⟨u2⟨v2|v1⟩|u1⟩.
pub fn tensor_partial_morita(
    m1: &PartialMoritaEquivalence,
    m2: &PartialMoritaEquivalence,
) -> Result<(PartialMoritaEquivalence, Tensor)> {
    let c1 = InverseCorrespondence::from_partial_morita(m1);
    let c2 = InverseCorrespondence::from_partial_morita(m2);
    let t = tensor(&c1, &c2)?;
    let (m, ideal) = recover_partial_morita(t.correspondence())?;
    let s1: &Arc<_> = m1.left_semigroup();
    let i = left_pairing_image(m1);
    let j = left_pairing_image(m2);
    let w: Vec<usize> = s1
        .elements()
        .filter(|&s| {
            i[s] && m1.elements().all(|u| {
                m1.elements().all(|u1| j[m1.right_pair(u1, m1.left_act(s, u))])
            })
        })
        .collect();
    if w != ideal.members() {
        return Err(Error::Inconsistency(
            "recovered ideal of the tensor product differs from W".into(),
        ));
    }
    for u1 in m1.elements() {
        for u2 in m1.elements() {
            for v1 in m2.elements() {
                for v2 in m2.elements() {
                    let lhs = m.left_pair(t.class(u2, v2), t.class(u1, v1));
                    let rhs = m1.left_pair(m1.right_act(u2, m2.left_pair(v2, v1)), u1);
                    if lhs != rhs {
                        return Err(Error::Inconsistency(format!(
                            "tensor left pairing differs at ({u2},{v2}),({u1},{v1})"
                        )));
                    }
                }
            }
        }
    }
    Ok((m, t))
}
