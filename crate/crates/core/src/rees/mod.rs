//! Partial McAlister functions and the regular and inverse Rees matrix
//! semigroups RM(T, I, p) and IM(T, I, p) = RM / γ.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse_set::{is_right_full, require_inverse, AxiomReport, RightSet};
use crate::quotient::{all_congruences, Partition};
use crate::semigroup::{recognize_inverse, InverseSemigroup, MulTable};

mod up;

pub use up::{im_to_k, inverse_set_from_p, recover_from_morita, roundtrip_checks, RoundTrip, UpSet};

/// Largest RM(T, I, p) on which γ-minimality is checked by enumerating congruences.
pub const MINIMALITY_ORDER_LIMIT: usize = 12;

/// A validated map p: I × I → T on I = {0, .., k-1}.
#[derive(Clone, Debug)]
pub struct PartialMcAlisterFunction {
    semigroup: Arc<InverseSemigroup>,
    index_size: usize,
    p: Vec<usize>,
    full: bool,
}

impl PartialMcAlisterFunction {
    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn index_size(&self) -> usize {
        self.index_size
    }

    pub fn p(&self, i: usize, j: usize) -> usize {
        self.p[i * self.index_size + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.p.chunks(self.index_size.max(1)).map(<[usize]>::to_vec).collect()
    }

    /// Whether (MF5) holds, making p a McAlister function.
    pub fn is_full(&self) -> bool {
        self.full
    }
}

/// Scans (MF1)–(MF4) and reports every violation. (MF5) is not a violation;
/// see `check_mcalister`.
pub fn mcalister_report(t: &InverseSemigroup, rows: &[Vec<usize>]) -> Result<AxiomReport> {
    let k = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != k {
            return Err(Error::InvalidTable(format!("row {i} of p has {} entries, expected {k}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= t.order()) {
            return Err(Error::InvalidTable(format!("p entry {x} in row {i} is not an element")));
        }
    }
    let p = |i: usize, j: usize| rows[i][j];
    let mut r = AxiomReport::default();
    for i in 0..k {
        if !t.is_idempotent(p(i, i)) {
            r.record("MF1", vec![i]);
        }
    }
    for i in 0..k {
        for j in 0..k {
            if t.mul3(p(i, i), p(i, j), p(j, j)) != p(i, j) {
                r.record("MF2", vec![i, j]);
            }
            if t.inv(p(i, j)) != p(j, i) {
                r.record("MF3", vec![i, j]);
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if !t.leq(t.mul(p(i, j), p(j, l)), p(i, l)) {
                    r.record("MF4", vec![i, j, l]);
                }
            }
        }
    }
    Ok(r)
}

/// Validates p and records whether (MF5) holds.
pub fn check_mcalister(t: &Arc<InverseSemigroup>, rows: &[Vec<usize>]) -> Result<PartialMcAlisterFunction> {
    let report = mcalister_report(t, rows)?;
    if !report.passed() {
        return Err(Error::NotMcAlister(report));
    }
    let k = rows.len();
    let full = t
        .idempotents()
        .iter()
        .all(|&e| (0..k).any(|i| t.leq(e, rows[i][i])));
    Ok(PartialMcAlisterFunction {
        semigroup: t.clone(),
        index_size: k,
        p: rows.concat(),
        full,
    })
}

/// p_U(u, v) = ⟨u|v⟩ on I = U. Full exactly when U is right full.
pub fn mcalister_from_set(u: &RightSet) -> Result<PartialMcAlisterFunction> {
    require_inverse(u)?;
    let rows: Vec<Vec<usize>> = u.elements().map(|x| u.elements().map(|y| u.pair(x, y)).collect()).collect();
    let pm = check_mcalister(u.semigroup(), &rows).map_err(|e| match e {
        Error::NotMcAlister(r) => Error::Inconsistency(format!("pairing of an inverse set violates {r}")),
        other => other,
    })?;
    if pm.is_full() != is_right_full(u) {
        return Err(Error::Inconsistency("(MF5) disagrees with right fullness".into()));
    }
    Ok(pm)
}

/// A triple (j, t, i) with p_jj t p_ii = t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReesElement {
    pub j: usize,
    pub t: usize,
    pub i: usize,
}

/// RM(T, I, p): admissible triples in lexicographic (j, t, i) order.
#[derive(Clone, Debug)]
pub struct RegularRees {
    table: MulTable,
    elements: Vec<ReesElement>,
}

impl RegularRees {
    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn elements(&self) -> &[ReesElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn admissible(pm: &PartialMcAlisterFunction, budget: u64) -> Result<Vec<ReesElement>> {
    let t = pm.semigroup();
    let k = pm.index_size();
    let bound = (k * k) as u64 * t.order() as u64;
    if bound > budget {
        return Err(Error::SizeLimit(format!("RM candidates {bound} exceed budget {budget}")));
    }
    let mut out = Vec::new();
    for j in 0..k {
        for x in t.elements() {
            for i in 0..k {
                if t.mul3(pm.p(j, j), x, pm.p(i, i)) == x {
                    out.push(ReesElement { j, t: x, i });
                }
            }
        }
    }
    Ok(out)
}

/// Builds RM(T, I, p) and asserts closure, associativity and regularity.
pub fn regular_rees(pm: &PartialMcAlisterFunction, budget: u64) -> Result<RegularRees> {
    let t = pm.semigroup();
    let elements = admissible(pm, budget)?;
    let index: HashMap<ReesElement, usize> = elements.iter().enumerate().map(|(n, &e)| (e, n)).collect();
    let n = elements.len();
    let mut cells = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            let prod = ReesElement {
                j: a.j,
                t: t.mul3(a.t, pm.p(a.i, b.j), b.t),
                i: b.i,
            };
            let c = index
                .get(&prod)
                .ok_or_else(|| Error::Inconsistency(format!("RM product {prod:?} is not admissible")))?;
            cells.push(*c);
        }
    }
    let table = MulTable::new(n, cells)?;
    if let Some((a, b, c)) = table.non_associative_triple() {
        return Err(Error::Inconsistency(format!("RM is not associative at ({a}, {b}, {c})")));
    }
    for x in 0..n {
        if !(0..n).any(|y| table.mul(table.mul(x, y), x) == x) {
            return Err(Error::Inconsistency(format!("RM element {x} is not regular")));
        }
    }
    Ok(RegularRees { table, elements })
}

/// IM(T, I, p) with the quotient map γ from RM(T, I, p).
#[derive(Clone, Debug)]
pub struct InverseRees {
    pm: PartialMcAlisterFunction,
    regular: RegularRees,
    gamma: Partition,
    semigroup: Arc<InverseSemigroup>,
}

impl InverseRees {
    pub fn mcalister(&self) -> &PartialMcAlisterFunction {
        &self.pm
    }

    pub fn regular(&self) -> &RegularRees {
        &self.regular
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    /// Class [j, t, i] of an admissible triple.
    pub fn class_of(&self, e: ReesElement) -> Option<usize> {
        self.regular
            .elements
            .binary_search(&e)
            .ok()
            .map(|n| self.gamma.class_of(n))
    }

    /// Smallest triple in a class.
    pub fn label(&self, class: usize) -> ReesElement {
        self.regular.elements[self.gamma.rep(class)]
    }
}

fn gamma_related(pm: &PartialMcAlisterFunction, a: ReesElement, b: ReesElement) -> bool {
    let t = pm.semigroup();
    t.mul3(pm.p(a.j, b.j), b.t, pm.p(b.i, a.i)) == a.t && t.mul3(pm.p(b.j, a.j), a.t, pm.p(a.i, b.i)) == b.t
}

/// Checks that a predicate on 0..n is exactly the equivalence generated by it.
pub(crate) fn require_equivalence(
    what: &str,
    n: usize,
    related: impl Fn(usize, usize) -> bool,
) -> Result<Partition> {
    let part = Partition::from_relation(n, &related);
    for a in 0..n {
        for b in 0..n {
            if related(a, b) != (part.class_of(a) == part.class_of(b)) {
                return Err(Error::Inconsistency(format!(
                    "{what} is not an equivalence relation at ({a}, {b})"
                )));
            }
        }
    }
    Ok(part)
}

/// Builds IM(T, I, p), asserting that γ is an equivalence and a congruence,
/// that the quotient is inverse, and that [j, t, i]* = [i, t*, j].
pub fn inverse_rees(pm: &PartialMcAlisterFunction, budget: u64) -> Result<InverseRees> {
    let regular = regular_rees(pm, budget)?;
    let els = &regular.elements;
    let gamma = require_equivalence("γ", els.len(), |a, b| gamma_related(pm, els[a], els[b]))?;
    let table = gamma.quotient_table(&regular.table)?;
    let semigroup = recognize_inverse(table)
        .map_err(|e| Error::Inconsistency(format!("IM is not inverse: {e}")))?;
    let t = pm.semigroup();
    let im = InverseRees {
        pm: pm.clone(),
        regular,
        gamma,
        semigroup: Arc::new(semigroup.with_name("IM")),
    };
    for e in im.regular.elements.iter() {
        let inv = ReesElement { j: e.i, t: t.inv(e.t), i: e.j };
        let c = im.class_of(*e).expect("element of RM");
        if im.class_of(inv) != Some(im.semigroup.inv(c)) {
            return Err(Error::Inconsistency(format!("inverse of {e:?} is not [i, t*, j]")));
        }
    }
    Ok(im)
}

/// Whether γ lies below every congruence of RM(T, I, p) with inverse
/// quotient. `None` when RM is larger than `MINIMALITY_ORDER_LIMIT`.
pub fn gamma_is_minimum(im: &InverseRees, limit: usize) -> Result<Option<bool>> {
    let rm = im.regular.table();
    if rm.order() > MINIMALITY_ORDER_LIMIT {
        return Ok(None);
    }
    for c in all_congruences(rm, limit)? {
        let quotient = c.quotient_table(rm)?;
        if recognize_inverse(quotient).is_ok() && !im.gamma.refines(&c) {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
