//! Adjointable maps between right inverse sets: rank-one maps ω_{v,u},
//! the semigroups K(U) ⊆ L(U), and the bisets L(U,V), K(U,V).

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::inverse_set::{
    require_inverse, LeftSet, PartialMoritaEquivalence, RightSet,
};
use crate::semigroup::{recognize_inverse, subsemigroup, InverseSemigroup, MulTable, TwoSidedIdeal};

/// Default node budget for the search over equivariant maps.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A map `fwd: U -> V` together with its (unique) adjoint `adj: V -> U`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjointableMap {
    pub fwd: Vec<usize>,
    pub adj: Vec<usize>,
}

impl AdjointableMap {
    pub fn identity(size: usize) -> Self {
        let id: Vec<usize> = (0..size).collect();
        AdjointableMap {
            fwd: id.clone(),
            adj: id,
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.fwd[x]
    }

    /// `self ∘ inner`; the adjoint is `inner† ∘ self†`.
    pub fn compose(&self, inner: &AdjointableMap) -> AdjointableMap {
        AdjointableMap {
            fwd: inner.fwd.iter().map(|&x| self.fwd[x]).collect(),
            adj: self.adj.iter().map(|&y| inner.adj[y]).collect(),
        }
    }
}

fn require_common(u: &RightSet, v: &RightSet) -> Result<()> {
    if u.semigroup().table() != v.semigroup().table() {
        return Err(Error::MiddleMismatch);
    }
    Ok(())
}

/// ω_{v,u}: x ↦ v⟨u|x⟩, with adjoint ω_{u,v}.
pub fn rank_one(target: &RightSet, source: &RightSet, v: usize, u: usize) -> AdjointableMap {
    AdjointableMap {
        fwd: source.elements().map(|x| target.act(v, source.pair(u, x))).collect(),
        adj: target.elements().map(|y| source.act(u, target.pair(v, y))).collect(),
    }
}

/// Whether `adj` is an adjoint of `fwd`: ⟨adj(y)|x⟩_U = ⟨y|fwd(x)⟩_V.
pub fn is_adjoint(u: &RightSet, v: &RightSet, fwd: &[usize], adj: &[usize]) -> bool {
    v.elements()
        .all(|y| u.elements().all(|x| u.pair(adj[y], x) == v.pair(y, fwd[x])))
}

/// Solves for the adjoint of `fwd` pointwise. `None` if some point has no
/// candidate; a second candidate means U is not inverse and is an error.
pub fn adjoint_of(u: &RightSet, v: &RightSet, fwd: &[usize]) -> Result<Option<Vec<usize>>> {
    let mut adj = Vec::with_capacity(v.size());
    for y in v.elements() {
        let mut found = None;
        for x0 in u.elements() {
            if u.elements().all(|x| u.pair(x0, x) == v.pair(y, fwd[x])) {
                if let Some(first) = found {
                    return Err(Error::Inconsistency(format!(
                        "adjoint at {y} has candidates {first} and {x0}"
                    )));
                }
                found = Some(x0);
            }
        }
        match found {
            Some(x0) => adj.push(x0),
            None => return Ok(None),
        }
    }
    Ok(Some(adj))
}

/// Swaps a map with its adjoint.
pub fn adjoint(phi: &AdjointableMap) -> AdjointableMap {
    AdjointableMap {
        fwd: phi.adj.clone(),
        adj: phi.fwd.clone(),
    }
}

/// K(U,V), deduplicated and sorted by map table.
pub fn enumerate_k(u: &RightSet, v: &RightSet) -> Result<Vec<AdjointableMap>> {
    require_common(u, v)?;
    let mut maps: Vec<AdjointableMap> = v
        .elements()
        .flat_map(|y| u.elements().map(move |x| (y, x)))
        .map(|(y, x)| rank_one(v, u, y, x))
        .collect();
    maps.sort();
    maps.dedup();
    Ok(maps)
}

struct EquivariantSearch<'a> {
    u: &'a RightSet,
    v: &'a RightSet,
    phi: Vec<Option<usize>>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl EquivariantSearch<'_> {
    /// Sets φ(x) = y and propagates φ(x·t) = y·t. Returns false on conflict.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((a, b)) = stack.pop() {
            match self.phi[a] {
                Some(c) if c == b => continue,
                Some(_) => return false,
                None => {
                    self.phi[a] = Some(b);
                    self.trail.push(a);
                    for t in self.u.semigroup().elements() {
                        stack.push((self.u.act(a, t), self.v.act(b, t)));
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().expect("trail above mark");
            self.phi[a] = None;
        }
    }

    fn run(&mut self, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let Some(x) = self.phi.iter().position(Option::is_none) else {
            out.push(self.phi.iter().map(|p| p.expect("complete")).collect());
            return Ok(());
        };
        for y in self.v.elements() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SizeLimit(format!(
                    "equivariant map search exceeded {} nodes",
                    self.budget
                )));
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.run(out)?;
            }
            self.undo(mark);
        }
        Ok(())
    }
}

/// Every right T-map U → V, in lexicographic order of tables.
pub fn equivariant_maps(u: &RightSet, v: &RightSet, budget: u64) -> Result<Vec<Vec<usize>>> {
    require_common(u, v)?;
    let mut search = EquivariantSearch {
        u,
        v,
        phi: vec![None; u.size()],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    let mut out = Vec::new();
    search.run(&mut out)?;
    Ok(out)
}

/// L(U,V): every adjointable map, sorted by table. Both sets must be inverse.
pub fn enumerate_l(u: &RightSet, v: &RightSet, budget: u64) -> Result<Vec<AdjointableMap>> {
    require_inverse(u)?;
    require_inverse(v)?;
    let mut maps = Vec::new();
    for fwd in equivariant_maps(u, v, budget)? {
        if let Some(adj) = adjoint_of(u, v, &fwd)? {
            maps.push(AdjointableMap { fwd, adj });
        }
    }
    Ok(maps)
}

/// A semigroup of adjointable maps U → U under composition. Element `i` is
/// `maps[i]`; the product `i·j` is `maps[i] ∘ maps[j]`.
#[derive(Clone, Debug)]
pub struct MapSemigroup {
    semigroup: Arc<InverseSemigroup>,
    maps: Vec<AdjointableMap>,
    index: HashMap<Vec<usize>, usize>,
}

impl MapSemigroup {
    /// Builds the composition table and recognizes it as an inverse
    /// semigroup whose generalized inverse is the adjoint.
    pub fn from_maps(name: &str, maps: Vec<AdjointableMap>) -> Result<Self> {
        let index: HashMap<Vec<usize>, usize> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (m.fwd.clone(), i))
            .collect();
        let n = maps.len();
        let mut cells = Vec::with_capacity(n * n);
        for a in &maps {
            for b in &maps {
                let c = a.compose(b);
                let k = *index.get(&c.fwd).ok_or_else(|| {
                    Error::Inconsistency(format!("{name} is not closed under composition"))
                })?;
                cells.push(k);
            }
        }
        let table = MulTable::new(n, cells)?;
        let semigroup = recognize_inverse(table).map_err(|e| {
            Error::Inconsistency(format!("{name} failed inverse recognition: {e}"))
        })?;
        for (i, m) in maps.iter().enumerate() {
            if index.get(&m.adj) != Some(&semigroup.inv(i)) {
                return Err(Error::Inconsistency(format!(
                    "generalized inverse of element {i} of {name} is not its adjoint"
                )));
            }
        }
        Ok(MapSemigroup {
            semigroup: Arc::new(semigroup.with_name(name)),
            maps,
            index,
        })
    }

    pub fn semigroup(&self) -> &Arc<InverseSemigroup> {
        &self.semigroup
    }

    pub fn maps(&self) -> &[AdjointableMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &AdjointableMap {
        &self.maps[i]
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// Index of the element whose forward table is `fwd`.
    pub fn index_of(&self, fwd: &[usize]) -> Option<usize> {
        self.index.get(fwd).copied()
    }
}

/// L(U) as an inverse semigroup labelled by maps.
pub fn l_semigroup(u: &RightSet, budget: u64) -> Result<MapSemigroup> {
    MapSemigroup::from_maps("L(U)", enumerate_l(u, u, budget)?)
}

/// K(U) as an inverse semigroup; checks that its idempotents are exactly the ω_{u,u}.
pub fn k_semigroup(u: &RightSet) -> Result<MapSemigroup> {
    require_inverse(u)?;
    let k = MapSemigroup::from_maps("K(U)", enumerate_k(u, u)?)?;
    let mut diagonal: Vec<usize> = u
        .elements()
        .map(|x| k.index_of(&rank_one(u, u, x, x).fwd).expect("ω_{u,u} lies in K(U)"))
        .collect();
    diagonal.sort_unstable();
    diagonal.dedup();
    if diagonal != k.semigroup().idempotents() {
        return Err(Error::Inconsistency(
            "idempotents of K(U) differ from the maps ω_{u,u}".into(),
        ));
    }
    Ok(k)
}

/// K(U) inside L(U): returns L(U), K(U) and the ideal of L(U) formed by K(U).
pub fn k_ideal_in_l(u: &RightSet, budget: u64) -> Result<(MapSemigroup, MapSemigroup, TwoSidedIdeal)> {
    let l = l_semigroup(u, budget)?;
    let k = k_semigroup(u)?;
    let mut members = Vec::with_capacity(k.order());
    for m in k.maps() {
        members.push(l.index_of(&m.fwd).ok_or_else(|| {
            Error::Inconsistency("a rank-one map is missing from L(U)".into())
        })?);
    }
    let ideal = TwoSidedIdeal::new(l.semigroup(), members)
        .map_err(|e| Error::Inconsistency(format!("K(U) is not an ideal of L(U): {e}")))?;
    Ok((l, k, ideal))
}

/// U as a Morita equivalence from K(U) to the ideal ⟨U|U⟩ of T, with
/// k·u := k(u) and left pairing ω_{u,u'}.
pub fn morita_from_set(u: &RightSet) -> Result<PartialMoritaEquivalence> {
    let k = k_semigroup(u)?;
    let t = u.semigroup();
    let (ideal, emb) = subsemigroup(t, &u.pairing_image())?;
    let ideal = Arc::new(ideal);
    let mut pos = vec![usize::MAX; t.order()];
    for (i, &x) in emb.iter().enumerate() {
        pos[x] = i;
    }
    let right = RightSet::from_fns(ideal, u.size(), |x, s| u.act(x, emb[s]), |x, y| pos[u.pair(x, y)])?;
    let left = LeftSet::from_fns(
        k.semigroup().clone(),
        u.size(),
        |a, x| k.map(a).apply(x),
        |x, y| k.index_of(&rank_one(u, u, x, y).fwd).expect("ω lies in K(U)"),
    )?;
    PartialMoritaEquivalence::new(left, right)
}

/// The biset of maps U → V between `lv` (acting by post-composition) and
/// `lu` (acting by pre-composition), with pairings φ1φ2† and φ1†φ2.
fn map_biset(
    maps: Vec<AdjointableMap>,
    lv: &MapSemigroup,
    lu: &MapSemigroup,
) -> Result<(PartialMoritaEquivalence, Vec<AdjointableMap>)> {
    let index: HashMap<Vec<usize>, usize> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.fwd.clone(), i))
        .collect();
    let find = |m: AdjointableMap, what: &str| -> Result<usize> {
        index
            .get(&m.fwd)
            .copied()
            .ok_or_else(|| Error::Inconsistency(format!("{what} leaves the map set")))
    };
    let find_in = |s: &MapSemigroup, m: AdjointableMap, what: &str| -> Result<usize> {
        s.index_of(&m.fwd)
            .ok_or_else(|| Error::Inconsistency(format!("{what} leaves its semigroup")))
    };
    let m = maps.len();
    let (nl, nr) = (lv.order(), lu.order());
    let mut left_action = Vec::with_capacity(m * nl);
    let mut right_action = Vec::with_capacity(m * nr);
    for phi in &maps {
        for s in lv.maps() {
            left_action.push(find(s.compose(phi), "left action")?);
        }
        for t in lu.maps() {
            right_action.push(find(phi.compose(t), "right action")?);
        }
    }
    let mut left_pairing = Vec::with_capacity(m * m);
    let mut right_pairing = Vec::with_capacity(m * m);
    for a in &maps {
        for b in &maps {
            left_pairing.push(find_in(lv, a.compose(&adjoint(b)), "left pairing")?);
            right_pairing.push(find_in(lu, adjoint(a).compose(b), "right pairing")?);
        }
    }
    let pm = PartialMoritaEquivalence::from_tables(
        lv.semigroup().clone(),
        lu.semigroup().clone(),
        m,
        left_action,
        right_action,
        left_pairing,
        right_pairing,
    )?;
    Ok((pm, maps))
}

/// L(U,V) as a partial Morita equivalence from L(V) to L(U). Also returns
/// the maps labelling its elements.
pub fn l_biset(
    u: &RightSet,
    v: &RightSet,
    budget: u64,
) -> Result<(PartialMoritaEquivalence, Vec<AdjointableMap>)> {
    let maps = enumerate_l(u, v, budget)?;
    let lv = l_semigroup(v, budget)?;
    let lu = l_semigroup(u, budget)?;
    map_biset(maps, &lv, &lu)
}

/// K(U,V) as a partial Morita equivalence from K(V) to K(U).
pub fn k_biset(u: &RightSet, v: &RightSet) -> Result<(PartialMoritaEquivalence, Vec<AdjointableMap>)> {
    let maps = enumerate_k(u, v)?;
    let kv = k_semigroup(v)?;
    let ku = k_semigroup(u)?;
    map_biset(maps, &kv, &ku)
}
