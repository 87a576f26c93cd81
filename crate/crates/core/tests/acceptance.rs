//! Acceptance suite. Each criterion runs in-process, prints one PASS/FAIL
//! line with its runtime against a fixed bound, and the binary exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use invcorr::adjointable::{
    adjoint, k_biset, k_ideal_in_l, k_semigroup, l_biset, l_semigroup, morita_from_set, DEFAULT_BUDGET,
};
use invcorr::bicategory::{
    certificate_to_morita, check_morita_biset, check_pentagon, check_triangle, identity_biset, morita_to_certificate,
    opposite, verify_certificate, MoritaVerdict,
};
use invcorr::correspondence::{check_correspondence, find_correspondence_isomorphism, from_hom, tensor, InverseCorrespondence};
use invcorr::fixtures;
use invcorr::inverse_set::generate::{enumerate_left_inverse_sets, random_regular_sets};
use invcorr::inverse_set::{
    check_partial_morita, check_right_regular, enlargement_set, find_left_set_isomorphism, inverse_conditions,
    partial_bijection_biset, semigroup_as_left_set, semigroup_as_right_set, LeftSet, PartialMoritaEquivalence,
    RightSet,
};
use invcorr::multiplier::{count_extensions, extend_hom, multiplier, verify_kasparov};
use invcorr::rees::{check_mcalister, im_to_k, inverse_rees, inverse_set_from_p, mcalister_from_set, roundtrip_checks};
use invcorr::report::Status;
use invcorr::semigroup::{
    find_isomorphism, homomorphisms, is_essential_ideal, subsemigroup, InverseSemigroup, TwoSidedIdeal,
};
use invcorr::verify::{verify_semigroup, Options, Scope};

type Outcome = Result<String, String>;

const BUDGET: u64 = DEFAULT_BUDGET;

macro_rules! require {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn arc(s: InverseSemigroup) -> Arc<InverseSemigroup> {
    Arc::new(s)
}

fn fixture_arcs() -> Vec<Arc<InverseSemigroup>> {
    fixtures::all().into_iter().map(arc).collect()
}

/// Every fixture acting on itself, plus a few generated inverse sets of
/// size at most 6 over each fixture. Deterministic.
fn fixture_sets() -> Vec<(String, RightSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    for s in fixture_arcs() {
        out.push((s.name().to_string(), semigroup_as_right_set(&s)));
        let mut extra: Vec<RightSet> = Vec::new();
        for u in random_regular_sets(&s, &mut rng, 24, 6) {
            let new = u.size() > 0
                && inverse_conditions(&u).is_inverse()
                && u != semigroup_as_right_set(&s)
                && !extra.contains(&u);
            if new && extra.len() < 3 {
                extra.push(u);
            }
        }
        for (i, u) in extra.into_iter().enumerate() {
            out.push((format!("{}#{i}", s.name()), u));
        }
    }
    out
}

/// Sorted member lists of the inverse subsemigroups T of S with TST ⊆ T
/// for which the enlargement biset exists.
fn enlargements(s: &Arc<InverseSemigroup>) -> Vec<PartialMoritaEquivalence> {
    let n = s.order();
    (1u32..(1 << n))
        .filter_map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            enlargement_set(s, &members).ok()
        })
        .collect()
}

/// Two-sided ideals of S, as sorted member lists.
fn ideals(s: &InverseSemigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|m| TwoSidedIdeal::new(s, m.iter().copied()).is_ok())
        .collect()
}

fn is_injective<T: std::hash::Hash + Eq>(items: impl IntoIterator<Item = T>) -> bool {
    let mut seen = HashSet::new();
    items.into_iter().all(|x| seen.insert(x))
}

/// (R-iv) evaluated directly: ⟨u|u⟩ = ⟨u'|u'⟩ = ⟨u|u'⟩ forces u = u'.
fn oracle_inverse(u: &RightSet) -> bool {
    u.elements().all(|a| {
        u.elements()
            .all(|b| a == b || !(u.pair(a, a) == u.pair(b, b) && u.pair(a, a) == u.pair(a, b)))
    })
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut total, mut inverse) = (0, 0);
    for name in ["E2", "Z2", "E3", "I2", "B2"] {
        let s = arc(fixtures::by_name(name).unwrap());
        for u in random_regular_sets(&s, &mut rng, 60, 8) {
            require!(u.size() <= 8, "{name}: generated set of size {}", u.size());
            require!(check_right_regular(&u).passed(), "{name}: generated set is not regular");
            let c = inverse_conditions(&u);
            require!(c.agree(), "{name}: verdicts {:?} on a set of size {}", c.verdicts(), u.size());
            require!(c.is_inverse() == oracle_inverse(&u), "{name}: verdict disagrees with direct (R-iv)");
            total += 1;
            inverse += usize::from(c.is_inverse());
        }
    }
    require!(total >= 200, "only {total} sets generated");
    require!(inverse > 0 && inverse < total, "no mix of inverse and non-inverse sets");
    Ok(format!("{total} sets, {inverse} inverse, {} not", total - inverse))
}

fn criterion_2() -> Outcome {
    let (mut checked, mut over_budget) = (0, 0);
    for (name, u) in fixture_sets() {
        let (l, k, _) = match k_ideal_in_l(&u, BUDGET) {
            Ok(x) => x,
            Err(e) if e.is_size_limit() => {
                over_budget += 1;
                continue;
            }
            Err(e) => return Err(format!("{name}: {e}")),
        };
        for (label, m) in [("L", &l), ("K", &k)] {
            let again = invcorr::semigroup::recognize_inverse(m.semigroup().table().clone()).map_err(err)?;
            for i in 0..m.order() {
                let adj = m.index_of(&adjoint(m.map(i)).fwd);
                require!(adj == Some(again.inv(i)), "{name}: {label} inverse of {i} is not its adjoint");
            }
        }
        let idem: HashSet<Vec<usize>> =
            k.semigroup().idempotents().iter().map(|&e| k.map(e).fwd.clone()).collect();
        let omegas: HashSet<Vec<usize>> = u
            .elements()
            .map(|x| u.elements().map(|y| u.act(x, u.pair(x, y))).collect())
            .collect();
        require!(idem == omegas, "{name}: E(K(U)) differs from the ω_(u,u)");
        checked += 1;
    }
    require!(checked > 0, "no set within budget");
    Ok(format!("{checked} sets, {over_budget} over budget"))
}

fn criterion_3() -> Outcome {
    let sets = fixture_sets();
    let mut pairs = 0;
    for (nu, u) in &sets {
        for (nv, v) in &sets {
            if u.semigroup() != v.semigroup() {
                continue;
            }
            let (l, _) = l_biset(u, v, BUDGET).map_err(|e| format!("L({nu},{nv}): {e}"))?;
            let (k, _) = k_biset(u, v).map_err(|e| format!("K({nu},{nv}): {e}"))?;
            for (label, m) in [("L", &l), ("K", &k)] {
                let r = check_partial_morita(m).map_err(err)?;
                require!(r.passed(), "{label}({nu},{nv}): {r}");
            }
            require!(
                l.left_semigroup().order() == l_semigroup(v, BUDGET).map_err(err)?.order(),
                "L({nu},{nv}) has the wrong left semigroup"
            );
            pairs += 1;
        }
    }
    require!(pairs >= 20, "only {pairs} pairs");
    Ok(format!("{pairs} pairs"))
}

/// Correspondences between fixtures: identities, from_hom, enlargements and
/// their opposites.
fn correspondence_pool(hom_limit: usize) -> Vec<(String, InverseCorrespondence)> {
    let fx = fixture_arcs();
    let mut pool = Vec::new();
    for s in &fx {
        pool.push((format!("id({})", s.name()), InverseCorrespondence::identity(s)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for s in &fx {
        for t in &fx {
            let all = homomorphisms(s, t, 10_000);
            let picked: Vec<&Vec<usize>> = all.choose_multiple(&mut rng, hom_limit).collect();
            for (i, h) in picked.into_iter().enumerate() {
                if let Ok((c, _)) = from_hom(s, t, h) {
                    pool.push((format!("hom{i}({}→{})", s.name(), t.name()), c));
                }
            }
        }
    }
    for s in &fx {
        for (i, m) in enlargements(s).into_iter().enumerate() {
            pool.push((format!("enl{i}({})", s.name()), InverseCorrespondence::from_partial_morita(&m)));
            if let Ok(op) = opposite(&m) {
                pool.push((format!("op-enl{i}({})", s.name()), InverseCorrespondence::from_partial_morita(&op)));
            }
        }
    }
    pool
}

fn criterion_4() -> Outcome {
    let pool = correspondence_pool(3);
    let mut composable: Vec<(usize, usize)> = (0..pool.len())
        .flat_map(|i| (0..pool.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| pool[i].1.right_semigroup() == pool[j].1.left_semigroup())
        .collect();
    composable.shuffle(&mut ChaCha8Rng::seed_from_u64(40));
    composable.truncate(400);
    let (mut pairs, mut right_degenerate, mut largest) = (0, 0, 0);
    for &(i, j) in &composable {
        let ((n1, c1), (n2, c2)) = (&pool[i], &pool[j]);
        {
            let t = tensor(c1, c2).map_err(|e| format!("{n1} ⊗ {n2}: {e}"))?;
            let c = t.correspondence();
            largest = largest.max(c.size());
            require!(check_right_regular(c.right_set()).passed(), "{n1} ⊗ {n2}: not regular");
            require!(inverse_conditions(c.right_set()).is_inverse(), "{n1} ⊗ {n2}: not inverse");
            require!(check_correspondence(c).passed(), "{n1} ⊗ {n2}: not a correspondence");
            if c1.is_non_degenerate() {
                require!(c.is_non_degenerate(), "{n1} ⊗ {n2}: non-degeneracy of the left factor is lost");
            }
            if c2.is_non_degenerate() && !c.is_non_degenerate() {
                right_degenerate += 1;
            }
            pairs += 1;
        }
    }
    require!(pairs >= 50, "only {pairs} pairs");

    let fx = fixture_arcs();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut hom_pairs = 0;
    'outer: for s in &fx {
        for t in &fx {
            for r in &fx {
                let h12 = homomorphisms(s, t, 10_000);
                let h23 = homomorphisms(t, r, 10_000);
                for h1 in h12.choose_multiple(&mut rng, 2) {
                    for h2 in h23.choose_multiple(&mut rng, 2) {
                        let (u1, _) = from_hom(s, t, h1).map_err(err)?;
                        let (u2, _) = from_hom(t, r, h2).map_err(err)?;
                        let comp: Vec<usize> = h1.iter().map(|&x| h2[x]).collect();
                        let (u21, _) = from_hom(s, r, &comp).map_err(err)?;
                        let prod = tensor(&u1, &u2).map_err(err)?;
                        require!(
                            find_correspondence_isomorphism(prod.correspondence(), &u21).map_err(err)?.is_some(),
                            "U_θ1 ⊗ U_θ2 ≇ U_θ2θ1 for {}→{}→{}",
                            s.name(),
                            t.name(),
                            r.name()
                        );
                        hom_pairs += 1;
                        if hom_pairs >= 150 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    require!(hom_pairs >= 10, "only {hom_pairs} hom pairs");
    Ok(format!(
        "{pairs} tensor pairs (largest {largest}), {hom_pairs} hom pairs; right factor non-degenerate but product degenerate: {right_degenerate}"
    ))
}

fn criterion_5() -> Outcome {
    let pool = correspondence_pool(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut chains: Vec<[usize; 4]> = Vec::new();
    let mut kinds = HashSet::new();
    let mut attempts = 0;
    while chains.len() < 24 && attempts < 10_000 {
        attempts += 1;
        let mut chain = vec![rng.gen_range(0..pool.len())];
        while chain.len() < 4 {
            let last = &pool[*chain.last().unwrap()].1;
            let next: Vec<usize> =
                (0..pool.len()).filter(|&j| pool[j].1.left_semigroup() == last.right_semigroup()).collect();
            chain.push(*next.choose(&mut rng).expect("the identity always composes"));
        }
        let chain = [chain[0], chain[1], chain[2], chain[3]];
        if !chains.contains(&chain) {
            // Keep the product sizes small enough for the pentagon.
            let size: usize = chain.iter().map(|&i| pool[i].1.size()).product();
            if size <= 600 {
                chains.push(chain);
            }
        }
    }
    for chain in &chains {
        let [a, b, c, d] = chain.map(|i| &pool[i].1);
        let names: Vec<&str> = chain.iter().map(|&i| pool[i].0.as_str()).collect();
        for (n, _) in chain.iter().map(|&i| &pool[i]) {
            let head = n.split('(').next().unwrap();
            kinds.insert(head.trim_end_matches(|c: char| c.is_ascii_digit()).to_string());
        }
        require!(check_triangle(a, b).map_err(err)?, "triangle fails on {names:?}");
        require!(check_pentagon(a, b, c, d).map_err(err)?, "pentagon fails on {names:?}");
    }
    require!(chains.len() >= 10, "only {} chains", chains.len());
    for k in ["id", "hom", "enl", "op-enl"] {
        require!(kinds.contains(k), "no chain uses {k}");
    }
    let largest = chains.iter().map(|c| c.iter().map(|&i| pool[i].1.size()).product::<usize>()).max();
    Ok(format!("{} chains, largest |U1×U2×U3×U4| = {}", chains.len(), largest.unwrap_or(0)))
}

fn morita_pool() -> Vec<(String, PartialMoritaEquivalence)> {
    let mut pool = Vec::new();
    for s in fixture_arcs() {
        pool.push((format!("id({})", s.name()), identity_biset(&s)));
        for (i, m) in enlargements(&s).into_iter().enumerate() {
            pool.push((format!("enl{i}({})", s.name()), m));
        }
    }
    for (name, u) in fixture_sets() {
        if let Ok(m) = morita_from_set(&u) {
            pool.push((format!("K({name})"), m));
        }
        if let Ok((m, _)) = k_biset(&u, &semigroup_as_right_set(u.semigroup())) {
            pool.push((format!("K({name},T)"), m));
        }
    }
    for nx in 0..=2 {
        for ny in 0..=2 {
            pool.push((format!("pbb({nx},{ny})"), partial_bijection_biset(nx, ny).expect("small biset")));
        }
    }
    let ops: Vec<(String, PartialMoritaEquivalence)> =
        pool.iter().filter_map(|(n, m)| opposite(m).ok().map(|o| (format!("op-{n}"), o))).collect();
    pool.extend(ops);
    pool
}

fn criterion_6() -> Outcome {
    let (mut morita, mut partial) = (0, 0);
    for (name, m) in morita_pool() {
        require!(check_partial_morita(&m).map_err(err)?.passed(), "{name} is not a partial Morita equivalence");
        let verdict = check_morita_biset(&m).map_err(err)? == MoritaVerdict::Morita;
        require!(verdict == m.is_morita(), "{name}: verdict disagrees with fullness of both pairings");
        let cert = morita_to_certificate(&m).and_then(|c| verify_certificate(&c).map(|_| c));
        require!(verdict == cert.is_ok(), "{name}: MORITA is {verdict} but certificate is {}", cert.is_ok());
        match cert {
            Ok(cert) => {
                let back = certificate_to_morita(&cert).map_err(err)?;
                let iso = back == m
                    || find_correspondence_isomorphism(
                        &InverseCorrespondence::from_partial_morita(&back),
                        &InverseCorrespondence::from_partial_morita(&m),
                    )
                    .map_err(err)?
                    .is_some();
                require!(iso, "{name}: certificate does not round-trip");
                morita += 1;
            }
            Err(_) => partial += 1,
        }
    }
    require!(morita > 0 && partial > 0, "pool lacks Morita ({morita}) or partial-only ({partial}) cases");
    Ok(format!("{morita} Morita, {partial} partial only"))
}

fn criterion_7() -> Outcome {
    let mut with_identity = 0;
    for s in fixture_arcs() {
        let m = multiplier(&s, BUDGET).map_err(|e| format!("M({}): {e}", s.name()))?;
        if s.identity().is_some() {
            require!(find_isomorphism(&s, m.semigroup()).is_some(), "M({}) ≇ {}", s.name(), s.name());
            with_identity += 1;
        }
    }
    let mut kasparov = 0;
    for (name, u) in fixture_sets() {
        match verify_kasparov(&u, BUDGET) {
            Ok(_) => kasparov += 1,
            Err(e) if e.is_size_limit() => {}
            Err(e) => return Err(format!("M(K({name})) ≇ L({name}): {e}")),
        }
    }

    // θ̃ injective ⇔ θ injective, and θ̃ unique, over every essential ideal of
    // every fixture and homomorphisms from the ideal into the fixtures.
    let fx = fixture_arcs();
    let (mut cases, mut injective, mut unique) = (0, 0, 0);
    for sup in &fx {
        for members in ideals(sup) {
            let ideal = TwoSidedIdeal::new(sup, members.iter().copied()).map_err(err)?;
            if !is_essential_ideal(sup, &ideal) {
                continue;
            }
            let (sub, inc) = subsemigroup(sup, &members).map_err(err)?;
            let sub = arc(sub);
            for t in &fx {
                for h in homomorphisms(&sub, t, 3) {
                    let (c, _) = from_hom(&sub, t, &h).map_err(err)?;
                    let ext = extend_hom(sup, &inc, &c).map_err(err)?;
                    let theta_inj = is_injective(sub.elements().map(|a| c.theta(a)));
                    let ext_inj = is_injective(ext.iter());
                    require!(
                        theta_inj == ext_inj,
                        "{} ⊇ {members:?} → {}: θ injective {theta_inj}, θ̃ injective {ext_inj}",
                        sup.name(),
                        t.name()
                    );
                    cases += 1;
                    injective += usize::from(theta_inj);
                    match count_extensions(sup, &inc, &c, BUDGET, 10_000) {
                        Ok(n) => {
                            require!(n == 1, "{} ⊇ {members:?}: {n} extensions", sup.name());
                            unique += 1;
                        }
                        Err(e) if e.is_size_limit() => {}
                        Err(e) => return Err(err(e)),
                    }
                }
            }
        }
    }
    require!(injective > 0 && injective < cases, "biconditional not exercised on both sides");
    require!(unique > 0, "uniqueness never checked");
    Ok(format!(
        "{with_identity} unital fixtures, {kasparov} Kasparov sets, {cases} extensions ({injective} injective, {unique} counted)"
    ))
}

/// Partial McAlister functions on a two-element index set over small fixtures.
fn small_mcalister() -> Vec<(String, invcorr::rees::PartialMcAlisterFunction)> {
    let mut out = Vec::new();
    for t in fixture_arcs().into_iter().filter(|t| t.order() <= 3) {
        let n = t.order();
        let mut found = 0;
        for code in 0..n.pow(4) {
            let d = |k: u32| (code / n.pow(k)) % n;
            let rows = vec![vec![d(0), d(1)], vec![d(2), d(3)]];
            if let Ok(pm) = check_mcalister(&t, &rows) {
                out.push((format!("{}{rows:?}", t.name()), pm));
                found += 1;
                if found == 6 {
                    break;
                }
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut sets = 0;
    let mut functions = Vec::new();
    for (name, u) in fixture_sets() {
        roundtrip_checks(&u, BUDGET).map_err(|e| format!("{name}: {e}"))?;
        functions.push((format!("p_{name}"), mcalister_from_set(&u).map_err(err)?));
        sets += 1;
    }
    functions.extend(small_mcalister());
    for (name, pm) in &functions {
        let up = inverse_set_from_p(pm, BUDGET).map_err(|e| format!("U_{name}: {e}"))?;
        im_to_k(&up).map_err(|e| format!("{name}: {e}"))?;
        let k = k_semigroup(up.right_set()).map_err(err)?;
        require!(
            find_isomorphism(up.inverse_rees().semigroup(), k.semigroup()).is_some(),
            "{name}: IM ≇ K(U_p) by search"
        );
    }
    let t1 = arc(fixtures::t1());
    let pm = check_mcalister(&t1, &[vec![0, 0], vec![0, 0]]).map_err(err)?;
    let im = inverse_rees(&pm, BUDGET).map_err(err)?;
    require!(im.regular().order() == 4, "RM(T1, 2, e) has order {}", im.regular().order());
    require!(im.semigroup().order() == 1, "IM(T1, 2, e) has order {}", im.semigroup().order());
    Ok(format!("{sets} set round trips, {} McAlister functions, T1 collapses 4 → 1", functions.len()))
}

/// Permutations σ of the carrier with σ(s·u) = s·σ(u) and ⟨σu|σv⟩ = ⟨u|v⟩.
fn automorphisms(l: &LeftSet) -> usize {
    fn extend(l: &LeftSet, perm: &mut Vec<usize>, used: &mut [bool], count: &mut usize) {
        let m = l.size();
        if perm.len() == m {
            let ok = l.elements().all(|u| {
                l.semigroup().elements().all(|s| perm[l.act(s, u)] == l.act(s, perm[u]))
                    && l.elements().all(|v| l.pair(perm[u], perm[v]) == l.pair(u, v))
            });
            *count += usize::from(ok);
            return;
        }
        for x in 0..m {
            if !used[x] {
                used[x] = true;
                perm.push(x);
                extend(l, perm, used, count);
                perm.pop();
                used[x] = false;
            }
        }
    }
    let mut count = 0;
    extend(l, &mut Vec::new(), &mut vec![false; l.size()], &mut count);
    count
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    for g in [arc(fixtures::z2()), arc(fixtures::z3())] {
        let reference = semigroup_as_left_set(&g);
        let expected = (1..=g.order()).product::<usize>() / automorphisms(&reference);
        for m in 1..=6 {
            let sets = enumerate_left_inverse_sets(&g, m, 200_000_000).map_err(err)?;
            for l in &sets {
                require!(
                    find_left_set_isomorphism(l, &reference).map_err(err)?.is_some(),
                    "{}: a left inverse set on {m} points is not isomorphic to G",
                    g.name()
                );
            }
            let want = if m == g.order() { expected } else { 0 };
            require!(sets.len() == want, "{}: {} sets on {m} points, expected {want}", g.name(), sets.len());
            total += sets.len();
        }
    }
    Ok(format!("{total} labelled left inverse sets, all isomorphic to G"))
}

fn criterion_10() -> Outcome {
    let pool: Vec<InverseSemigroup> = fixtures::all().into_iter().filter(|s| s.order() >= 2).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let opts = Options {
        scope: Scope::All,
        budget: BUDGET,
    };
    let samples = 500;
    let mut detected = 0;
    for _ in 0..samples {
        let s = pool.choose(&mut rng).unwrap();
        let n = s.order();
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let old = s.mul(a, b);
        let new = (old + rng.gen_range(1..n)) % n;
        let table = s.table().with_entry(a, b, new).map_err(err)?;
        let verdicts = verify_semigroup(s.name(), &table, opts);
        detected += usize::from(verdicts.iter().any(|v| v.status == Status::Fail));
    }
    let rate = detected as f64 / samples as f64;
    require!(rate >= 0.95, "detected {detected}/{samples}");
    Ok(format!("detected {detected}/{samples} ({:.1}%)", rate * 100.0))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("axiom equivalence", 10, criterion_1),
        ("K/L theorems", 60, criterion_2),
        ("L(U,V) structure", 60, criterion_3),
        ("tensor soundness", 30, criterion_4),
        ("bicategory coherence", 30, criterion_5),
        ("Morita ⇔ equivalence", 60, criterion_6),
        ("multiplier", 60, criterion_7),
        ("Rees round trips", 30, criterion_8),
        ("group classification", 30, criterion_9),
        ("mutation sensitivity", 120, criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, bound, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(bound);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time bound; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(status == "FAIL");
        println!(
            "criterion {:>2} {status} {name} [{:.2}s < {bound}s] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
