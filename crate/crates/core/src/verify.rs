//! The theorem suite: every structural result of the library run as a
//! pass/fail check on fixtures and on loaded structures.

use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::adjointable::{k_ideal_in_l, k_semigroup, morita_from_set};
use crate::bicategory::{
    certificate_to_morita, check_morita, check_morita_biset, check_pentagon, check_triangle, identity_biset,
    left_unitor, morita_to_certificate, opposite, right_unitor, verify_certificate, MoritaVerdict,
};
use crate::correspondence::{
    check_correspondence, find_correspondence_isomorphism, recover_partial_morita, tensor, InverseCorrespondence,
};
use crate::error::Error;
use crate::fixtures;
use crate::inverse_set::generate::random_regular_sets;
use crate::inverse_set::{
    check_left_regular, check_partial_morita, check_right_regular, inverse_conditions, semigroup_as_left_set,
    semigroup_as_right_set, AxiomReport, PartialMoritaEquivalence, RightSet,
};
use crate::io::{self, Document, LoadError};
use crate::multiplier::{multiplier, verify_kasparov};
use crate::rees::{
    check_mcalister, gamma_is_minimum, im_to_k, inverse_rees, inverse_set_from_p, mcalister_from_set,
    mcalister_report, recover_from_morita, roundtrip_checks,
};
use crate::report::{Status, Verdict};
use crate::semigroup::{find_isomorphism, order_conditions, recognize_inverse, InverseSemigroup, MulTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    SemigroupCore,
    InverseSet,
    Adjointable,
    Correspondence,
    Bicategory,
    Multiplier,
    Rees,
}

impl Scope {
    pub const MODULES: [Scope; 7] = [
        Scope::SemigroupCore,
        Scope::InverseSet,
        Scope::Adjointable,
        Scope::Correspondence,
        Scope::Bicategory,
        Scope::Multiplier,
        Scope::Rees,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::SemigroupCore => "semigroup-core",
            Scope::InverseSet => "inverse-set",
            Scope::Adjointable => "adjointable",
            Scope::Correspondence => "correspondence",
            Scope::Bicategory => "bicategory-morita",
            Scope::Multiplier => "multiplier",
            Scope::Rees => "rees",
        }
    }

    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "bicategory" {
            return Ok(Scope::Bicategory);
        }
        std::iter::once(Scope::All)
            .chain(Scope::MODULES)
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown scope '{s}'"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub scope: Scope,
    pub budget: u64,
}

/// Upper bound on congruences enumerated for the γ-minimality check.
const CONGRUENCE_LIMIT: usize = 100_000;

struct Fail {
    detail: String,
    witness: Option<Vec<usize>>,
    budget: bool,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail {
            budget: e.is_size_limit(),
            detail: format!("{}: {e}", e.code()),
            witness: None,
        }
    }
}

type Check = Result<(), Fail>;

fn fail(detail: impl Into<String>) -> Fail {
    Fail {
        detail: detail.into(),
        witness: None,
        budget: false,
    }
}

fn ensure(cond: bool, detail: &str) -> Check {
    if cond {
        Ok(())
    } else {
        Err(fail(detail))
    }
}

fn report_passes(r: &AxiomReport) -> Check {
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(Fail {
            detail: format!("{} violations, first {}", r.violations.len(), v.axiom),
            witness: Some(v.witness.clone()),
            budget: false,
        }),
    }
}

struct Runner {
    opts: Options,
    subject: String,
    out: Vec<Verdict>,
}

impl Runner {
    fn new(opts: Options, subject: &str) -> Self {
        Runner {
            opts,
            subject: subject.to_string(),
            out: Vec::new(),
        }
    }

    fn record(&mut self, scope: Scope, check: &str, result: Check) -> bool {
        let (status, witness, detail) = match result {
            Ok(()) => (Status::Pass, None, None),
            Err(f) => (
                if f.budget { Status::BudgetExceeded } else { Status::Fail },
                f.witness,
                Some(f.detail),
            ),
        };
        self.out.push(Verdict {
            scope: scope.as_str().to_string(),
            check: check.to_string(),
            subject: self.subject.clone(),
            status,
            witness,
            detail,
        });
        status == Status::Pass
    }

    /// Runs `f` when `scope` is selected.
    fn run(&mut self, scope: Scope, check: &str, f: impl FnOnce() -> Check) {
        if self.opts.scope.includes(scope) {
            let result = f();
            self.record(scope, check, result);
        }
    }

    fn skip(&mut self, scope: Scope, check: &str, reason: &str) {
        if self.opts.scope.includes(scope) {
            self.out.push(Verdict {
                scope: scope.as_str().to_string(),
                check: check.to_string(),
                subject: self.subject.clone(),
                status: Status::Skipped,
                witness: None,
                detail: Some(reason.to_string()),
            });
        }
    }
}

fn certificate_round_trip(m: &PartialMoritaEquivalence) -> Check {
    let cert = morita_to_certificate(m)?;
    verify_certificate(&cert)?;
    ensure(certificate_to_morita(&cert)? == *m, "certificate does not round-trip")
}

fn gamma_check(r: &mut Runner, im: Result<crate::rees::InverseRees, Error>) {
    let check = "gamma-minimum";
    match im.and_then(|im| gamma_is_minimum(&im, CONGRUENCE_LIMIT)) {
        Ok(None) => r.skip(Scope::Rees, check, "RM order above the enumeration limit"),
        Ok(Some(min)) => r.run(Scope::Rees, check, || ensure(min, "an inverse congruence lies below γ")),
        Err(e) => r.run(Scope::Rees, check, || Err(e.into())),
    }
}

/// Checks for a right set; the rest are skipped if it is not inverse.
fn set_checks(r: &mut Runner, u: &RightSet) {
    let budget = r.opts.budget;
    let regular = check_right_regular(u);
    let is_regular = regular.passed();
    r.run(Scope::InverseSet, "right-regular", || report_passes(&regular));
    let conditions = inverse_conditions(u);
    r.run(Scope::InverseSet, "inverse-conditions-agree", || {
        ensure(conditions.agree(), "the four inverse conditions disagree")
    });
    if !is_regular || !conditions.is_inverse() {
        r.skip(Scope::Adjointable, "set-theorems", "set is not inverse");
        return;
    }
    r.run(Scope::Adjointable, "k-ideal-in-l", || k_ideal_in_l(u, budget).map(drop).map_err(Fail::from));
    let m = morita_from_set(u);
    r.run(Scope::Adjointable, "morita-from-set", || {
        let m = m.clone()?;
        report_passes(&check_partial_morita(&m)?)?;
        ensure(check_morita_biset(&m)? == MoritaVerdict::Morita, "K(U) to ⟨U|U⟩ is not Morita")
    });
    r.run(Scope::Bicategory, "opposite-involution", || {
        let m = m.clone()?;
        ensure(opposite(&opposite(&m)?)? == m, "double opposite differs")
    });
    r.run(Scope::Bicategory, "certificate-round-trip", || certificate_round_trip(&m.clone()?));
    r.run(Scope::Multiplier, "kasparov", || verify_kasparov(u, budget).map(drop).map_err(Fail::from));
    r.run(Scope::Rees, "round-trip", || roundtrip_checks(u, budget).map(drop).map_err(Fail::from));
    r.run(Scope::Rees, "recover-from-morita", || {
        recover_from_morita(&m.clone()?, budget).map(drop).map_err(Fail::from)
    });
}

fn semigroup_checks(r: &mut Runner, s: &Arc<InverseSemigroup>) {
    let budget = r.opts.budget;
    let name = r.subject.clone();
    if let Some(reference) = fixtures::construct(&name) {
        r.run(Scope::SemigroupCore, "fixture-anchor", || {
            ensure(find_isomorphism(&reference, s).is_some(), "table is not isomorphic to the named fixture")
        });
    }
    r.run(Scope::SemigroupCore, "natural-order", || {
        for a in s.elements() {
            for b in s.elements() {
                let c = order_conditions(s, a, b);
                if c.iter().any(|&x| x != c[0]) || c[0] != s.leq(a, b) {
                    return Err(Fail {
                        witness: Some(vec![a, b]),
                        ..fail("order descriptions disagree")
                    });
                }
                if a != b && s.leq(a, b) && s.leq(b, a) {
                    return Err(Fail {
                        witness: Some(vec![a, b]),
                        ..fail("order is not antisymmetric")
                    });
                }
            }
        }
        Ok(())
    });
    r.run(Scope::SemigroupCore, "idempotents-commute", || {
        let e = s.idempotents();
        for &a in e {
            for &b in e {
                if s.mul(a, b) != s.mul(b, a) {
                    return Err(Fail {
                        witness: Some(vec![a, b]),
                        ..fail("idempotents do not commute")
                    });
                }
            }
        }
        Ok(())
    });
    r.run(Scope::SemigroupCore, "inverse-involution", || {
        for a in s.elements() {
            for b in s.elements() {
                if s.inv(s.mul(a, b)) != s.mul(s.inv(b), s.inv(a)) || s.inv(s.inv(a)) != a {
                    return Err(Fail {
                        witness: Some(vec![a, b]),
                        ..fail("(ab)* != b*a*")
                    });
                }
            }
        }
        Ok(())
    });

    let u = semigroup_as_right_set(s);
    set_checks(r, &u);
    r.run(Scope::InverseSet, "left-regular", || report_passes(&check_left_regular(&semigroup_as_left_set(s))));
    r.run(Scope::InverseSet, "generated-sets", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for v in random_regular_sets(s, &mut rng, 8, 4) {
            if !inverse_conditions(&v).agree() {
                return Err(fail("inverse conditions disagree on a generated set"));
            }
        }
        Ok(())
    });
    r.run(Scope::Adjointable, "k-of-semigroup", || {
        let k = k_semigroup(&u)?;
        ensure(find_isomorphism(k.semigroup(), s).is_some(), "K(S) is not isomorphic to S")
    });

    let id = InverseCorrespondence::identity(s);
    r.run(Scope::Correspondence, "identity-correspondence", || {
        report_passes(&check_correspondence(&id))?;
        ensure(id.is_non_degenerate(), "identity correspondence is degenerate")
    });
    r.run(Scope::Correspondence, "identity-tensor", || {
        let t = tensor(&id, &id)?;
        ensure(
            find_correspondence_isomorphism(t.correspondence(), &id)?.is_some(),
            "S ⊗ S is not isomorphic to S",
        )
    });
    r.run(Scope::Correspondence, "recover-partial-morita", || {
        let (_, ideal) = recover_partial_morita(&id)?;
        ensure(ideal.len() == s.order(), "recovered ideal is not all of S")
    });
    r.run(Scope::Bicategory, "triangle", || ensure(check_triangle(&id, &id)?, "triangle does not commute"));
    r.run(Scope::Bicategory, "pentagon", || {
        ensure(check_pentagon(&id, &id, &id, &id)?, "pentagon does not commute")
    });
    r.run(Scope::Bicategory, "identity-certificate", || certificate_round_trip(&identity_biset(s)));
    r.run(Scope::Multiplier, "multiplier", || {
        let m = multiplier(s, budget)?;
        if s.identity().is_some() {
            ensure(find_isomorphism(s, m.semigroup()).is_some(), "M(S) is not isomorphic to S")?;
        }
        Ok(())
    });
    let im = mcalister_from_set(&u).and_then(|pm| inverse_rees(&pm, budget));
    r.run(Scope::Rees, "im-of-pairing", || {
        let im = im.clone()?;
        ensure(find_isomorphism(im.semigroup(), s).is_some(), "IM(S, S, p_S) is not isomorphic to S")
    });
    gamma_check(r, im);
}

/// All checks on one multiplication table. A table named after a fixture
/// must also be isomorphic to that fixture's definition.
pub fn verify_semigroup(name: &str, table: &MulTable, opts: Options) -> Vec<Verdict> {
    let mut r = Runner::new(opts, name);
    let assoc = match table.non_associative_triple() {
        None => Ok(()),
        Some((a, b, c)) => Err(Fail {
            witness: Some(vec![a, b, c]),
            ..fail("NOT_ASSOCIATIVE")
        }),
    };
    if !r.record(Scope::SemigroupCore, "associative", assoc) {
        return r.out;
    }
    let s = match recognize_inverse(table.clone()) {
        Ok(s) => Arc::new(s.with_name(name)),
        Err(e) => {
            let witness = match &e {
                Error::NotRegular(x) => Some(vec![*x]),
                Error::NotUnique { element, .. } => Some(vec![*element]),
                _ => None,
            };
            r.record(Scope::SemigroupCore, "inverse", Err(Fail { witness, ..Fail::from(e) }));
            return r.out;
        }
    };
    r.record(Scope::SemigroupCore, "inverse", Ok(()));
    semigroup_checks(&mut r, &s);
    r.out
}

/// The default sweep over every built-in fixture.
pub fn verify_fixtures(opts: Options) -> Vec<Verdict> {
    fixtures::all()
        .iter()
        .flat_map(|s| verify_semigroup(s.name(), s.table(), opts))
        .collect()
}

fn correspondence_checks(r: &mut Runner, c: &InverseCorrespondence) {
    r.run(Scope::Correspondence, "axioms", || report_passes(&check_correspondence(c)));
    r.run(Scope::Bicategory, "right-unitor", || right_unitor(c).map(drop).map_err(Fail::from));
    if c.is_non_degenerate() {
        r.run(Scope::Bicategory, "left-unitor", || left_unitor(c).map(drop).map_err(Fail::from));
        let id = InverseCorrespondence::identity(c.right_semigroup());
        r.run(Scope::Bicategory, "triangle", || ensure(check_triangle(c, &id)?, "triangle does not commute"));
    } else {
        r.skip(Scope::Bicategory, "left-unitor", "correspondence is degenerate");
    }
    let verdict = check_morita(c);
    r.run(Scope::Bicategory, "morita-verdict", || verdict.map(drop).map_err(Fail::from));
}

fn morita_checks(r: &mut Runner, m: &PartialMoritaEquivalence) {
    let budget = r.opts.budget;
    let axioms = check_partial_morita(m);
    r.run(Scope::InverseSet, "partial-morita", || report_passes(&axioms.clone()?));
    if !matches!(axioms, Ok(ref a) if a.passed()) {
        return;
    }
    r.run(Scope::Bicategory, "verdict-consistency", || check_morita_biset(m).map(drop).map_err(Fail::from));
    r.run(Scope::Bicategory, "certificate-equivalence", || {
        let cert = morita_to_certificate(m);
        ensure(cert.is_ok() == m.is_morita(), "certificate exists exactly for Morita equivalences")?;
        if m.is_morita() {
            certificate_round_trip(m)?;
        }
        Ok(())
    });
    r.run(Scope::Bicategory, "opposite-involution", || {
        ensure(opposite(&opposite(m)?)? == *m, "double opposite differs")
    });
    if m.is_morita() {
        r.run(Scope::Rees, "recover-from-morita", || recover_from_morita(m, budget).map(drop).map_err(Fail::from));
    }
    correspondence_checks(r, &InverseCorrespondence::from_partial_morita(m));
}

/// Checks matching the kind of a loaded document.
pub fn verify_document(subject: &str, doc: &Document, opts: Options) -> Result<Vec<Verdict>, LoadError> {
    let mut r = Runner::new(opts, subject);
    match doc {
        Document::Semigroup(f) => return Ok(verify_semigroup(&f.name, &io::semigroup_table(f)?, opts)),
        Document::Set(f) => set_checks(&mut r, &io::right_set(f)?),
        Document::Correspondence(f) => {
            let c = io::correspondence(f)?;
            set_checks(&mut r, c.right_set());
            correspondence_checks(&mut r, &c);
        }
        Document::Morita(f) => {
            let m = io::morita(f)?;
            set_checks(&mut r, m.right_set());
            morita_checks(&mut r, &m);
        }
        Document::McAlister(f) => {
            let (t, rows) = io::mcalister_parts(f)?;
            let report = mcalister_report(&t, &rows)?;
            let ok = report.passed();
            r.run(Scope::Rees, "axioms", || report_passes(&report));
            if ok {
                let pm = check_mcalister(&t, &rows)?;
                r.run(Scope::Rees, "up-construction", || {
                    let up = inverse_set_from_p(&pm, opts.budget)?;
                    im_to_k(&up).map(drop).map_err(Fail::from)
                });
                gamma_check(&mut r, inverse_rees(&pm, opts.budget));
            }
        }
    }
    Ok(r.out)
}
