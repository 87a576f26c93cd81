use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};

use invcorr::adjointable::{k_semigroup, l_semigroup};
use invcorr::bicategory::{check_morita_biset, identity_biset, opposite};
use invcorr::correspondence::{
    check_correspondence, find_correspondence_isomorphism, from_hom, tensor, InverseCorrespondence,
};
use invcorr::fixtures;
use invcorr::inverse_set::{
    check_partial_morita, check_right_regular, direct_sum, enlargement_set, find_set_isomorphism,
    inverse_conditions, partial_bijection_biset, presheaf_set, semigroup_as_right_set, AxiomReport,
    PartialMoritaEquivalence, RightSet,
};
use invcorr::io::{self, Document, Kind, LoadError};
use invcorr::multiplier::multiplier;
use invcorr::rees::{check_mcalister, inverse_rees, inverse_set_from_p, mcalister_from_set, mcalister_report};
use invcorr::report::{Report, Status, Verdict};
use invcorr::semigroup::{find_isomorphism, recognize_inverse, symmetric_inverse_monoid, InverseSemigroup};
use invcorr::verify::{verify_document, verify_fixtures, Options, Scope};
use invcorr::Error;

#[derive(Debug)]
pub enum CliError {
    Load(LoadError),
    Compute(Error),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Load(e) => e.code(),
            CliError::Compute(e) => e.code(),
            CliError::Usage(_) => "USAGE",
            CliError::Io(_) => "IO_ERROR",
        }
    }

    /// 1 for internal inconsistencies, 3 for exhausted budgets, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Compute(e) | CliError::Load(LoadError::Structure(e)) => Some(e),
            _ => None,
        };
        match core {
            Some(Error::SizeLimit(_)) => 3,
            Some(Error::Inconsistency(_)) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Load(e) => write!(f, "{e}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::Load(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn verdict(scope: &str, check: &str, subject: &str, status: Status) -> Verdict {
    Verdict {
        scope: scope.to_string(),
        check: check.to_string(),
        subject: subject.to_string(),
        status,
        witness: None,
        detail: None,
    }
}

/// One verdict per violation, or a single pass.
fn axiom_verdicts(report: &mut Report, scope: &str, subject: &str, axioms: &AxiomReport) {
    if axioms.passed() {
        report.push(verdict(scope, "axioms", subject, Status::Pass));
    }
    for v in &axioms.violations {
        report.push(Verdict {
            witness: Some(v.witness.clone()),
            ..verdict(scope, &v.axiom, subject, Status::Fail)
        });
    }
}

fn error_verdict(scope: &str, check: &str, subject: &str, e: &Error) -> Verdict {
    Verdict {
        detail: Some(format!("{}: {e}", e.code())),
        ..verdict(scope, check, subject, Status::Fail)
    }
}

pub fn check(echo: Vec<String>, budget: u64, path: &Path, kind: Option<&str>) -> Result<Report> {
    let kind = kind.map(str::parse::<Kind>).transpose()?;
    let doc = io::load(path, kind)?;
    let subject = path.display().to_string();
    let mut report = Report::new(echo, budget);
    match &doc {
        Document::Semigroup(f) => {
            let table = io::semigroup_table(f)?;
            if let Some((a, b, c)) = table.non_associative_triple() {
                report.push(Verdict {
                    witness: Some(vec![a, b, c]),
                    detail: Some("NOT_ASSOCIATIVE".into()),
                    ..verdict("semigroup-core", "associative", &subject, Status::Fail)
                });
            } else {
                report.push(verdict("semigroup-core", "associative", &subject, Status::Pass));
                match recognize_inverse(table) {
                    Ok(_) => report.push(verdict("semigroup-core", "inverse", &subject, Status::Pass)),
                    Err(e) => report.push(error_verdict("semigroup-core", "inverse", &subject, &e)),
                }
            }
        }
        Document::Set(f) => {
            let u = io::right_set(f)?;
            axiom_verdicts(&mut report, "inverse-set", &subject, &check_right_regular(&u));
            let c = inverse_conditions(&u);
            report.push(Verdict {
                detail: Some(format!("conditions {:?}", c.verdicts())),
                ..verdict(
                    "inverse-set",
                    "inverse-conditions-agree",
                    &subject,
                    if c.agree() { Status::Pass } else { Status::Fail },
                )
            });
        }
        Document::Correspondence(f) => {
            let c = io::correspondence(f)?;
            axiom_verdicts(&mut report, "correspondence", &subject, &check_correspondence(&c));
        }
        Document::Morita(f) => {
            let m = io::morita(f)?;
            match check_partial_morita(&m) {
                Ok(axioms) => {
                    let passed = axioms.passed();
                    axiom_verdicts(&mut report, "inverse-set", &subject, &axioms);
                    if passed {
                        match check_morita_biset(&m) {
                            Ok(v) => report.push(Verdict {
                                detail: Some(v.to_string()),
                                ..verdict("bicategory-morita", "morita", &subject, Status::Pass)
                            }),
                            Err(e) => report.push(error_verdict("bicategory-morita", "morita", &subject, &e)),
                        }
                    }
                }
                Err(e) => report.push(error_verdict("inverse-set", "partial-morita", &subject, &e)),
            }
        }
        Document::McAlister(f) => {
            let (t, rows) = io::mcalister_parts(f)?;
            let axioms = mcalister_report(&t, &rows)?;
            axiom_verdicts(&mut report, "rees", &subject, &axioms);
            if axioms.passed() {
                let pm = check_mcalister(&t, &rows)?;
                report.push(Verdict {
                    detail: Some(format!("MF5 {}", if pm.is_full() { "holds" } else { "fails" })),
                    ..verdict("rees", "MF5", &subject, Status::Pass)
                });
            }
        }
    }
    report.result = Some(json!({ "kind": doc.kind().as_str() }));
    Ok(report)
}

pub fn verify(echo: Vec<String>, budget: u64, scope: &str, fixtures: bool, paths: &[PathBuf]) -> Result<Report> {
    let scope: Scope = scope.parse().map_err(CliError::Usage)?;
    let opts = Options { scope, budget };
    let mut report = Report::new(echo, budget);
    if fixtures || paths.is_empty() {
        report.extend(verify_fixtures(opts));
    }
    for p in paths {
        let doc = io::load(p, None)?;
        report.extend(verify_document(&p.display().to_string(), &doc, opts)?);
    }
    Ok(report)
}

/// A fixture name becomes the document of the wanted kind built from the
/// semigroup acting on itself; anything else is read as a file.
fn document(arg: &str, want: Kind) -> Result<Document> {
    let Some(s) = fixtures::by_name(arg) else {
        return Ok(io::load(Path::new(arg), None)?);
    };
    let s = Arc::new(s);
    Ok(match want {
        Kind::Semigroup => Document::Semigroup(io::semigroup_file(&s)),
        Kind::Set => Document::Set(io::set_file(&semigroup_as_right_set(&s))),
        Kind::Correspondence => Document::Correspondence(io::correspondence_file(&InverseCorrespondence::identity(&s))),
        Kind::Morita => Document::Morita(io::morita_file(&identity_biset(&s))),
        Kind::McAlister => Document::McAlister(io::mcalister_file(&mcalister_from_set(&semigroup_as_right_set(&s))?)),
    })
}

fn wrong_kind(arg: &str, want: Kind, got: Kind) -> CliError {
    CliError::Usage(format!("{arg}: expected a {want} file, found a {got} file"))
}

fn load_semigroup(arg: &str) -> Result<Arc<InverseSemigroup>> {
    match document(arg, Kind::Semigroup)? {
        Document::Semigroup(f) => {
            Ok(Arc::new(recognize_inverse(io::semigroup_table(&f)?)?.with_name(f.name)))
        }
        d => Err(wrong_kind(arg, Kind::Semigroup, d.kind())),
    }
}

fn load_set(arg: &str) -> Result<RightSet> {
    match document(arg, Kind::Set)? {
        Document::Set(f) | Document::Correspondence(f) | Document::Morita(f) => Ok(io::right_set(&f)?),
        d => Err(wrong_kind(arg, Kind::Set, d.kind())),
    }
}

fn load_correspondence(arg: &str) -> Result<InverseCorrespondence> {
    match document(arg, Kind::Correspondence)? {
        Document::Correspondence(f) | Document::Morita(f) => Ok(io::correspondence(&f)?),
        d => Err(wrong_kind(arg, Kind::Correspondence, d.kind())),
    }
}

fn load_morita(arg: &str) -> Result<PartialMoritaEquivalence> {
    match document(arg, Kind::Morita)? {
        Document::Morita(f) => Ok(io::morita(&f)?),
        d => Err(wrong_kind(arg, Kind::Morita, d.kind())),
    }
}

fn load_mcalister(arg: &str) -> Result<invcorr::rees::PartialMcAlisterFunction> {
    match document(arg, Kind::McAlister)? {
        Document::McAlister(f) => {
            let (t, rows) = io::mcalister_parts(&f)?;
            Ok(check_mcalister(&t, &rows)?)
        }
        d => Err(wrong_kind(arg, Kind::McAlister, d.kind())),
    }
}

fn arity(construction: &str, args: &[String], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{construction} takes {n} argument(s), got {}", args.len())))
    }
}

fn number(arg: &str) -> Result<usize> {
    arg.parse()
        .map_err(|_| CliError::Usage(format!("'{arg}' is not a non-negative integer")))
}

fn list(arg: &str) -> Result<Vec<usize>> {
    if arg.is_empty() {
        return Ok(Vec::new());
    }
    arg.split(',').map(|x| number(x.trim())).collect()
}

fn renamed(s: &InverseSemigroup, name: String) -> InverseSemigroup {
    s.clone().with_name(name)
}

pub fn compute(
    echo: Vec<String>,
    budget: u64,
    construction: &str,
    args: &[String],
    out: Option<&Path>,
) -> Result<Report> {
    let a = |i: usize| args[i].as_str();
    let (doc, summary): (Document, Value) = match construction {
        "L" | "K" => {
            arity(construction, args, 1)?;
            let u = load_set(a(0))?;
            let maps = if construction == "L" { l_semigroup(&u, budget)? } else { k_semigroup(&u)? };
            let s = renamed(maps.semigroup(), format!("{construction}({})", a(0)));
            (Document::Semigroup(io::semigroup_file(&s)), json!({ "order": s.order() }))
        }
        "tensor" => {
            arity(construction, args, 2)?;
            let t = tensor(&load_correspondence(a(0))?, &load_correspondence(a(1))?)?;
            let c = t.correspondence();
            (
                Document::Correspondence(io::correspondence_file(c)),
                json!({ "size": c.size(), "non_degenerate": c.is_non_degenerate() }),
            )
        }
        "multiplier" => {
            arity(construction, args, 1)?;
            let m = multiplier(&load_semigroup(a(0))?, budget)?;
            let s = renamed(m.semigroup(), format!("M({})", a(0)));
            (
                Document::Semigroup(io::semigroup_file(&s)),
                json!({ "order": s.order(), "embedding": m.embedding() }),
            )
        }
        "opposite" => {
            arity(construction, args, 1)?;
            let m = opposite(&load_morita(a(0))?)?;
            (Document::Morita(io::morita_file(&m)), json!({ "size": m.size() }))
        }
        "rees-IM" => {
            arity(construction, args, 1)?;
            let im = inverse_rees(&load_mcalister(a(0))?, budget)?;
            let s = renamed(im.semigroup(), format!("IM({})", a(0)));
            (
                Document::Semigroup(io::semigroup_file(&s)),
                json!({ "order": s.order(), "rm_order": im.regular().order() }),
            )
        }
        "rees-Up" => {
            arity(construction, args, 1)?;
            let up = inverse_set_from_p(&load_mcalister(a(0))?, budget)?;
            let m = up.morita();
            (
                Document::Morita(io::morita_file(m)),
                json!({ "size": m.size(), "morita": m.is_morita() }),
            )
        }
        "from-hom" => {
            arity(construction, args, 3)?;
            let (c, _) = from_hom(&load_semigroup(a(0))?, &load_semigroup(a(1))?, &list(a(2))?)?;
            (Document::Correspondence(io::correspondence_file(&c)), json!({ "size": c.size() }))
        }
        "enlargement" => {
            arity(construction, args, 2)?;
            let m = enlargement_set(&load_semigroup(a(0))?, &list(a(1))?)?;
            (
                Document::Morita(io::morita_file(&m)),
                json!({ "size": m.size(), "morita": m.is_morita() }),
            )
        }
        "presheaf" => {
            arity(construction, args, 1)?;
            let text = std::fs::read_to_string(a(0)).map_err(|e| CliError::Io(format!("{}: {e}", a(0))))?;
            let (e, p) = io::presheaf(&io::parse_presheaf(&text)?)?;
            let u = presheaf_set(&e, &p)?.to_right();
            (Document::Set(io::set_file(&u)), json!({ "size": u.size() }))
        }
        "direct-sum" => {
            arity(construction, args, 2)?;
            let u = direct_sum(&load_set(a(0))?, &load_set(a(1))?)?;
            (Document::Set(io::set_file(&u)), json!({ "size": u.size() }))
        }
        "I_n" => {
            arity(construction, args, 1)?;
            let n = number(a(0))?;
            let s = symmetric_inverse_monoid(n)?.with_name(format!("I{n}"));
            (Document::Semigroup(io::semigroup_file(&s)), json!({ "order": s.order() }))
        }
        "partial-bijection-biset" => {
            arity(construction, args, 2)?;
            let m = partial_bijection_biset(number(a(0))?, number(a(1))?)?;
            (
                Document::Morita(io::morita_file(&m)),
                json!({ "size": m.size(), "morita": m.is_morita() }),
            )
        }
        other => return Err(CliError::Usage(format!("unknown construction '{other}'"))),
    };
    let mut report = Report::new(echo, budget);
    let mut result = json!({
        "construction": construction,
        "kind": doc.kind().as_str(),
        "summary": summary,
    });
    match out {
        Some(path) => {
            std::fs::write(path, io::to_json(&doc)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            result["out"] = json!(path.display().to_string());
        }
        None => result["document"] = serde_json::to_value(&doc).expect("documents serialize"),
    }
    report.result = Some(result);
    Ok(report)
}

pub fn iso(echo: Vec<String>, budget: u64, first: &str, second: &str) -> Result<Report> {
    // a fixture name takes the kind of the other argument
    let probe = |arg: &str| -> Result<Option<Kind>> {
        if fixtures::by_name(arg).is_some() {
            Ok(None)
        } else {
            Ok(Some(io::load(Path::new(arg), None)?.kind()))
        }
    };
    let kind = probe(first)?.or(probe(second)?).unwrap_or(Kind::Semigroup);
    let subject = format!("{first} ~ {second}");
    let map: Option<Vec<usize>> = match kind {
        Kind::Semigroup => find_isomorphism(&*load_semigroup(first)?, &*load_semigroup(second)?),
        Kind::Set => find_set_isomorphism(&load_set(first)?, &load_set(second)?)?,
        Kind::Correspondence => find_correspondence_isomorphism(&load_correspondence(first)?, &load_correspondence(second)?)?,
        Kind::Morita => {
            let (m1, m2) = (load_morita(first)?, load_morita(second)?);
            let c1 = InverseCorrespondence::from_partial_morita(&m1);
            let c2 = InverseCorrespondence::from_partial_morita(&m2);
            find_correspondence_isomorphism(&c1, &c2)?.filter(|f| {
                m1.elements()
                    .all(|u| m1.elements().all(|v| m2.left_pair(f[u], f[v]) == m1.left_pair(u, v)))
            })
        }
        Kind::McAlister => return Err(CliError::Usage("isomorphism search is not defined for McAlister files".into())),
    };
    let mut report = Report::new(echo, budget);
    report.push(match &map {
        Some(f) => Verdict {
            witness: Some(f.clone()),
            ..verdict("iso", kind.as_str(), &subject, Status::Pass)
        },
        None => Verdict {
            detail: Some("no isomorphism".into()),
            ..verdict("iso", kind.as_str(), &subject, Status::Fail)
        },
    });
    report.result = Some(json!({ "kind": kind.as_str(), "isomorphic": map.is_some() }));
    Ok(report)
}
