//! JSON file formats for semigroups, right sets, correspondences, partial
//! Morita equivalences and McAlister functions.
//!
//! Parsing validates every index range, so a document that parses can be
//! converted without further shape errors. Positions in errors are 1-based.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::correspondence::InverseCorrespondence;
use crate::error::Error;
use crate::fixtures;
use crate::inverse_set::{LeftSet, PartialMoritaEquivalence, Presheaf, RightSet};
use crate::rees::PartialMcAlisterFunction;
use crate::semigroup::{recognize_inverse, InverseSemigroup, MulTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Semigroup,
    Set,
    Correspondence,
    Morita,
    McAlister,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::Semigroup, Kind::Set, Kind::Correspondence, Kind::Morita, Kind::McAlister];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::Set => "set",
            Kind::Correspondence => "correspondence",
            Kind::Morita => "morita",
            Kind::McAlister => "mcalister",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = LoadError;

    fn from_str(s: &str) -> Result<Self, LoadError> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| LoadError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown kind '{0}'")]
    UnknownKind(String),
    #[error(transparent)]
    Structure(#[from] Error),
}

impl LoadError {
    pub fn code(&self) -> &'static str {
        match self {
            LoadError::Io { .. } => "IO_ERROR",
            LoadError::Parse { .. } => "PARSE_ERROR",
            LoadError::UnknownKind(_) => "UNKNOWN_KIND",
            LoadError::Structure(e) => e.code(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A fixture name or an inline semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupRef {
    Named(String),
    Inline(SemigroupFile),
}

/// Right-set format; correspondences add `left_semigroup` and `left_action`,
/// partial Morita equivalences also `left_pairing`. Action rows are indexed
/// by carrier element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFile {
    pub semigroup: SemigroupRef,
    pub size: usize,
    pub action: Vec<Vec<usize>>,
    pub pairing: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_semigroup: Option<SemigroupRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_pairing: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McAlisterFile {
    pub semigroup: SemigroupRef,
    pub index_size: usize,
    pub p: Vec<Vec<usize>>,
}

/// Presheaf over a semilattice: `parts[e]` is |U_e| and each restriction
/// σ_{lower,upper}: U_upper → U_lower is given for lower ≤ upper.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresheafFile {
    pub semilattice: SemigroupRef,
    pub parts: Vec<usize>,
    pub restrictions: Vec<RestrictionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictionEntry {
    pub lower: usize,
    pub upper: usize,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Semigroup(SemigroupFile),
    Set(SetFile),
    Correspondence(SetFile),
    Morita(SetFile),
    McAlister(McAlisterFile),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Semigroup(_) => Kind::Semigroup,
            Document::Set(_) => Kind::Set,
            Document::Correspondence(_) => Kind::Correspondence,
            Document::Morita(_) => Kind::Morita,
            Document::McAlister(_) => Kind::McAlister,
        }
    }
}

#[derive(Clone, Debug)]
enum Seg {
    Key(&'static str),
    Index(usize),
}

struct ShapeError {
    path: Vec<Seg>,
    message: String,
}

fn shape(path: Vec<Seg>, message: impl Into<String>) -> ShapeError {
    ShapeError {
        path,
        message: message.into(),
    }
}

fn kind_of(value: &serde_json::Value) -> Option<Kind> {
    let obj = value.as_object()?;
    Some(if obj.contains_key("table") {
        Kind::Semigroup
    } else if obj.contains_key("index_size") {
        Kind::McAlister
    } else if obj.contains_key("left_pairing") {
        Kind::Morita
    } else if obj.contains_key("left_action") {
        Kind::Correspondence
    } else if obj.contains_key("action") {
        Kind::Set
    } else {
        return None;
    })
}

fn typed<T: DeserializeOwned>(text: &str) -> Result<T, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses a document. With `kind = None` the kind is detected from its keys.
pub fn parse(text: &str, kind: Option<Kind>) -> Result<Document, LoadError> {
    let value: serde_json::Value = typed(text)?;
    let kind = match kind {
        Some(k) => k,
        None => kind_of(&value).ok_or_else(|| LoadError::UnknownKind("unrecognized document keys".into()))?,
    };
    let doc = match kind {
        Kind::Semigroup => Document::Semigroup(typed(text)?),
        Kind::Set => Document::Set(typed(text)?),
        Kind::Correspondence => Document::Correspondence(typed(text)?),
        Kind::Morita => Document::Morita(typed(text)?),
        Kind::McAlister => Document::McAlister(typed(text)?),
    };
    validate(&doc).map_err(|e| {
        let (line, column) = locate(text, &e.path);
        LoadError::Parse {
            line,
            column,
            message: e.message,
        }
    })?;
    Ok(doc)
}

pub fn load(path: &Path, kind: Option<Kind>) -> Result<Document, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse(&text, kind)
}

fn check_matrix(
    path: Vec<Seg>,
    rows: &[Vec<usize>],
    nrows: usize,
    ncols: usize,
    bound: usize,
) -> Result<(), ShapeError> {
    if rows.len() != nrows {
        return Err(shape(path, format!("expected {nrows} rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        let mut p = path.clone();
        p.push(Seg::Index(i));
        if row.len() != ncols {
            return Err(shape(p, format!("expected {ncols} entries, found {}", row.len())));
        }
        if let Some(j) = row.iter().position(|&x| x >= bound) {
            p.push(Seg::Index(j));
            return Err(shape(p, format!("index {} out of range 0..{bound}", row[j])));
        }
    }
    Ok(())
}

fn validate_semigroup(path: Vec<Seg>, f: &SemigroupFile) -> Result<(), ShapeError> {
    let mut p = path;
    p.push(Seg::Key("table"));
    check_matrix(p, &f.table, f.order, f.order, f.order)
}

fn ref_order(path: Vec<Seg>, r: &SemigroupRef) -> Result<usize, ShapeError> {
    match r {
        SemigroupRef::Named(name) => fixtures::by_name(name)
            .map(|s| s.order())
            .ok_or_else(|| shape(path, format!("unknown fixture '{name}'"))),
        SemigroupRef::Inline(f) => {
            validate_semigroup(path, f)?;
            Ok(f.order)
        }
    }
}

fn validate(doc: &Document) -> Result<(), ShapeError> {
    match doc {
        Document::Semigroup(f) => validate_semigroup(Vec::new(), f),
        Document::Set(f) | Document::Correspondence(f) | Document::Morita(f) => {
            let t = ref_order(vec![Seg::Key("semigroup")], &f.semigroup)?;
            check_matrix(vec![Seg::Key("action")], &f.action, f.size, t, f.size)?;
            check_matrix(vec![Seg::Key("pairing")], &f.pairing, f.size, f.size, t)?;
            let needs_left = !matches!(doc, Document::Set(_));
            let needs_pairing = matches!(doc, Document::Morita(_));
            let s = match (&f.left_semigroup, needs_left) {
                (Some(r), _) => Some(ref_order(vec![Seg::Key("left_semigroup")], r)?),
                (None, true) => return Err(shape(Vec::new(), "missing field `left_semigroup`")),
                (None, false) => None,
            };
            match (&f.left_action, s) {
                (Some(a), Some(s)) => check_matrix(vec![Seg::Key("left_action")], a, f.size, s, f.size)?,
                (None, Some(_)) => return Err(shape(Vec::new(), "missing field `left_action`")),
                (Some(_), None) => return Err(shape(vec![Seg::Key("left_action")], "left action without left semigroup")),
                (None, None) => {}
            }
            match (&f.left_pairing, s) {
                (Some(p), Some(s)) => check_matrix(vec![Seg::Key("left_pairing")], p, f.size, f.size, s)?,
                (None, Some(_)) if needs_pairing => return Err(shape(Vec::new(), "missing field `left_pairing`")),
                (Some(_), None) => return Err(shape(vec![Seg::Key("left_pairing")], "left pairing without left semigroup")),
                _ => {}
            }
            Ok(())
        }
        Document::McAlister(f) => {
            let t = ref_order(vec![Seg::Key("semigroup")], &f.semigroup)?;
            check_matrix(vec![Seg::Key("p")], &f.p, f.index_size, f.index_size, t)
        }
    }
}

/// Line and column of the value at `path`, or of the document start.
fn locate(text: &str, path: &[Seg]) -> (usize, usize) {
    let bytes = text.as_bytes();
    let offset = find_value(bytes, skip_ws(bytes, 0), path).unwrap_or(0);
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn skip_ws(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

/// End of the string starting at the quote `b[i]`.
fn skip_string(b: &[u8], mut i: usize) -> usize {
    i += 1;
    while i < b.len() && b[i] != b'"' {
        i += if b[i] == b'\\' { 2 } else { 1 };
    }
    i + 1
}

fn skip_value(b: &[u8], i: usize) -> usize {
    match b.get(i) {
        Some(b'"') => skip_string(b, i),
        Some(b'{') | Some(b'[') => {
            let mut depth = 0usize;
            let mut j = i;
            while j < b.len() {
                match b[j] {
                    b'"' => {
                        j = skip_string(b, j);
                        continue;
                    }
                    b'{' | b'[' => depth += 1,
                    b'}' | b']' => {
                        depth -= 1;
                        if depth == 0 {
                            return j + 1;
                        }
                    }
                    _ => {}
                }
                j += 1;
            }
            j
        }
        _ => {
            let mut j = i;
            while j < b.len() && !matches!(b[j], b',' | b'}' | b']') && !b[j].is_ascii_whitespace() {
                j += 1;
            }
            j
        }
    }
}

fn find_value(b: &[u8], i: usize, path: &[Seg]) -> Option<usize> {
    let Some((seg, rest)) = path.split_first() else {
        return Some(i);
    };
    let mut j = skip_ws(b, i + 1);
    match (seg, b.get(i)?) {
        (Seg::Key(key), b'{') => loop {
            if b.get(j)? != &b'"' {
                return None;
            }
            let end = skip_string(b, j);
            let name = &b[j + 1..end - 1];
            j = skip_ws(b, end);
            j = skip_ws(b, j + 1); // ':'
            if name == key.as_bytes() {
                return find_value(b, j, rest);
            }
            j = skip_ws(b, skip_value(b, j));
            j = skip_ws(b, j + 1); // ','
        },
        (Seg::Index(n), b'[') => {
            for _ in 0..*n {
                j = skip_ws(b, skip_value(b, j));
                if b.get(j)? != &b',' {
                    return None;
                }
                j = skip_ws(b, j + 1);
            }
            find_value(b, j, rest)
        }
        _ => None,
    }
}

/// Parses a presheaf file; the restriction axioms are left to `presheaf_set`.
pub fn parse_presheaf(text: &str) -> Result<PresheafFile, LoadError> {
    let f: PresheafFile = typed(text)?;
    let located = |e: ShapeError| {
        let (line, column) = locate(text, &e.path);
        LoadError::Parse {
            line,
            column,
            message: e.message,
        }
    };
    let n = ref_order(vec![Seg::Key("semilattice")], &f.semilattice).map_err(located)?;
    if f.parts.len() != n {
        return Err(located(shape(
            vec![Seg::Key("parts")],
            format!("expected {n} parts, found {}", f.parts.len()),
        )));
    }
    for (k, r) in f.restrictions.iter().enumerate() {
        let path = vec![Seg::Key("restrictions"), Seg::Index(k)];
        if r.lower >= n || r.upper >= n {
            return Err(located(shape(path, "restriction index out of range")));
        }
        check_matrix(path, std::slice::from_ref(&r.map), 1, f.parts[r.upper], f.parts[r.lower].max(1))
            .map_err(located)?;
        if f.parts[r.lower] == 0 && !r.map.is_empty() {
            return Err(located(shape(vec![Seg::Key("restrictions"), Seg::Index(k)], "map into an empty part")));
        }
    }
    Ok(f)
}

pub fn presheaf(f: &PresheafFile) -> Result<(Arc<InverseSemigroup>, Presheaf), LoadError> {
    let e = resolve_semigroup(&f.semilattice)?;
    let restrictions = f
        .restrictions
        .iter()
        .map(|r| ((r.lower, r.upper), r.map.clone()))
        .collect();
    Ok((
        e,
        Presheaf {
            parts: f.parts.clone(),
            restrictions,
        },
    ))
}

/// Multiplication table of a parsed semigroup file.
pub fn semigroup_table(f: &SemigroupFile) -> Result<MulTable, Error> {
    MulTable::from_rows(&f.table)
}

pub fn resolve_semigroup(r: &SemigroupRef) -> Result<Arc<InverseSemigroup>, LoadError> {
    match r {
        SemigroupRef::Named(name) => fixtures::by_name(name)
            .map(Arc::new)
            .ok_or_else(|| LoadError::UnknownKind(format!("fixture {name}"))),
        SemigroupRef::Inline(f) => Ok(Arc::new(recognize_inverse(semigroup_table(f)?)?.with_name(f.name.clone()))),
    }
}

pub fn right_set(f: &SetFile) -> Result<RightSet, LoadError> {
    let t = resolve_semigroup(&f.semigroup)?;
    Ok(RightSet::new(t, f.size, f.action.concat(), f.pairing.concat())?)
}

pub fn correspondence(f: &SetFile) -> Result<InverseCorrespondence, LoadError> {
    let s = f
        .left_semigroup
        .as_ref()
        .ok_or_else(|| Error::InvalidTable("missing left semigroup".into()))?;
    let action = f
        .left_action
        .as_ref()
        .ok_or_else(|| Error::InvalidTable("missing left action".into()))?;
    Ok(InverseCorrespondence::new(resolve_semigroup(s)?, right_set(f)?, action.concat())?)
}

pub fn morita(f: &SetFile) -> Result<PartialMoritaEquivalence, LoadError> {
    let c = correspondence(f)?;
    let pairing = f
        .left_pairing
        .as_ref()
        .ok_or_else(|| Error::InvalidTable("missing left pairing".into()))?;
    let left = LeftSet::new(c.left_semigroup().clone(), f.size, c.left_action().to_vec(), pairing.concat())?;
    Ok(PartialMoritaEquivalence::new(left, c.right_set().clone())?)
}

/// The semigroup and p-table of a McAlister file; validate with `check_mcalister`.
pub fn mcalister_parts(f: &McAlisterFile) -> Result<(Arc<InverseSemigroup>, Vec<Vec<usize>>), LoadError> {
    Ok((resolve_semigroup(&f.semigroup)?, f.p.clone()))
}

pub fn semigroup_file(s: &InverseSemigroup) -> SemigroupFile {
    SemigroupFile {
        name: s.name().to_string(),
        order: s.order(),
        table: s.table().rows(),
    }
}

fn rows(flat: &[usize], width: usize, height: usize) -> Vec<Vec<usize>> {
    (0..height).map(|r| flat[r * width..(r + 1) * width].to_vec()).collect()
}

fn inline(s: &InverseSemigroup) -> SemigroupRef {
    SemigroupRef::Inline(semigroup_file(s))
}

pub fn set_file(u: &RightSet) -> SetFile {
    SetFile {
        semigroup: inline(u.semigroup()),
        size: u.size(),
        action: rows(u.action(), u.semigroup().order(), u.size()),
        pairing: rows(u.pairing(), u.size(), u.size()),
        left_semigroup: None,
        left_action: None,
        left_pairing: None,
    }
}

pub fn correspondence_file(c: &InverseCorrespondence) -> SetFile {
    SetFile {
        left_semigroup: Some(inline(c.left_semigroup())),
        left_action: Some(rows(c.left_action(), c.left_semigroup().order(), c.size())),
        ..set_file(c.right_set())
    }
}

pub fn morita_file(m: &PartialMoritaEquivalence) -> SetFile {
    SetFile {
        left_pairing: Some(rows(m.left_set().pairing(), m.size(), m.size())),
        ..correspondence_file(&InverseCorrespondence::from_partial_morita(m))
    }
}

pub fn mcalister_file(pm: &PartialMcAlisterFunction) -> McAlisterFile {
    McAlisterFile {
        semigroup: inline(pm.semigroup()),
        index_size: pm.index_size(),
        p: pm.rows().into_iter().take(pm.index_size()).collect(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}

impl Serialize for Document {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Document::Semigroup(f) => f.serialize(ser),
            Document::Set(f) | Document::Correspondence(f) | Document::Morita(f) => f.serialize(ser),
            Document::McAlister(f) => f.serialize(ser),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjointable::morita_from_set;
    use crate::inverse_set::semigroup_as_right_set;
    use crate::rees::mcalister_from_set;

    #[test]
    fn semigroup_round_trip() {
        for s in fixtures::all() {
            let text = to_json(&semigroup_file(&s));
            let Document::Semigroup(f) = parse(&text, None).unwrap() else { panic!() };
            let t = recognize_inverse(semigroup_table(&f).unwrap()).unwrap();
            assert_eq!(t.table(), s.table());
        }
    }

    #[test]
    fn structures_round_trip() {
        let b2 = Arc::new(fixtures::b2());
        let u = semigroup_as_right_set(&b2);
        let Document::Set(f) = parse(&to_json(&set_file(&u)), None).unwrap() else { panic!() };
        assert_eq!(right_set(&f).unwrap(), u);

        let c = InverseCorrespondence::identity(&b2);
        let Document::Correspondence(f) = parse(&to_json(&correspondence_file(&c)), None).unwrap() else { panic!() };
        assert_eq!(correspondence(&f).unwrap(), c);

        let m = morita_from_set(&u).unwrap();
        let Document::Morita(f) = parse(&to_json(&morita_file(&m)), None).unwrap() else { panic!() };
        let back = morita(&f).unwrap();
        assert_eq!(back.left_set().pairing(), m.left_set().pairing());
        assert_eq!(back.left_set().action(), m.left_set().action());

        let pm = mcalister_from_set(&u).unwrap();
        let Document::McAlister(f) = parse(&to_json(&mcalister_file(&pm)), None).unwrap() else { panic!() };
        assert_eq!(f.p, pm.rows());
    }

    #[test]
    fn named_semigroups_resolve() {
        let text = r#"{"semigroup": "E2", "size": 1, "action": [[0, 0]], "pairing": [[0]]}"#;
        let Document::Set(f) = parse(text, None).unwrap() else { panic!() };
        assert_eq!(right_set(&f).unwrap().semigroup().name(), "E2");
        let bad = r#"{"semigroup": "Q8", "size": 0, "action": [], "pairing": []}"#;
        assert!(matches!(parse(bad, None), Err(LoadError::Parse { line: 1, column: 15, .. })));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse("{\n  \"name\": \"x\",\n  \"order\": 1,\n  \"table\": [[0]\n}", None).unwrap_err();
        let LoadError::Parse { line, .. } = err else { panic!("{err:?}") };
        assert_eq!(line, 5);
    }

    #[test]
    fn out_of_range_entry_is_located() {
        let text = "{\n  \"name\": \"bad\",\n  \"order\": 2,\n  \"table\": [[0, 0],\n            [0, 7]]\n}\n";
        let err = parse(text, None).unwrap_err();
        assert_eq!(err.code(), "PARSE_ERROR");
        let LoadError::Parse { line, column, .. } = err else { panic!() };
        assert_eq!((line, column), (5, 17));
    }

    #[test]
    fn missing_left_pairing_for_morita_kind() {
        let text = r#"{"semigroup": "T1", "size": 1, "action": [[0]], "pairing": [[0]],
                       "left_semigroup": "T1", "left_action": [[0]]}"#;
        assert!(matches!(parse(text, None), Ok(Document::Correspondence(_))));
        assert!(matches!(parse(text, Some(Kind::Morita)), Err(LoadError::Parse { .. })));
    }

    #[test]
    fn presheaf_file() {
        let text = r#"{"semilattice": "E2", "parts": [1, 2],
                       "restrictions": [{"lower": 0, "upper": 1, "map": [0, 0]},
                                        {"lower": 0, "upper": 0, "map": [0]},
                                        {"lower": 1, "upper": 1, "map": [0, 1]}]}"#;
        let (e, p) = presheaf(&parse_presheaf(text).unwrap()).unwrap();
        assert_eq!(e.order(), 2);
        assert_eq!(p.restrictions[&(0, 1)], vec![0, 0]);
        let bad = text.replace("[0, 0]", "[0, 3]");
        assert_eq!(parse_presheaf(&bad).unwrap_err().code(), "PARSE_ERROR");
    }

    #[test]
    fn unknown_kind() {
        assert_eq!(parse("{\"x\": 1}", None).unwrap_err().code(), "UNKNOWN_KIND");
        assert_eq!("cube".parse::<Kind>().unwrap_err().code(), "UNKNOWN_KIND");
        assert_eq!("morita".parse::<Kind>().unwrap(), Kind::Morita);
    }

    #[test]
    fn non_inverse_inline_base_is_a_structure_error() {
        // left zero band on two points is regular but not inverse
        let text = r#"{"semigroup": {"name": "L2", "order": 2, "table": [[0, 0], [1, 1]]},
                       "size": 0, "action": [], "pairing": []}"#;
        let Document::Set(f) = parse(text, None).unwrap() else { panic!() };
        assert_eq!(right_set(&f).unwrap_err().code(), "NOT_INVERSE");
    }
}
