use std::path::PathBuf;
use std::process::{Command, Output};

fn invcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invcorr"))
        .args(args)
        .env_remove("INVCORR_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn structured(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("structured report")
}

#[test]
fn default_sweep_passes_and_is_deterministic() {
    let a = invcorr(&["verify", "--format", "structured"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = invcorr(&["verify", "--format", "structured"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(structured(&a)["summary"]["failed"], 0);
}

#[test]
fn check_e2_passes() {
    let p = scratch("e2.json", r#"{"name": "E2", "order": 2, "table": [[0, 0], [0, 1]]}"#);
    let o = invcorr(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS            semigroup-core/inverse"));
}

#[test]
fn out_of_range_entry_is_a_parse_error() {
    let p = scratch("range.json", "{\"name\": \"x\", \"order\": 2,\n \"table\": [[0, 0], [0, 2]]}");
    let o = invcorr(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("PARSE_ERROR: line 2, column 24"), "{}", stderr(&o));
}

#[test]
fn non_associative_table_has_witness() {
    let p = scratch("nonassoc.json", r#"{"name": "x", "order": 2, "table": [[1, 0], [0, 0]]}"#);
    let o = invcorr(&["check", p.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let r = structured(&o);
    assert_eq!(r["verdicts"][0]["detail"], "NOT_ASSOCIATIVE");
    assert_eq!(r["verdicts"][0]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn unknown_kind_is_an_input_error() {
    let p = scratch("e2k.json", r#"{"name": "E2", "order": 2, "table": [[0, 0], [0, 1]]}"#);
    let o = invcorr(&["check", p.to_str().unwrap(), "--kind", "cube"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("UNKNOWN_KIND"));
}

#[test]
fn compute_l_of_e2_writes_two_element_semigroup() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests-l-e2.json");
    let o = invcorr(&["compute", "L", "E2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(file["order"], 2);
    let c = invcorr(&["check", out.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn tensor_of_identity_is_identity() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests-tensor.json");
    let o = invcorr(&["compute", "tensor", "I2", "I2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let i = invcorr(&["iso", out.to_str().unwrap(), "I2"]);
    assert_eq!(i.status.code(), Some(0), "{}", stdout(&i));
}

#[test]
fn rees_im_on_trivial_group() {
    let o = invcorr(&["compute", "rees-IM", "T1", "--format", "structured"]);
    assert_eq!(structured(&o)["result"]["summary"]["order"], 1);
    let p = scratch("t1-pair.json", r#"{"semigroup": "T1", "index_size": 2, "p": [[0, 0], [0, 0]]}"#);
    let o = invcorr(&["compute", "rees-IM", p.to_str().unwrap(), "--format", "structured"]);
    let r = structured(&o);
    assert_eq!(r["result"]["summary"]["order"], 1);
    assert_eq!(r["result"]["summary"]["rm_order"], 4);
}

#[test]
fn scope_restricts_verdicts() {
    let o = invcorr(&["verify", "--scope", "rees", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    for v in structured(&o)["verdicts"].as_array().unwrap() {
        let scope = v["scope"].as_str().unwrap();
        assert!(scope == "rees" || v["check"] == "associative" || v["check"] == "inverse", "{v}");
    }
}

#[test]
fn mutated_fixture_fails_verification() {
    let p = scratch("e3-mut.json", r#"{"name": "E3", "order": 3, "table": [[0, 0, 0], [0, 1, 1], [0, 1, 1]]}"#);
    let o = invcorr(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn budget_flag_overrides_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_invcorr"));
        cmd.args(["verify", "--scope", "semigroup-core", "--format", "structured"]);
        if let Some(f) = flag {
            cmd.args(["--budget", f]);
        }
        match env {
            Some(e) => cmd.env("INVCORR_BUDGET", e),
            None => cmd.env_remove("INVCORR_BUDGET"),
        };
        let o = cmd.output().unwrap();
        structured(&o)["budget"].as_u64().unwrap()
    };
    assert_eq!(run(None, None), 1_000_000);
    assert_eq!(run(Some("500"), None), 500);
    assert_eq!(run(Some("500"), Some("700")), 700);
}

#[test]
fn exhausted_budget_exits_with_three() {
    let o = invcorr(&["compute", "rees-IM", "I2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).starts_with("SIZE_LIMIT"));
}

#[test]
fn non_isomorphic_pair_fails() {
    let o = invcorr(&["iso", "E2", "Z2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn timing_goes_to_stderr_only() {
    let o = invcorr(&["verify", "--scope", "semigroup-core", "--timing"]);
    assert!(stderr(&o).contains("time: "));
    assert!(!stdout(&o).contains("time: "));
}

#[test]
fn partial_bijection_biset_round_trips_through_check() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests-pbb.json");
    let o = invcorr(&["compute", "partial-bijection-biset", "1", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = invcorr(&["check", out.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(c.status.code(), Some(0));
    let r = structured(&c);
    let morita = r["verdicts"].as_array().unwrap().iter().find(|v| v["check"] == "morita").unwrap().clone();
    assert!(morita["detail"].as_str().unwrap().starts_with("PARTIAL_ONLY"));
}
