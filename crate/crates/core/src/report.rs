//! Deterministic reports shared by the verifier and the command line.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub scope: String,
    pub check: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub budget_exceeded: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub budget: u64,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    /// Command-specific result, such as the order of a computed semigroup.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: Vec<String>, budget: u64) -> Self {
        Report {
            command,
            budget,
            verdicts: Vec::new(),
            summary: Summary::default(),
            result: None,
        }
    }

    pub fn push(&mut self, v: Verdict) {
        match v.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::BudgetExceeded => self.summary.budget_exceeded += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, vs: impl IntoIterator<Item = Verdict>) {
        for v in vs {
            self.push(v);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.budget_exceeded == 0
    }

    /// 0 pass, 1 verification failure, 3 budget exceeded. Failures win over
    /// budget exhaustion.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else if self.summary.budget_exceeded > 0 {
            3
        } else {
            0
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Fail)
    }

    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.join(" "));
        let _ = writeln!(out, "budget: {}", self.budget);
        for v in &self.verdicts {
            let _ = write!(out, "{:<15} {}/{} [{}]", v.status.as_str(), v.scope, v.check, v.subject);
            if let Some(w) = &v.witness {
                let _ = write!(out, " witness={w:?}");
            }
            if let Some(d) = &v.detail {
                let _ = write!(out, " {d}");
            }
            out.push('\n');
        }
        if let Some(r) = &self.result {
            let _ = writeln!(out, "result: {r}");
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} budget exceeded, {} skipped",
            s.passed, s.failed, s.budget_exceeded, s.skipped
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(status: Status) -> Verdict {
        Verdict {
            scope: "s".into(),
            check: "c".into(),
            subject: "x".into(),
            status,
            witness: None,
            detail: None,
        }
    }

    #[test]
    fn exit_codes() {
        let mut r = Report::new(vec!["verify".into()], 10);
        r.push(verdict(Status::Pass));
        assert_eq!(r.exit_code(), 0);
        r.push(verdict(Status::BudgetExceeded));
        assert_eq!(r.exit_code(), 3);
        r.push(verdict(Status::Fail));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn renderings_are_stable() {
        let mut r = Report::new(vec!["check".into(), "a.json".into()], 5);
        r.push(Verdict {
            witness: Some(vec![1, 2]),
            ..verdict(Status::Fail)
        });
        assert_eq!(r.to_text(), r.clone().to_text());
        assert!(r.to_text().contains("FAIL            s/c [x] witness=[1, 2]"));
        let v: serde_json::Value = serde_json::from_str(&r.to_structured()).unwrap();
        assert_eq!(v["verdicts"][0]["status"], "FAIL");
        assert_eq!(v["summary"]["failed"], 1);
    }
}
