//! Verification reports in a human and a JSON rendering carrying the same
//! fields. The wall time is kept out of the JSON body so reruns are
//! byte-identical.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use whalg::wha::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Basis indices of the failing instance, empty when not indexed.
    pub indices: Vec<usize>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl Counterexample {
    pub fn note(detail: impl Into<String>) -> Self {
        Counterexample { indices: Vec::new(), detail: detail.into(), lhs: None, rhs: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckStatus {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckStatus {
    pub fn from_report(name: &str, r: &Report) -> Self {
        CheckStatus {
            name: name.into(),
            passed: r.passed,
            checked: r.checked,
            counterexample: r.violation.as_ref().map(|v| Counterexample {
                indices: v.indices.clone(),
                detail: v.law.to_string(),
                lhs: Some(v.lhs.clone()),
                rhs: Some(v.rhs.clone()),
            }),
        }
    }

    pub fn flag(name: &str, passed: bool, checked: usize, failure: Option<String>) -> Self {
        CheckStatus {
            name: name.into(),
            passed,
            checked,
            counterexample: if passed { None } else { Some(Counterexample::note(failure.unwrap_or_else(|| "failed".into()))) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckStatus>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, suite: impl Into<String>, checks: Vec<CheckStatus>, wall_time: Duration) -> Self {
        VerificationReport {
            subject: subject.into(),
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
            wall_time,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        writeln!(f, "suite: {}", self.suite)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  {:width$}  {status}  ({} checked)", c.name, c.checked)?;
            if let Some(x) = &c.counterexample {
                write!(f, "    {}", x.detail)?;
                if !x.indices.is_empty() {
                    write!(f, " at {:?}", x.indices)?;
                }
                writeln!(f)?;
                if let (Some(l), Some(r)) = (&x.lhs, &x.rhs) {
                    writeln!(f, "    lhs: {l}")?;
                    writeln!(f, "    rhs: {r}")?;
                }
            }
        }
        write!(f, "result: {}", if self.passed { "pass" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_has_no_wall_time() {
        let r = VerificationReport::new("x", "wha", vec![CheckStatus::flag("a", true, 3, None)], Duration::from_secs(7));
        let js = serde_json::to_string(&r).unwrap();
        assert!(!js.contains("wall"));
        assert!(js.contains("\"passed\":true"));
    }

    #[test]
    fn failure_rendering_shows_counterexample() {
        let c = CheckStatus::flag("unit", false, 1, Some("unit is not preserved".into()));
        let r = VerificationReport::new("x", "all", vec![c], Duration::ZERO);
        let text = r.to_string();
        assert!(text.contains("FAIL") && text.contains("unit is not preserved"));
        assert!(text.ends_with("result: FAIL"));
    }
}
