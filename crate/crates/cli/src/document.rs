use std::collections::BTreeMap;

use gabi_core::Report;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingDoc {
    pub label: String,
    pub witness: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub verdict: Verdict,
    pub findings: Vec<FindingDoc>,
    pub derived: BTreeMap<String, Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

impl ReportDocument {
    /// PASS when `report` is empty, FAIL otherwise.
    pub fn from_report(report: Report) -> Self {
        let verdict = if report.passed() { Verdict::Pass } else { Verdict::Fail };
        Self::with_verdict(verdict, report)
    }

    pub fn with_verdict(verdict: Verdict, report: Report) -> Self {
        let findings = report.findings.into_iter().map(|f| FindingDoc { label: f.label, witness: f.witness, detail: f.detail }).collect();
        let mut doc = ReportDocument { verdict, findings, derived: BTreeMap::new() };
        if verdict == Verdict::Fail && doc.findings.is_empty() {
            doc.findings.push(FindingDoc { label: "verdict".into(), witness: "-".into(), detail: "failed without a recorded witness".into() });
        }
        doc
    }

    pub fn derive(mut self, key: &str, value: impl Serialize) -> Self {
        self.derived.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail | Verdict::NotApplicable => 1,
        }
    }

    /// Text: the verdict, one line per finding, then one line per derived key.
    /// Structured: pretty JSON with keys `verdict`, `findings`, `derived`.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{}\n", self.verdict.as_str());
                for f in &self.findings {
                    s.push_str(&format!("{} FAIL at {}: {}\n", f.label, f.witness, f.detail));
                }
                for (k, v) in &self.derived {
                    s.push_str(&format!("{k}: {v}\n"));
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_a_single_line() {
        assert_eq!(ReportDocument::from_report(Report::new()).render(Format::Text), "PASS\n");
    }

    #[test]
    fn fail_lines_and_structured_keys() {
        let mut r = Report::new();
        r.push("GA2", "g", "g₊g₋ = 0 ≠ ε(g)1");
        let doc = ReportDocument::from_report(r);
        assert_eq!(doc.exit_code(), 1);
        assert_eq!(doc.render(Format::Text), "FAIL\nGA2 FAIL at g: g₊g₋ = 0 ≠ ε(g)1\n");
        let v: Value = serde_json::from_str(&doc.render(Format::Structured)).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["derived", "findings", "verdict"]);
        assert_eq!(v["verdict"], "FAIL");
    }

    #[test]
    fn fail_always_has_a_finding() {
        let doc = ReportDocument::with_verdict(Verdict::Fail, Report::new());
        assert_eq!(doc.findings.len(), 1);
    }
}
