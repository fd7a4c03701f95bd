//! Run reports in JSON and text form.

use serde::Serialize;
use serde_json::Value as Json;

use crate::run::Options;
use crate::script::Script;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    AllExpectationsMet,
    Failures,
    /// A step produced a manifold that fails validation.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expectation {
    pub key: String,
    pub expected: Json,
    pub actual: Json,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub view: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expectations: Vec<Expectation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EffortReport {
    pub max_cosets: usize,
    pub max_steps: u64,
    pub rewrite_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub script: String,
    pub provenance: String,
    pub params: std::collections::BTreeMap<String, Json>,
    pub effort: EffortReport,
    pub steps: Vec<StepReport>,
    pub status: Outcome,
    /// One line per failed expectation or finding.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(script: &Script, options: Options, steps: Vec<StepReport>, inconsistent: Option<usize>) -> Self {
        let mut failures = Vec::new();
        for s in &steps {
            for x in s.expectations.iter().filter(|x| !x.pass) {
                failures
                    .push(format!("step {} ({}): {} expected {}, got {}", s.index, s.op, x.key, x.expected, x.actual));
            }
            for f in &s.findings {
                failures.push(format!("step {} ({}): inconsistent: {f}", s.index, s.op));
            }
        }
        let status = if inconsistent.is_some() {
            Outcome::Inconsistent
        } else if failures.is_empty() {
            Outcome::AllExpectationsMet
        } else {
            Outcome::Failures
        };
        let e = options.effort;
        Report {
            script: script.name.clone(),
            provenance: script.provenance.clone(),
            params: script.params.clone(),
            effort: EffortReport {
                max_cosets: e.cosets.max_cosets,
                max_steps: e.cosets.max_steps,
                rewrite_steps: e.rewrite_steps,
            },
            steps,
            status,
            failures,
        }
    }

    /// Severity rank: 0 all met, 1 failures, 2 inconsistent.
    pub fn status_code(&self) -> u8 {
        match self.status {
            Outcome::AllExpectationsMet => 0,
            Outcome::Failures => 1,
            Outcome::Inconsistent => 2,
        }
    }

    pub fn all_met(&self) -> bool {
        self.status == Outcome::AllExpectationsMet
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("script {} [{}]\n", self.script, self.provenance);
        for s in &self.steps {
            let target = s.bind.as_deref().map(|b| format!(" -> {b}")).unwrap_or_default();
            let time = s.millis.map(|t| format!(" ({t} ms)")).unwrap_or_default();
            out.push_str(&format!("{:>3} {}{target}{time}\n", s.index, s.op));
            if let Some(e) = &s.error {
                out.push_str(&format!("      error {e}\n"));
            }
            for x in &s.expectations {
                let mark = if x.pass { "ok  " } else { "FAIL" };
                if x.pass {
                    out.push_str(&format!("      {mark} {} = {}\n", x.key, x.actual));
                } else {
                    out.push_str(&format!("      {mark} {}: expected {}, got {}\n", x.key, x.expected, x.actual));
                }
            }
            for f in &s.findings {
                out.push_str(&format!("      inconsistent {f}\n"));
            }
        }
        out.push_str(&format!("status {:?}\n", self.status));
        out
    }
}
