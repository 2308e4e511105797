//! Check records, their JSON form and the aligned text rendering.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        }
    }
}

/// One check: a name, a status, a one-line summary and structured evidence
/// (dimensions, witness objects, matrices).
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub evidence: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, summary: impl Into<String>, evidence: Value) -> Self {
        Check { name: name.into(), status, summary: summary.into(), evidence }
    }

    pub fn pass(name: impl Into<String>, summary: impl Into<String>, evidence: Value) -> Self {
        Check::new(name, Status::Pass, summary, evidence)
    }

    pub fn fail(name: impl Into<String>, summary: impl Into<String>, evidence: Value) -> Self {
        Check::new(name, Status::Fail, summary, evidence)
    }

    pub fn inapplicable(name: impl Into<String>, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Check::new(name, Status::Inapplicable, reason.clone(), obj([("reason", Value::from(reason))]))
    }

    /// A check that could not be carried out because of an error.
    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        let msg = err.to_string();
        Check::new(name, Status::Fail, format!("error: {msg}"), obj([("error", Value::from(msg))]))
    }
}

/// A JSON object from key/value pairs (keys are sorted on output).
pub fn obj<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<String, Value>>())
}

/// The outcome of a command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub status: Status,
    #[serde(rename = "exitCode")]
    pub exit_code: i32,
}

impl Report {
    /// Exit 0 iff no check failed; inapplicable checks never mask a failure.
    pub fn new(command: Vec<String>, checks: Vec<Check>) -> Self {
        let failed = checks.iter().any(|c| c.status == Status::Fail);
        let status = if failed {
            Status::Fail
        } else if !checks.is_empty() && checks.iter().all(|c| c.status == Status::Inapplicable) {
            Status::Inapplicable
        } else {
            Status::Pass
        };
        Report { command, checks, status, exit_code: i32::from(failed) }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }

    /// Aligned columns: name, status, summary.
    pub fn to_text(&self) -> String {
        let name_w = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let status_w = "inapplicable".len();
        let mut out = format!("$ {}\n", self.command.join(" "));
        for c in &self.checks {
            out.push_str(&format!("{:<name_w$}  {:<status_w$}  {}\n", c.name, c.status.name(), c.summary));
        }
        let counts = [Status::Pass, Status::Fail, Status::Inapplicable]
            .map(|s| format!("{} {}", self.checks.iter().filter(|c| c.status == s).count(), s.name()));
        out.push_str(&format!("{}: {}\n", self.status.name(), counts.join(", ")));
        out
    }
}
