//! Structured verification records.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Skipped,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Skipped => "SKIPPED",
            Status::Fail => "FAIL",
        })
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Printed in the source text.
    Published,
    /// Produced by an independent computation.
    Derived,
    /// Immediate from definitions.
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
}

/// One verified fact.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub location: String,
    pub status: Status,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
    pub runtime_ms: u64,
}

impl Case {
    pub fn new(id: impl Into<String>, location: impl Into<String>) -> Self {
        Case {
            id: id.into(),
            location: location.into(),
            status: Status::Pass,
            computed: Value::Null,
            expected: None,
            detail: String::new(),
            runtime_ms: 0,
        }
    }

    pub fn computed(mut self, v: impl Serialize) -> Self {
        self.computed = serde_json::to_value(v).unwrap_or(Value::Null);
        self
    }

    pub fn expected(mut self, v: impl Serialize, provenance: Provenance) -> Self {
        let value = serde_json::to_value(v).unwrap_or(Value::Null);
        self.expected = Some(Expected { value, provenance });
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    pub fn runtime(mut self, since: Instant) -> Self {
        self.runtime_ms = since.elapsed().as_millis() as u64;
        self
    }

    /// PASS when `ok`, otherwise `otherwise`.
    pub fn check(self, ok: bool, otherwise: Status) -> Self {
        self.status(if ok { Status::Pass } else { otherwise })
    }

    /// Compares `computed` with the expected value. A mismatch against a
    /// published value is a WARN; any other mismatch is a FAIL.
    pub fn compare(self) -> Self {
        let Some(e) = &self.expected else { return self };
        let ok = e.value == self.computed;
        let otherwise = if e.provenance == Provenance::Published { Status::Warn } else { Status::Fail };
        self.check(ok, otherwise)
    }

    /// A FAIL recording an error raised while computing the case.
    pub fn error(id: impl Into<String>, location: impl Into<String>, err: impl fmt::Display) -> Self {
        Case::new(id, location).status(Status::Fail).detail(format!("error: {err}"))
    }

    pub fn skipped(id: impl Into<String>, location: impl Into<String>, why: impl Into<String>) -> Self {
        Case::new(id, location).status(Status::Skipped).detail(why)
    }
}

/// An ordered collection of cases.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), cases: Vec::new() }
    }

    pub fn push(&mut self, c: Case) {
        self.cases.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    pub fn count(&self, s: Status) -> usize {
        self.cases.iter().filter(|c| c.status == s).count()
    }

    pub fn has_fail(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// The worst status present, PASS for an empty report.
    pub fn worst(&self) -> Status {
        self.cases.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }

    pub fn find(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// The JSON form with runtimes zeroed, for byte-stable comparison.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.runtime_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} pass, {} warn, {} skipped, {} fail",
            self.suite,
            self.cases.len(),
            self.count(Status::Pass),
            self.count(Status::Warn),
            self.count(Status::Skipped),
            self.count(Status::Fail)
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "{:<7} {} [{}] computed={}", c.status, c.id, c.location, c.computed)?;
            if let Some(e) = &c.expected {
                write!(f, " expected={} ({:?})", e.value, e.provenance)?;
            }
            if !c.detail.is_empty() {
                write!(f, " -- {}", c.detail)?;
            }
            writeln!(f, " ({} ms)", c.runtime_ms)?;
        }
        writeln!(f, "{}", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_mismatch_warns() {
        let c = Case::new("a", "x").computed(75).expected(76, Provenance::Published).compare();
        assert_eq!(c.status, Status::Warn);
        let c = Case::new("a", "x").computed(75).expected(76, Provenance::Derived).compare();
        assert_eq!(c.status, Status::Fail);
        let c = Case::new("a", "x").computed(75).expected(75, Provenance::Published).compare();
        assert_eq!(c.status, Status::Pass);
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("t");
        r.push(Case::new("a", "x").computed(vec![1, 2]).expected(vec![1, 2], Provenance::Elementary).compare());
        r.push(Case::skipped("b", "y", "no pack"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.worst(), Status::Skipped);
        assert!(r.to_json().contains("\"PASS\""));
    }
}
