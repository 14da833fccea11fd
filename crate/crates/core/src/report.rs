//! Pass/fail bookkeeping shared by the table verifiers and the suite.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A known inconsistency in the source data; shown, never fatal.
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

impl Check {
    pub fn compare(description: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check {
            description: description.into(),
            expected,
            actual,
            status,
        }
    }

    pub fn new(description: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, status: Status) -> Self {
        Check {
            description: description.into(),
            expected: expected.into(),
            actual: actual.into(),
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Folds many comparisons into one check that records the first mismatch.
pub struct Sweep {
    description: String,
    total: usize,
    first_failure: Option<(String, String, String)>,
    failures: usize,
}

impl Sweep {
    pub fn new(description: impl Into<String>) -> Self {
        Sweep {
            description: description.into(),
            total: 0,
            first_failure: None,
            failures: 0,
        }
    }

    pub fn record(&mut self, case: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.total += 1;
        let (e, a) = (expected.to_string(), actual.to_string());
        if e != a {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some((case.to_string(), e, a));
            }
        }
    }

    pub fn record_err(&mut self, case: impl fmt::Display, err: impl fmt::Display) {
        self.record(case, "ok", format!("error: {err}"));
    }

    pub fn finish(self) -> Check {
        match self.first_failure {
            None => Check::new(
                self.description,
                format!("{} cases agree", self.total),
                format!("{} cases agree", self.total),
                if self.total == 0 { Status::Fail } else { Status::Pass },
            ),
            Some((case, e, a)) => Check::new(
                format!("{} [{} of {} failed; first: {case}]", self.description, self.failures, self.total),
                e,
                a,
                Status::Fail,
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    /// True when nothing failed; warnings do not count against it.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Check", 5)?;
        st.serialize_field("description", &self.description)?;
        st.serialize_field("expected", &self.expected)?;
        st.serialize_field("actual", &self.actual)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("pass", &self.passed())?;
        st.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Report", 3)?;
        st.serialize_field("suite", &self.suite)?;
        st.serialize_field("checks", &self.checks)?;
        st.serialize_field("all_pass", &self.all_pass())?;
        st.end()
    }
}
