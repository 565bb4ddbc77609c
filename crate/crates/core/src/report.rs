//! Check-by-check results of the `verify_*` routines.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

/// Raised by a `verify_*` routine when any check fails. Carries the first
/// failing entry and the full report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("verification failed: {} (n = {}): {}", .first.check, .first.n, .first.detail)]
pub struct VerificationFailure {
    pub first: CheckEntry,
    pub report: Report,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn record(&mut self, check: impl Into<String>, n: usize, pass: bool, detail: impl Into<String>) -> bool {
        self.entries.push(CheckEntry {
            check: check.into(),
            n,
            pass,
            detail: detail.into(),
        });
        pass
    }

    /// Records `left == right`, describing both sides on failure.
    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, check: impl Into<String>, n: usize, left: &T, right: &T) -> bool {
        let pass = left == right;
        let detail = if pass {
            format!("{left:?}")
        } else {
            format!("{left:?} != {right:?}")
        };
        self.record(check, n, pass, detail)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// `Ok(self)` if every check passed.
    pub fn into_result(self) -> Result<Report, VerificationFailure> {
        match self.entries.iter().find(|e| !e.pass) {
            None => Ok(self),
            Some(first) => Err(VerificationFailure {
                first: first.clone(),
                report: self.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("report entries are serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.pass { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {} (n = {}): {}", e.check, e.n, e.detail)?;
        }
        Ok(())
    }
}
