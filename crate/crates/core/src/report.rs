//! Machine-readable check reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity or result the check exercises.
    pub reference: String,
    pub status: Status,
    pub measured: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// One row of a bound-state table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub label: String,
    pub kappa: i32,
    pub xi: u32,
    pub n: u32,
    pub j: f64,
    pub binding_ev: f64,
    pub series_binding_ev: f64,
    pub relative_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<SpectrumRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            checks: Vec::new(),
            rows: Vec::new(),
            notes: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    fn push(&mut self, name: &str, reference: &str, status: Status, measured: f64, tolerance: f64) -> Status {
        match status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.checks.push(Check {
            name: name.to_string(),
            reference: reference.to_string(),
            status,
            measured,
            tolerance,
        });
        status
    }

    /// Passes iff `measured` is finite and `|measured| ≤ tolerance`.
    pub fn within(&mut self, name: &str, reference: &str, measured: f64, tolerance: f64) -> Status {
        let ok = measured.is_finite() && measured.abs() <= tolerance;
        self.push(name, reference, if ok { Status::Pass } else { Status::Fail }, measured, tolerance)
    }

    /// Pass/fail on a boolean; `measured` is 1 for true and 0 for false.
    pub fn assert(&mut self, name: &str, reference: &str, ok: bool) -> Status {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, reference, status, if ok { 1.0 } else { 0.0 }, 0.0)
    }

    pub fn skip(&mut self, name: &str, reference: &str) -> Status {
        self.push(name, reference, Status::Skipped, 0.0, 0.0)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
