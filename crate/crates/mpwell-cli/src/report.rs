//! Machine-readable run reports.
//!
//! The JSON layout is frozen by `schemas/run_report.schema.json` at the
//! workspace root; integration tests validate every emission against it.

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// The pass flag is derived from the three numbers and nothing else.
    pub fn new(name: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            expected,
            actual,
            tolerance,
            pass: (expected - actual).abs() <= tolerance,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub command: String,
    pub parameters: serde_json::Value,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: impl Into<String>, parameters: serde_json::Value, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            parameters,
            checks,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}
