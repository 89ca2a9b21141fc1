//! Structured verification reports.

use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    /// Both sides are only spelled out for failures and for recorded values.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub lhs: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub rhs: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Informational checks are recorded but never fail the report.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

/// Record of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct NumericReport {
    pub suite: String,
    pub config: BTreeMap<String, String>,
    pub conventions: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    /// Excluded from reproducibility comparisons.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
}

impl NumericReport {
    pub fn new(suite: impl Into<String>) -> Self {
        NumericReport {
            suite: suite.into(),
            config: BTreeMap::new(),
            conventions: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            passed: true,
            total: 0,
            failed: 0,
            generated_at: None,
        }
    }

    pub fn with_config(mut self, key: &str, value: impl ToString) -> Self {
        self.config.insert(key.into(), value.to_string());
        self
    }

    pub fn convention(&mut self, key: &str, value: impl ToString) {
        self.conventions.insert(key.into(), value.to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn push(&mut self, rec: CheckRecord) {
        self.total += 1;
        if !rec.passed && !rec.informational {
            self.failed += 1;
            self.passed = false;
        }
        self.checks.push(rec);
    }

    /// Exact identity: passes iff `equal`. Sides are rendered lazily.
    pub fn exact(&mut self, check: impl Into<String>, equal: bool, sides: impl FnOnce() -> (String, String)) {
        let (lhs, rhs) = if equal { (String::new(), String::new()) } else { sides() };
        self.push(CheckRecord {
            check: check.into(),
            lhs,
            rhs,
            residual: if equal { 0.0 } else { f64::NAN },
            tolerance: 0.0,
            passed: equal,
            informational: false,
        });
    }

    /// Numeric check with a relative residual against a tolerance.
    pub fn numeric(&mut self, check: impl Into<String>, residual: f64, tolerance: f64, lhs: String, rhs: String) {
        let passed = residual.is_finite() && residual < tolerance;
        self.push(CheckRecord { check: check.into(), lhs, rhs, residual, tolerance, passed, informational: false });
    }

    /// Recorded observation that does not affect the verdict.
    pub fn record(&mut self, check: impl Into<String>, holds: bool, lhs: String, rhs: String) {
        self.push(CheckRecord {
            check: check.into(),
            lhs,
            rhs,
            residual: if holds { 0.0 } else { f64::NAN },
            tolerance: 0.0,
            passed: holds,
            informational: true,
        });
    }

    pub fn merge(&mut self, other: NumericReport) {
        for rec in other.checks {
            self.push(rec);
        }
        self.notes.extend(other.notes);
        self.conventions.extend(other.conventions);
    }

    pub fn max_residual(&self, prefix: &str) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.check.starts_with(prefix))
            .map(|c| if c.residual.is_nan() { f64::INFINITY } else { c.residual })
            .fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed && !c.informational)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
