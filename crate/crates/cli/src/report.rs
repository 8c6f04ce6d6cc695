//! Verification reports and their JSON, CSV and plain-text renderings.

use std::fmt::Write as _;

use num_complex::Complex;
use serde::Serialize;
use serde_json::Value;

/// CSV header of a report.
pub const CSV_COLUMNS: [&str; 9] = [
    "name", "param_json", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "tol", "pass",
];

/// Shortest round-trip rendering, identical to the JSON output.
pub fn number(x: f64) -> String {
    Value::from(x).to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex<f64>> for JsonComplex {
    fn from(z: Complex<f64>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// One identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: Value,
    pub lhs: JsonComplex,
    pub rhs: JsonComplex,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// `pass` is derived: `residual <= tolerance` (false for NaN).
    pub fn new(
        name: impl Into<String>,
        parameters: Value,
        lhs: Complex<f64>,
        rhs: Complex<f64>,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            name: name.into(),
            parameters,
            lhs: lhs.into(),
            rhs: rhs.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, records: Vec<CheckRecord>) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        };
        Self {
            suite: suite.into(),
            seed,
            records,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.name.clone(),
                r.parameters.to_string(),
                number(r.lhs.re),
                number(r.lhs.im),
                number(r.rhs.re),
                number(r.rhs.im),
                number(r.residual),
                number(r.tolerance),
                r.pass.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let _ = writeln!(
            out,
            "{:<width$}  {:>12}  {:>9}  result",
            "name", "residual", "tol",
            width = width
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:<width$}  {:>12.3e}  {:>9.1e}  {}",
                r.name,
                r.residual,
                r.tolerance,
                if r.pass { "pass" } else { "FAIL" },
                width = width
            );
        }
        let _ = writeln!(
            out,
            "suite {} (seed {}): {} checks, {} passed, {} failed",
            self.suite, self.seed, self.summary.total, self.summary.passed, self.summary.failed
        );
        out
    }
}
