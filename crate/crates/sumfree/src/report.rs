//! Machine-readable verification reports.
//!
//! Every verification routine returns a [`Report`] that serializes to a
//! stable JSON shape: `{"schema":1,"kind":...,"params":...,"N":...,
//! "pass":...,"violations":[{"index":...,"expected":...,"actual":...}]}`
//! with an optional `"ranks"` list for regularity output. Expected and
//! actual values are decimal strings so arbitrary-precision numbers
//! survive the trip. Field order is fixed by declaration order, which
//! keeps repeated runs byte-identical.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub index: u64,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
    #[serde(rename = "N")]
    pub n: u64,
    pub pass: bool,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<usize>>,
}

impl Report {
    pub fn new(kind: &str, n: u64) -> Self {
        Report {
            schema: 1,
            kind: kind.to_string(),
            params: None,
            n,
            pass: true,
            violations: Vec::new(),
            ranks: None,
        }
    }

    pub fn with_params(mut self, params: serde_json::Value) -> Self {
        self.params = Some(params);
        self
    }

    /// Records one mismatch and flips the report to failing.
    pub fn record(&mut self, index: u64, expected: impl ToString, actual: impl ToString) {
        self.pass = false;
        self.violations.push(Violation {
            index,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// First violating index, if any; reports list violations in the
    /// order they were found, so this is the smallest checked index that
    /// failed.
    pub fn first_violation(&self) -> Option<u64> {
        self.violations.first().map(|v| v.index)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
