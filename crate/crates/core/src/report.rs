//! Verification reports: one row per checked case, each recording what was
//! expected, what was computed, and whether they agree.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

impl ReportRow {
    /// A row that passes when `expected == computed`.
    pub fn compare<T: Serialize + PartialEq>(case: impl Into<String>, expected: T, computed: T) -> Self {
        let pass = expected == computed;
        ReportRow {
            case: case.into(),
            expected: serde_json::to_value(expected).expect("serializable"),
            computed: serde_json::to_value(computed).expect("serializable"),
            pass,
        }
    }

    /// A row for a property that should hold.
    pub fn holds(case: impl Into<String>, computed: bool) -> Self {
        Self::compare(case, true, computed)
    }
}

impl fmt::Display for ReportRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{mark}  {}", self.case)?;
        if !self.pass || self.expected != Value::Bool(true) {
            write!(f, "  expected {} computed {}", self.expected, self.computed)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: String,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { schema: crate::SCHEMA, suite: suite.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = ReportRow>) {
        self.rows.extend(rows);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        let failed = self.failures().count();
        writeln!(f, "{}: {} checks, {} failed", self.suite, self.rows.len(), failed)
    }
}
