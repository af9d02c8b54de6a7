//! Pass/fail reports shared by the relation and consistency checkers.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRow {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { rows: Vec::new() }
    }

    pub fn push(&mut self, row: CheckRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.rows.extend(other.rows);
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.pass)
    }
}
