//! Machine-readable report emission. One schema for every command:
//! `{tool_version, command, inputs_digest, verdict?, ..., results[]}`,
//! with csv and text renderings flattened from the same rows. Exit codes
//! depend only on the verdict, never on the format.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use dbmw_core::{CheckReport, MultiPoly};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    /// None for commands that only emit data.
    pub verdict: Option<bool>,
    /// Extra top-level fields (e.g. r/limit/kind for qfun).
    pub extra: Vec<(String, Value)>,
    /// JSON key for the result array ("results", or "entries" for tables).
    pub results_key: &'static str,
    pub results: Vec<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, digest_input: &[u8]) -> Self {
        Report {
            command: command.into(),
            inputs_digest: hex_digest(digest_input),
            verdict: None,
            extra: Vec::new(),
            results_key: "results",
            results: Vec::new(),
        }
    }

    pub fn with_extra(mut self, key: &str, value: Value) -> Self {
        self.extra.push((key.to_string(), value));
        self
    }

    pub fn push_check_rows(&mut self, report: &CheckReport) {
        self.push_check_rows_keyed(report, "name");
    }

    /// Like `push_check_rows` but with a custom key for the identity name
    /// (module relation reports use "relation").
    pub fn push_check_rows_keyed(&mut self, report: &CheckReport, key: &str) {
        for row in &report.rows {
            let mut v = json!({
                key: row.name,
                "status": if row.pass { "pass" } else { "fail" },
            });
            if let Some(w) = &row.witness {
                v["witness"] = json!(w);
            }
            self.results.push(v);
        }
    }

    pub fn push_value(&mut self, name: &str, value: impl Into<Value>) {
        self.results.push(json!({ "name": name, "value": value.into() }));
    }

    pub fn push_poly(&mut self, name: &str, poly: &MultiPoly) {
        self.results.push(json!({
            "name": name,
            "poly": poly.to_records(),
            "value": poly.to_string(),
        }));
    }

    pub fn push_row(&mut self, row: Value) {
        self.results.push(row);
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.emit_json(),
            Format::Csv => self.emit_csv(),
            Format::Text => self.emit_text(),
        }
    }

    fn emit_json(&self) -> String {
        let mut doc = json!({
            "tool_version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs_digest": self.inputs_digest,
        });
        if let Some(v) = self.verdict {
            doc["verdict"] = json!(v);
        }
        for (k, v) in &self.extra {
            doc[k.as_str()] = v.clone();
        }
        doc[self.results_key] = Value::Array(self.results.clone());
        serde_json::to_string_pretty(&doc).unwrap()
    }

    /// name, status, witness and value columns for each result row.
    fn emit_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["name", "status", "witness", "value"]).unwrap();
        for row in &self.results {
            wtr.write_record([
                row_name(row),
                field(row, "status"),
                field(row, "witness"),
                row_value(row),
            ])
            .unwrap();
        }
        String::from_utf8(wtr.into_inner().unwrap()).unwrap()
    }

    fn emit_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} ({})\n", self.command, self.inputs_digest));
        for (k, v) in &self.extra {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for row in &self.results {
            let name = row_name(row);
            match row.get("status").and_then(Value::as_str) {
                Some("pass") => out.push_str(&format!("PASS {name}\n")),
                Some(_) => {
                    let w = field(row, "witness");
                    if w.is_empty() {
                        out.push_str(&format!("FAIL {name}\n"));
                    } else {
                        out.push_str(&format!("FAIL {name} [{w}]\n"));
                    }
                }
                None => {
                    let v = row_value(row);
                    out.push_str(&format!("{name} = {v}\n"));
                }
            }
        }
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out
    }
}

fn row_name(row: &Value) -> String {
    for key in ["name", "relation"] {
        if let Some(n) = row.get(key).and_then(Value::as_str) {
            return n.to_string();
        }
    }
    // structure-constant rows are keyed by (generator, word)
    match (
        row.get("generator").and_then(Value::as_str),
        row.get("word").and_then(Value::as_str),
    ) {
        (Some(g), Some(w)) => format!("{g} * {w}"),
        (None, Some(w)) => w.to_string(),
        _ => String::new(),
    }
}

fn row_value(row: &Value) -> String {
    if let Some(v) = row.get("value") {
        return match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
    }
    if let Some(exp) = row.get("expansion").and_then(Value::as_array) {
        return exp
            .iter()
            .map(|e| {
                format!(
                    "({}) [{}]",
                    e.get("coeff").and_then(Value::as_str).unwrap_or(""),
                    e.get("word").and_then(Value::as_str).unwrap_or("")
                )
            })
            .collect::<Vec<_>>()
            .join(" + ");
    }
    String::new()
}

fn field(row: &Value, key: &str) -> String {
    row.get(key)
        .and_then(Value::as_str)
        .unwrap_or("")
        .to_string()
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
