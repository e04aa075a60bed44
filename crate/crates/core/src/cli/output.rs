use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Output format selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// The result of one command: named columns and rows of cells.
///
/// JSON renders `{command, params, results, timings, version}` with one
/// object per row; CSV renders the same rows under a header line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<BTreeMap<String, Value>>,
    pub timings: BTreeMap<String, f64>,
    pub version: String,
    #[serde(skip)]
    pub columns: Vec<String>,
}

/// Cell text as CSV and the table show it.
pub fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Document {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
            timings: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn row(&mut self, cells: Vec<Value>) {
        assert_eq!(cells.len(), self.columns.len(), "row width");
        self.results.push(self.columns.iter().cloned().zip(cells).collect());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for r in &self.results {
                    w.write_record(self.columns.iter().map(|c| cell_text(&r[c]))).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .results
            .iter()
            .map(|r| self.columns.iter().map(|c| cell_text(&r[c])).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, row: &[String]| {
            let parts: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &self.columns);
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        line(&mut out, &rule);
        for r in &cells {
            line(&mut out, r);
        }
        out
    }
}

/// Parse CSV produced by [`Document::render`] into header and rows.
pub fn parse_csv(s: &str) -> Result<(Vec<String>, Vec<Vec<String>>), csv::Error> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let header = r.headers()?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
        .collect::<Result<_, _>>()?;
    Ok((header, rows))
}
