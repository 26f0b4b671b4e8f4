//! Report rows and their CSV, JSON and text renderings.
//!
//! Renderings are byte-stable: identical rows always serialize to identical
//! bytes. Wall-clock timings are the one nondeterministic quantity, so
//! `elapsed_ms` stays empty unless a run asks for timings.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    /// What was checked, e.g. `e_g`, `cut`, `oracle-e_g`, `superadditivity`.
    pub check: String,
    pub n: u32,
    pub g: u64,
    pub formula_value: u64,
    pub construction_value: Option<u64>,
    pub oracle_value: Option<u64>,
    pub status: String,
    pub elapsed_ms: Option<u64>,
}

pub const COLUMNS: [&str; 8] =
    ["check", "n", "g", "formula_value", "construction_value", "oracle_value", "status", "elapsed_ms"];

impl ReportRow {
    pub fn new(check: impl Into<String>, n: u32, g: u64, formula_value: u64) -> Self {
        ReportRow {
            check: check.into(),
            n,
            g,
            formula_value,
            construction_value: None,
            oracle_value: None,
            status: String::new(),
            elapsed_ms: None,
        }
    }

    /// A construction that disagrees with the formula is a hard failure.
    pub fn is_consistent(&self) -> bool {
        self.construction_value.is_none_or(|c| c == self.formula_value)
    }

    fn cells(&self) -> [String; 8] {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        [
            self.check.clone(),
            self.n.to_string(),
            self.g.to_string(),
            self.formula_value.to_string(),
            opt(self.construction_value),
            opt(self.oracle_value),
            self.status.clone(),
            opt(self.elapsed_ms),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
    #[default]
    Text,
}

pub fn emit_report(rows: &[ReportRow], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(COLUMNS)?;
            for row in rows {
                w.write_record(row.cells())?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Stream(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(std::io::Error::from)?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Text => {
            let table: Vec<[String; 8]> = std::iter::once(COLUMNS.map(String::from))
                .chain(rows.iter().map(ReportRow::cells))
                .collect();
            let mut widths = [0usize; 8];
            for line in &table {
                for (w, cell) in widths.iter_mut().zip(line) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut s = String::new();
            for line in &table {
                let padded: Vec<String> = line.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
                s.push_str(padded.join("  ").trim_end());
                s.push('\n');
            }
            Ok(s)
        }
    }
}

/// Writes the rendering to `out`, or to stdout when `out` is `None`.
pub fn write_report(rows: &[ReportRow], format: ReportFormat, out: Option<&Path>) -> Result<()> {
    let text = emit_report(rows, format)?;
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
