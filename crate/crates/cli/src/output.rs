//! Rendering of command results.

use serde_json::Value;

use crate::config::Format;
use crate::error::CliError;

/// A command result: the JSON document and a flat table for CSV and LaTeX.
pub struct Report {
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// `false` when a requested verification failed.
    pub ok: bool,
}

impl Report {
    pub fn new(json: Value, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Report { json, headers: headers.iter().map(|s| s.to_string()).collect(), rows, ok: true }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).map_err(|e| CliError::Io(e.to_string()))?;
                for r in &self.rows {
                    w.write_record(r).map_err(|e| CliError::Io(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
            }
            Format::Latex => Ok(self.latex()),
        }
    }

    fn latex(&self) -> String {
        let mut s = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(self.headers.len()));
        s += &self.headers.iter().map(|h| latex_escape(h)).collect::<Vec<_>>().join(" & ");
        s += " \\\\\n\\hline\n";
        for r in &self.rows {
            s += &r.iter().map(|c| cell(c)).collect::<Vec<_>>().join(" & ");
            s += " \\\\\n";
        }
        s += "\\hline\n\\end{tabular}\n";
        s
    }
}

/// Cells already in math notation pass through inside `$…$`.
fn cell(c: &str) -> String {
    if c.contains('\\') {
        format!("${c}$")
    } else {
        latex_escape(c)
    }
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '{' | '}' | '_' | '#' | '%' | '&' | '$' => {
                out.push('\\');
                out.push(ch);
            }
            _ => out.push(ch),
        }
    }
    out
}
