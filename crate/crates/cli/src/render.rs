//! Output formats. Every command builds a [`Report`] holding all the
//! renderings it supports; the `--format` flag picks one.

use clap::ValueEnum;
use econkit::linalg::format_real;
use econkit::{Error, Result};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned text, money amounts to the cent
    Table,
    /// Full-precision JSON
    Json,
    /// Comma-separated values (schedules and matrices)
    Csv,
}

pub struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    /// 0 normally, 2 when the answer is "no solution".
    pub exit: u8,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            csv: None,
            exit: 0,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn with_exit(mut self, code: u8) -> Self {
        self.exit = code;
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| Error::InvalidInput(format!("cannot encode JSON: {e}")))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.csv.clone().ok_or_else(|| {
                Error::InvalidInput("csv output is only available for schedules and matrices".into())
            }),
        }
    }
}

pub fn num(v: f64) -> String {
    format_real(v)
}

/// Money amount, rounded to the cent.
pub fn cu(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

pub fn list(values: &[f64]) -> String {
    if values.is_empty() {
        return "none".into();
    }
    values.iter().map(|v| num(*v)).collect::<Vec<_>>().join(", ")
}

pub fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".into(), num)
}

/// Label/value lines with the values aligned in one column.
#[derive(Default)]
pub struct Table {
    lines: Vec<(String, String)>,
}

impl Table {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(mut self, label: impl Into<String>, value: impl Into<String>) -> Self {
        self.lines.push((label.into(), value.into()));
        self
    }

    pub fn finish(self) -> String {
        let width = self.lines.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (label, value) in self.lines {
            let pad = width - label.chars().count();
            out.push_str(&format!("{label}{}  {value}\n", " ".repeat(pad)));
        }
        out
    }
}

/// Matrix in the shared text format under a `# title` comment line.
pub fn block(title: &str, body: &str) -> String {
    format!("# {title}\n{body}")
}
