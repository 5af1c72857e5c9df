//! The shared matrix text format.
//!
//! UTF-8, one matrix row per line, entries separated by commas, `.` as the
//! decimal point. Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::linalg::{format_real, Matrix, Vector};

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| parse_entry(cell, line_no))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::MatrixFormat {
                    line: line_no,
                    msg: format!("expected {} entries, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::MatrixFormat {
            line: 0,
            msg: "no data rows".into(),
        });
    }
    Matrix::from_rows(&rows)
}

/// Reads a vector stored either as a single row or as a single column.
/// The result is always a column vector.
pub fn parse_vector(text: &str) -> Result<Vector> {
    let m = parse_matrix(text)?;
    if m.rows() == 1 {
        Vector::new(m.row(0).to_vec())
    } else if m.cols() == 1 {
        Vector::new(m.column(0))
    } else {
        Err(Error::MatrixFormat {
            line: 0,
            msg: format!("expected a single row or column, found {}x{}", m.rows(), m.cols()),
        })
    }
}

pub fn format_matrix(m: &Matrix) -> String {
    m.to_string()
}

/// Column vectors are written one entry per line, row vectors on one line.
pub fn format_vector(v: &Vector) -> String {
    v.to_matrix().to_string()
}

pub fn format_row(values: &[f64]) -> String {
    let cells: Vec<String> = values.iter().map(|v| format_real(*v)).collect();
    cells.join(",")
}

fn parse_entry(cell: &str, line: usize) -> Result<f64> {
    let cell = cell.trim();
    let ok = !cell.is_empty()
        && cell
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    let value = if ok { cell.parse::<f64>().ok() } else { None };
    match value {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(Error::MatrixFormat {
            line,
            msg: format!("`{cell}` is not a decimal number"),
        }),
    }
}
