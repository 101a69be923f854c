//! Reading and writing matrices.
//!
//! Text form: one row per line, entries separated by whitespace, matrices
//! separated by blank lines. Lines starting with `#` are ignored. JSON form:
//! `{"n": 2, "entries": [[1, 0], [0, 1]]}`, or an array of such objects.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Parses any number of blank-line separated matrices.
pub fn parse_text(input: &str) -> Result<Vec<IntMatrix>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut first_line = 0;
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !rows.is_empty() {
                out.push(finish(std::mem::take(&mut rows), first_line)?);
            }
            continue;
        }
        if rows.is_empty() {
            first_line = lineno + 1;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {}: {t:?} is not an integer", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if !rows.is_empty() {
        out.push(finish(rows, first_line)?);
    }
    Ok(out)
}

fn finish(rows: Vec<Vec<i64>>, first_line: usize) -> Result<IntMatrix> {
    IntMatrix::from_rows(&rows).map_err(|e| Error::Parse(format!("matrix starting at line {first_line}: {e}")))
}

/// Parses a JSON matrix object or an array of them.
pub fn parse_json(input: &str) -> Result<Vec<IntMatrix>> {
    let value: serde_json::Value =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| Error::Parse(format!("invalid matrix object: {e}"))))
        .collect()
}

/// JSON if the input starts with `{` or `[`, text otherwise.
pub fn parse_matrices(input: &str) -> Result<Vec<IntMatrix>> {
    match input.trim_start().chars().next() {
        Some('{') | Some('[') => parse_json(input),
        _ => parse_text(input),
    }
}

/// Exactly one matrix.
pub fn parse_matrix(input: &str) -> Result<IntMatrix> {
    let mut all = parse_matrices(input)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Parse("no matrix found".into())),
        k => Err(Error::Parse(format!("expected one matrix, found {k}"))),
    }
}

/// Text form of one matrix, each row ending in a newline.
pub fn to_text(m: &IntMatrix) -> String {
    m.to_string()
}

/// Text form of several matrices, separated by blank lines.
pub fn to_text_list(ms: &[IntMatrix]) -> String {
    ms.iter().map(to_text).collect::<Vec<_>>().join("\n")
}
