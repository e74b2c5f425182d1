//! Value tables: one row per `n`, one column per `j`, for a fixed `m`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{mrn_value, QueryError, RamseyQuery, RamseyValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("empty {0} range")]
    EmptyRange(&'static str),
    #[error("unknown table format {0:?} (expected md or csv)")]
    UnknownFormat(String),
    #[error(transparent)]
    Query(#[from] QueryError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

impl FromStr for TableFormat {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            other => Err(TableError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub m: usize,
    pub j: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    pub format: TableFormat,
}

fn cell(v: RamseyValue) -> String {
    match v {
        RamseyValue::Finite(t) => t.to_string(),
        RamseyValue::Infinite => "inf".to_string(),
    }
}

/// Renders the table; infinite values print as `inf`.
pub fn render_table(spec: &TableSpec) -> Result<String, TableError> {
    if spec.j.is_empty() {
        return Err(TableError::EmptyRange("j"));
    }
    if spec.n.is_empty() {
        return Err(TableError::EmptyRange("n"));
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n".to_string()];
    header.extend(spec.j.clone().map(|j| format!("j={j}")));
    rows.push(header);
    for n in spec.n.clone() {
        let mut row = vec![n.to_string()];
        for j in spec.j.clone() {
            row.push(cell(mrn_value(&RamseyQuery::new(j, spec.m, n)?)));
        }
        rows.push(row);
    }

    let mut out = String::new();
    match spec.format {
        TableFormat::Csv => {
            for row in &rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            let _ = writeln!(out, "| {} |", rows[0].join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(rows[0].len()));
            for row in &rows[1..] {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
        }
    }
    Ok(out)
}
