//! Deterministic CSV and JSON rendering of result tables.
//!
//! Real numbers are written in scientific notation with enough significant
//! digits to reparse to the same binary value at the reporting precision.
//! In JSON they are strings, so no reader silently narrows them to `f64`.

use std::fs;
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::numerics::{HighPrecReal, PrecisionContext};
use crate::sto::ConvergenceRow;

/// Column header of convergence tables.
pub const CONVERGENCE_HEADER: [&str; 7] = ["method", "alpha", "nu", "N", "value", "analytic", "rel_err"];

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    pub fn real(value: &HighPrecReal, ctx: &PrecisionContext) -> Self {
        Cell::Text(value.to_sci_string(ctx.round_trip_digits()))
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<Option<i32>> for Cell {
    fn from(v: Option<i32>) -> Self {
        v.map_or(Cell::Empty, Cell::from)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// A header plus rows of cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `column=value` pairs of one row, for diagnostics.
    pub fn describe_row(&self, index: usize) -> Option<String> {
        let row = self.rows.get(index)?;
        let pairs: Vec<String> = self
            .header
            .iter()
            .zip(row)
            .map(|(h, c)| format!("{h}={}", c.csv()))
            .collect();
        Some(pairs.join(", "))
    }

    /// Comma-separated, LF-terminated lines.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of objects keyed by the header names.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self.header.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(object)
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&Value::Array(rows)).expect("JSON values always serialize");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Convergence rows as a table with [`CONVERGENCE_HEADER`].
pub fn convergence_table_report(rows: &[ConvergenceRow], ctx: &PrecisionContext) -> Table {
    let mut table = Table::new(&CONVERGENCE_HEADER);
    for row in rows {
        table.push(vec![
            row.method.as_str().into(),
            row.alpha.into(),
            row.nu.into(),
            row.n.into(),
            Cell::real(&row.value, ctx),
            Cell::real(&row.analytic, ctx),
            Cell::real(&row.rel_err, ctx),
        ]);
    }
    table
}

/// Writes convergence rows as CSV to `path`.
pub fn emit_csv(rows: &[ConvergenceRow], path: &Path, ctx: &PrecisionContext) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidParameter("no rows to write".into()));
    }
    fs::write(path, convergence_table_report(rows, ctx).to_csv())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::parse_decimal;
    use crate::sto::{convergence_table, IntegralSpec, Method, StoParams};

    fn rows(n_max: u32) -> (Vec<ConvergenceRow>, PrecisionContext) {
        let ctx = PrecisionContext::default();
        let q = |s: &str| parse_decimal(s).unwrap();
        let spec = IntegralSpec::new(
            StoParams::new(q("2.3"), q("3.56")).unwrap(),
            StoParams::new(q("4.6"), q("4.65")).unwrap(),
            q("1.1"),
            q("5.1"),
        )
        .unwrap();
        let methods = [Method::LtpArranged, Method::LtpRearranged];
        (
            convergence_table(&spec, &methods, &[-2, -1, 0, 1, 2], 0, n_max, &ctx).unwrap(),
            ctx,
        )
    }

    #[test]
    fn csv_shape() {
        let (rows, ctx) = rows(4);
        let csv = convergence_table_report(&rows[..1], &ctx).to_csv();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.starts_with("method,alpha,nu,N,value,analytic,rel_err\n"));
        assert!(!csv.contains('\r'));
        let full = convergence_table_report(&rows, &ctx).to_csv();
        assert_eq!(full.lines().count(), 5 * 4 * 2 + 1);
    }

    #[test]
    fn forty_rows_per_alpha_and_method() {
        let (rows, ctx) = rows(40);
        assert_eq!(convergence_table_report(&rows, &ctx).to_csv().lines().count(), 401);
    }

    #[test]
    fn values_round_trip() {
        let (rows, ctx) = rows(3);
        let csv = convergence_table_report(&rows, &ctx).to_csv();
        for (line, row) in csv.lines().skip(1).zip(&rows) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(ctx.parse(fields[4]).unwrap(), row.value, "{line}");
            assert_eq!(
                ctx.parse(fields[6]).unwrap(),
                row.rel_err,
                "{line} {}",
                row.rel_err.to_sci_string(30)
            );
        }
    }

    #[test]
    fn json_mirrors_csv() {
        let (rows, ctx) = rows(2);
        let table = convergence_table_report(&rows, &ctx);
        let parsed: Value = serde_json::from_str(&table.to_json()).unwrap();
        let items = parsed.as_array().unwrap();
        assert_eq!(items.len(), rows.len());
        let keys: Vec<&str> = items[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
        let mut expected = CONVERGENCE_HEADER.to_vec();
        expected.sort();
        let mut got = keys.clone();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(items[0]["N"], Value::from(1));
        assert!(items[0]["value"].is_string());
    }

    #[test]
    fn file_output_is_byte_identical() {
        let (rows, ctx) = rows(3);
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.csv");
        let b = dir.path().join("b.csv");
        emit_csv(&rows, &a, &ctx).unwrap();
        emit_csv(&rows, &b, &ctx).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert!(emit_csv(&[], &a, &ctx).is_err());
        assert!(emit_csv(&rows, &dir.path().join("missing/x.csv"), &ctx).is_err());
    }
}
