//! Numeric tables with named columns, read and written as CSV or JSON.
//!
//! CSV has a header row; JSON is an array of row objects. Numbers are
//! written in the shortest form that parses back to the same `f64`.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use crate::error::{CliError, Kind, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn write(&self, format: Format) -> Result<String> {
        if let Some((i, j)) = self.first_non_finite() {
            return Err(CliError::new(
                Kind::Numerical,
                format!("non-finite value in column '{}' at row {i}", self.columns[j]),
            ));
        }
        Ok(match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        })
    }

    fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|v| !v.is_finite()).map(|j| (i, j)))
    }

    fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", fmt_number(*v));
            }
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(c, &v)| (c.clone(), json_number(v))).collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("finite numbers serialise");
        s.push('\n');
        s
    }

    /// Parses either format; JSON is recognised by a leading `[`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            Self::from_json(text)
        } else {
            Self::from_csv(text)
        }
    }

    fn from_csv(text: &str) -> Result<Self> {
        let mut reader =
            csv::ReaderBuilder::new().trim(csv::Trim::All).comment(Some(b'#')).from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| CliError::input(format!("bad CSV header: {e}")))?;
        let mut table = Table::new(headers.iter());
        if table.columns.iter().all(|c| c.is_empty()) {
            return Err(CliError::input("table has no header"));
        }
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| CliError::input(format!("bad CSV row {}: {e}", i + 1)))?;
            let row = record
                .iter()
                .map(|field| {
                    field
                        .parse::<f64>()
                        .map_err(|_| CliError::input(format!("row {}: '{field}' is not a number", i + 1)))
                })
                .collect::<Result<Vec<f64>>>()?;
            table.rows.push(row);
        }
        Ok(table)
    }

    fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| CliError::input(format!("bad JSON: {e}")))?;
        let Value::Array(items) = value else {
            return Err(CliError::input("JSON table must be an array of row objects"));
        };
        let mut table: Option<Table> = None;
        for (i, item) in items.iter().enumerate() {
            let Value::Object(obj) = item else {
                return Err(CliError::input(format!("JSON row {i} is not an object")));
            };
            let t = table.get_or_insert_with(|| Table::new(obj.keys().cloned()));
            if obj.len() != t.columns.len() {
                return Err(CliError::input(format!(
                    "JSON row {i} has {} fields, expected {}",
                    obj.len(),
                    t.columns.len()
                )));
            }
            let row = t
                .columns
                .iter()
                .map(|c| match obj.get(c) {
                    Some(Value::Number(n)) => n.as_f64().ok_or_else(|| CliError::input(format!("row {i}: bad number"))),
                    Some(_) => Err(CliError::input(format!("row {i}: field '{c}' is not a number"))),
                    None => Err(CliError::input(format!("row {i}: missing field '{c}'"))),
                })
                .collect::<Result<Vec<f64>>>()?;
            t.rows.push(row);
        }
        Ok(table.unwrap_or_else(|| Table::new(Vec::<String>::new())))
    }
}

/// Integers without a fractional part, everything else in the shortest
/// round-trip form.
pub fn fmt_number(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 9.007_199_254_740_992e15 {
        format!("{v}")
    } else {
        format!("{v:?}")
    }
}

fn json_number(v: f64) -> Value {
    if v.fract() == 0.0 && v.abs() < 9.007_199_254_740_992e15 && !(v == 0.0 && v.is_sign_negative()) {
        Value::Number(Number::from(v as i64))
    } else {
        Value::Number(Number::from_f64(v).expect("finite"))
    }
}
