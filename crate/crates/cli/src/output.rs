//! Output shaping shared by every subcommand: a tagged-cell table that
//! renders as aligned text, CSV, or a JSON array of row objects, plus a
//! matrix printer. Rationals always cross this boundary as exact "p/q"
//! strings; the only floating point anywhere is the opt-in approximate
//! column, and that column is always labeled `approx`.

use clap::ValueEnum;
use hankel_core::{Mat, Rational};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "ragged table row");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv(),
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (name, cell) in self.columns.iter().zip(row) {
                            obj.insert((*name).to_owned(), cell.clone());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                to_json_pretty(&Value::Array(rows))
            }
        }
    }

    fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        let plain_rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(plain).collect())
            .collect();
        for row in &plain_rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut line = |cells: Vec<&str>| {
            let joined = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            out.push_str(joined.trim_end());
            out.push('\n');
        };
        line(self.columns.to_vec());
        for row in &plain_rows {
            line(row.iter().map(String::as_str).collect());
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(plain).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// Cell text without JSON quoting; absent values print as "-".
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_owned(),
        other => other.to_string(),
    }
}

pub fn rat_cell(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn approx_cell(r: &Rational) -> Value {
    json!(r.to_f64())
}

fn matrix_strings(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| rat_cell(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

fn matrix_approx(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| approx_cell(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

/// Renders a matrix with its describing metadata. Text mode prints the
/// metadata line, the exact grid, and (with `decimal`) a second grid
/// labeled approximate. JSON mode emits one object with the metadata keys
/// first and the matrix under "matrix". CSV mode emits the exact entries,
/// one matrix row per line.
pub fn render_matrix(meta: &[(&str, Value)], m: &Mat, format: Format, decimal: bool) -> String {
    match format {
        Format::Text => {
            let desc = meta
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect::<Vec<_>>()
                .join(" ");
            let mut out = format!("{desc}\n{m}");
            if decimal {
                out.push_str("approx:\n");
                for i in 0..m.rows() {
                    let row = (0..m.cols())
                        .map(|j| format!("{:.6}", m[(i, j)].to_f64()))
                        .collect::<Vec<_>>()
                        .join("  ");
                    out.push_str(&row);
                    out.push('\n');
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for i in 0..m.rows() {
                let row = (0..m.cols())
                    .map(|j| m[(i, j)].to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&row);
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut obj = Map::new();
            for (k, v) in meta {
                obj.insert((*k).to_owned(), v.clone());
            }
            obj.insert("matrix".to_owned(), matrix_strings(m));
            if decimal {
                obj.insert("approx".to_owned(), matrix_approx(m));
            }
            to_json_pretty(&Value::Object(obj))
        }
    }
}

pub fn to_json_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}
