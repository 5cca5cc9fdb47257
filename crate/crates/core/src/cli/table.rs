//! Rendering of command results as human text, CSV or JSON lines.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value as Json};

use crate::numerics::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    StructuredRecords,
}

impl Format {
    /// `.csv` and `.jsonl`/`.json` pick their format, anything else is human.
    pub fn infer(path: Option<&std::path::Path>) -> Format {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("csv") => Format::Csv,
            Some("jsonl" | "json") => Format::StructuredRecords,
            _ => Format::Human,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Nums(Vec<f64>),
    Empty,
}

/// 17 significant digits, enough to round-trip a double.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Nums(vs) => vs.iter().map(|v| fmt_num(*v)).collect::<Vec<_>>().join(";"),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Json {
        let num = |v: f64| match serde_json::Number::from_f64(v) {
            Some(n) => Json::Number(n),
            None => Json::Null,
        };
        match self {
            Cell::Num(v) => num(*v),
            Cell::Int(n) => Json::from(*n),
            Cell::Text(s) => Json::from(s.as_str()),
            Cell::Bool(b) => Json::from(*b),
            Cell::Nums(vs) => Json::Array(vs.iter().map(|&v| num(v)).collect()),
            Cell::Empty => Json::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
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

impl From<Vec<f64>> for Cell {
    fn from(v: Vec<f64>) -> Self {
        Cell::Nums(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

/// Builds one row, declaring columns on the first row.
pub struct RowBuilder<'a> {
    table: &'a mut Table,
    cells: Vec<Cell>,
}

impl RowBuilder<'_> {
    pub fn cell(mut self, name: &'static str, v: impl Into<Cell>) -> Self {
        if self.table.rows.is_empty() {
            self.table.columns.push(name);
        } else {
            debug_assert_eq!(self.table.columns.get(self.cells.len()), Some(&name));
        }
        self.cells.push(v.into());
        self
    }

    pub fn complex(self, name: (&'static str, &'static str), z: ComplexValue) -> Self {
        self.cell(name.0, z.re).cell(name.1, z.im)
    }

    pub fn finish(self) {
        self.table.rows.push(self.cells);
    }
}

impl Table {
    pub fn row(&mut self) -> RowBuilder<'_> {
        RowBuilder { table: self, cells: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human(),
            Format::Csv => self.csv(),
            Format::StructuredRecords => self.json_lines(),
        }
    }

    // A single row prints as `key: value` lines, several as aligned columns.
    fn human(&self) -> String {
        let mut out = String::new();
        if self.rows.len() == 1 {
            let w = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
            for (c, v) in self.columns.iter().zip(&self.rows[0]) {
                let _ = writeln!(out, "{c:<w$}  {}", v.text());
            }
            return out;
        }
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: Vec<&str>| {
            let mut s = items.iter().zip(&widths).map(|(t, w)| format!("{t:<w$}")).collect::<Vec<_>>().join("  ");
            s.truncate(s.trim_end().len());
            s + "\n"
        };
        out.push_str(&line(self.columns.clone()));
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let obj: Map<String, Json> = self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
            out.push_str(&Json::Object(obj).to_string());
            out.push('\n');
        }
        out
    }
}
