//! Tabular output rendered as TSV or JSON.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    /// Arbitrary-size integer or rational, already in decimal form.
    Big(String),
    /// A float printed with the given number of decimals, or in shortest
    /// round-trip form when `None`.
    Float(f64, Option<usize>),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn big(v: impl ToString) -> Self {
        Cell::Big(v.to_string())
    }

    pub fn text(v: impl Into<String>) -> Self {
        Cell::Text(v.into())
    }

    fn tsv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Float(v, Some(d)) => format!("{v:.d$}"),
            Cell::Float(v, None) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Big(s) | Cell::Text(s) => Value::String(s.clone()),
            Cell::Float(..) => {
                // Rounded floats go through their printed form so both formats agree.
                let printed = self.tsv();
                printed
                    .parse::<f64>()
                    .ok()
                    .and_then(serde_json::Number::from_f64)
                    .map_or(Value::String(printed), Value::Number)
            }
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Print only the values in TSV: no metadata, no header.
    pub bare: bool,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Table::default()
        }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        if !self.bare {
            for (k, v) in &self.meta {
                let _ = writeln!(out, "# {k}={v}");
            }
            let _ = writeln!(out, "{}", self.columns.join("\t"));
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::tsv).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }

    pub fn rows_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        let meta: Map<String, Value> = self.meta.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let mut obj = Map::new();
        obj.insert("meta".into(), Value::Object(meta));
        obj.insert("rows".into(), self.rows_json());
        Value::Object(obj)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// A command result: a table, optionally with a JSON document that
/// replaces the default JSON rendering of the table, and an exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub table: Table,
    pub json: Option<Value>,
    pub status: i32,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.table.to_tsv(),
            Format::Json => {
                let doc = self.json.clone().unwrap_or_else(|| self.table.to_json());
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

impl From<Table> for Output {
    fn from(table: Table) -> Self {
        Output {
            table,
            json: None,
            status: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_layout() {
        let mut t = Table::new(&["ell", "c"]).meta("ring", "mod2^24");
        t.push(vec![Cell::Int(2), Cell::big(66)]);
        assert_eq!(t.to_tsv(), "# ring=mod2^24\nell\tc\n2\t66\n");
        let j = t.to_json();
        assert_eq!(j["rows"][0]["c"], Value::String("66".into()));
        assert_eq!(j["rows"][0]["ell"], Value::from(2));
    }

    #[test]
    fn rounded_floats() {
        let mut t = Table::new(&["d"]);
        t.push(vec![Cell::Float(2.0 / 3.0, Some(6))]);
        assert_eq!(t.to_tsv(), "d\n0.666667\n");
        assert_eq!(t.rows_json()[0]["d"], serde_json::json!(0.666667));
    }
}
