//! Table / JSON / CSV rendering shared by every subcommand.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// One line per row, aligned columns.
    Rows,
    /// One line per column of a single record.
    Record,
}

/// Everything a subcommand prints.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub constants: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub layout: Layout,
    /// Extra entries for the JSON "meta" object.
    pub meta: Vec<(&'static str, Cell)>,
    /// Human-only footer lines, shown in table output.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, constants: &'static str, columns: Vec<&'static str>) -> Self {
        Report {
            command,
            constants,
            columns,
            rows: Vec::new(),
            layout: Layout::Rows,
            meta: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// `x` in scientific notation with at most `digits` significant digits,
/// trailing zeros of the mantissa dropped. Locale independent.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    let s = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exp) = s.split_once('e').expect("LowerExp always has an exponent");
    let mantissa = if mantissa.contains('.') {
        mantissa.trim_end_matches('0').trim_end_matches('.')
    } else {
        mantissa
    };
    format!("{mantissa}e{exp}")
}

fn cell_text(cell: &Cell, digits: usize) -> String {
    match cell {
        Cell::Int(i) => i.to_string(),
        Cell::Real(x) => format_sig(*x, digits),
        Cell::Text(s) => s.clone(),
    }
}

fn cell_json(cell: &Cell, digits: usize) -> Value {
    match cell {
        Cell::Int(i) => json!(i),
        Cell::Real(x) => {
            let rounded: f64 = format_sig(*x, digits)
                .parse()
                .expect("formatted float parses back");
            json!(rounded)
        }
        Cell::Text(s) => json!(s),
    }
}

pub fn render(report: &Report, format: OutputFormat, digits: usize) -> String {
    match format {
        OutputFormat::Table => render_table(report, digits),
        OutputFormat::Json => render_json(report, digits),
        OutputFormat::Csv => render_csv(report, digits),
    }
}

fn render_table(report: &Report, digits: usize) -> String {
    let text: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|row| row.iter().map(|c| cell_text(c, digits)).collect())
        .collect();
    let mut out = String::new();
    match report.layout {
        Layout::Rows => {
            let widths: Vec<usize> = report
                .columns
                .iter()
                .enumerate()
                .map(|(i, h)| text.iter().map(|r| r[i].len()).fold(h.len(), usize::max))
                .collect();
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_owned()
            };
            writeln!(out, "{}", line(report.columns.clone())).unwrap();
            for row in &text {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
            }
        }
        Layout::Record => {
            let width = report.columns.iter().map(|c| c.len()).max().unwrap_or(0);
            for (ri, row) in text.iter().enumerate() {
                if ri > 0 {
                    out.push('\n');
                }
                for (name, value) in report.columns.iter().zip(row) {
                    writeln!(out, "{name:<width$}  {value}").unwrap();
                }
            }
        }
    }
    for note in &report.notes {
        writeln!(out, "{note}").unwrap();
    }
    out
}

fn render_json(report: &Report, digits: usize) -> String {
    let mut meta = Map::new();
    meta.insert("command".into(), json!(report.command));
    meta.insert("constants".into(), json!(report.constants));
    meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    for (key, cell) in &report.meta {
        meta.insert((*key).into(), cell_json(cell, digits));
    }
    let data: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = report
                .columns
                .iter()
                .zip(row)
                .map(|(k, c)| ((*k).to_owned(), cell_json(c, digits)))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let doc = json!({ "meta": meta, "data": data });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn render_csv(report: &Report, digits: usize) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&report.columns).expect("in-memory write");
    for row in &report.rows {
        w.write_record(row.iter().map(|c| cell_text(c, digits)))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(1.602e-19, 6), "1.602e-19");
        assert_eq!(format_sig(1.602176634e-19, 6), "1.60218e-19");
        assert_eq!(format_sig(1.602176634e-19, 2), "1.6e-19");
        assert_eq!(format_sig(3e8, 6), "3e8");
        assert_eq!(format_sig(-13.605693, 5), "-1.3606e1");
        assert_eq!(format_sig(0.0, 6), "0");
        assert_eq!(format_sig(0.1, 17), "1.0000000000000001e-1");
    }

    fn sample() -> Report {
        let mut r = Report::new("test", "full", vec!["n", "x", "label"]);
        r.push_row(vec![1u32.into(), 0.5.into(), "a,b".into()]);
        r.push_row(vec![10u32.into(), 1.25e-10.into(), "c".into()]);
        r.notes.push("note".into());
        r
    }

    #[test]
    fn csv_quotes_and_terminates() {
        let s = render(&sample(), OutputFormat::Csv, 6);
        assert_eq!(s, "n,x,label\n1,5e-1,\"a,b\"\n10,1.25e-10,c\n");
    }

    #[test]
    fn table_aligns() {
        let s = render(&sample(), OutputFormat::Table, 6);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "n   x         label");
        assert_eq!(lines[1], "1   5e-1      a,b");
        assert_eq!(lines[3], "note");
    }

    #[test]
    fn json_shape() {
        let s = render(&sample(), OutputFormat::Json, 6);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["meta"]["constants"], "full");
        assert_eq!(v["data"][1]["x"], 1.25e-10);
        assert_eq!(v["data"][0]["label"], "a,b");
        assert!(!s.contains("note"));
    }
}
