//! Human, JSON and CSV rendering. Numbers in JSON and CSV carry 15
//! significant digits; non-finite values become null or an empty field.

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use specfn::identities::{AdjudicationCase, IdentityReport};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// Rounds to 15 significant digits.
pub fn round15(v: f64) -> f64 {
    if v.is_finite() && v != 0.0 {
        format!("{v:.14e}").parse().unwrap_or(v)
    } else {
        v
    }
}

pub fn fmt_num(v: f64) -> String {
    let r = round15(v);
    if !v.is_finite() {
        String::new()
    } else if r == 0.0 || (1e-4..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn json_num(v: f64) -> Value {
    serde_json::Number::from_f64(round15(v)).map_or(Value::Null, Value::Number)
}

/// Rounds every float inside a JSON document.
fn round_json(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(f) = n.as_f64() {
                *v = json_num(f);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(u64),
    Num(f64),
    Text(String),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt_num(*v),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Num(v) => json_num(*v),
            Cell::Text(s) => json!(s),
        }
    }
}

pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Human => self.print_human(),
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let map: Map<String, Value> =
                            self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                        Value::Object(map)
                    })
                    .collect();
                println!("{}", Value::Array(rows));
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(std::io::stdout());
                let _ = w.write_record(&self.columns);
                for r in &self.rows {
                    let _ = w.write_record(r.iter().map(Cell::text));
                }
                let _ = w.flush();
            }
        }
    }

    fn print_human(&self) {
        let texts: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                texts
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        println!("{}", line(self.columns.iter().map(String::as_str).collect()));
        for r in &texts {
            println!("{}", line(r.iter().map(String::as_str).collect()));
        }
    }
}

pub fn print_verify(
    reports: &[IdentityReport],
    cases: &[AdjudicationCase],
    passed: usize,
    failed: usize,
    format: Format,
) {
    match format {
        Format::Human => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let worst = r.worst.as_deref().map(|w| format!(" [worst {w}]")).unwrap_or_default();
                println!(
                    "{status}  {:<22} residual {:.3e}  tol {:.1e}{worst}  ({:.2} s)",
                    r.id,
                    r.residual,
                    r.tolerance,
                    r.elapsed.as_secs_f64()
                );
                if let Some(e) = &r.error {
                    println!("      error: {e}");
                }
            }
            if !cases.is_empty() {
                println!();
                println!("adjudication:");
            }
            for c in cases {
                let verdict = c
                    .verdict_reading()
                    .map(|r| r.description.clone())
                    .unwrap_or_else(|| "none".into());
                println!("  {:<26} verdict: {verdict}", c.id);
                for r in &c.readings {
                    println!("      {:.3e}  {}", r.residual, r.description);
                }
                if let Some(e) = &c.error {
                    println!("      error: {e}");
                }
            }
            println!();
            println!("{passed} passed, {failed} failed, {} identities", reports.len());
        }
        Format::Json => {
            let mut doc = json!({
                "identities": reports,
                "adjudication": cases,
                "summary": {"passed": passed, "failed": failed, "total": reports.len()},
            });
            round_json(&mut doc);
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable report"));
        }
        Format::Csv => {
            let mut table = Table::new(&["id", "lhs", "rhs", "residual", "tolerance", "pass"]);
            for r in reports {
                table.row(vec![
                    r.id.as_str().into(),
                    r.lhs.into(),
                    r.rhs.into(),
                    r.residual.into(),
                    r.tolerance.into(),
                    if r.pass { "true" } else { "false" }.into(),
                ]);
            }
            table.print(Format::Csv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(round15(0.1234567890123456789), 0.123456789012346);
        assert_eq!(round15(1.0), 1.0);
        assert!(round15(f64::NAN).is_nan());
        assert_eq!(json_num(f64::INFINITY), Value::Null);
        assert_eq!(fmt_num(1.5e-14), "1.5e-14");
        assert_eq!(fmt_num(0.25), "0.25");
        assert_eq!(fmt_num(f64::NAN), "");
    }

    #[test]
    fn nested_json_is_rounded() {
        let mut v = json!({"a": [1.0f64 / 3.0, {"b": 2.0f64 / 3.0}], "n": 3});
        round_json(&mut v);
        assert_eq!(v["a"][0], json!(0.333333333333333));
        assert_eq!(v["a"][1]["b"], json!(0.666666666666667));
        assert_eq!(v["n"], json!(3));
    }
}
