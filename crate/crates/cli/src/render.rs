//! Text, CSV and JSON renderings of command output. All three draw on the
//! same records, so every rational appears in its canonical `p/q` form.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub enum Body {
    Rows(Vec<Map<String, Value>>),
    Report(Value),
}

pub struct Output {
    pub command: String,
    pub params: Map<String, Value>,
    pub body: Body,
}

fn cell(v: &Value, null: &str) -> String {
    match v {
        Value::Null => null.to_string(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

/// Union of keys in first-seen order.
fn header(rows: &[Map<String, Value>]) -> Vec<String> {
    let mut keys: Vec<String> = Vec::new();
    for r in rows {
        for k in r.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    keys
}

fn grid(rows: &[Map<String, Value>], null: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let keys = header(rows);
    let cells = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k).map_or_else(|| null.to_string(), |v| cell(v, null))).collect())
        .collect();
    (keys, cells)
}

fn report_rows(report: &Value) -> Vec<Map<String, Value>> {
    report["checks"]
        .as_array()
        .map(|cs| {
            cs.iter()
                .map(|c| {
                    let mut m = Map::new();
                    for k in ["status", "description", "expected", "actual"] {
                        m.insert(k.into(), c[k].clone());
                    }
                    m
                })
                .collect()
        })
        .unwrap_or_default()
}

pub fn write(out: &Output, format: Format, w: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let body_key = match out.body {
                Body::Rows(_) => "rows",
                Body::Report(_) => "report",
            };
            let body = match &out.body {
                Body::Rows(r) => Value::Array(r.iter().cloned().map(Value::Object).collect()),
                Body::Report(r) => r.clone(),
            };
            let doc = json!({ "command": out.command, "params": out.params, body_key: body });
            serde_json::to_writer_pretty(&mut *w, &doc)?;
            writeln!(w)
        }
        Format::Csv => {
            let rows = match &out.body {
                Body::Rows(r) => r.clone(),
                Body::Report(r) => report_rows(r),
            };
            let (keys, cells) = grid(&rows, "");
            let mut cw = csv::Writer::from_writer(&mut *w);
            cw.write_record(&keys).map_err(io::Error::other)?;
            for row in cells {
                cw.write_record(&row).map_err(io::Error::other)?;
            }
            cw.flush()
        }
        Format::Text => match &out.body {
            Body::Rows(rows) if rows.len() == 1 => {
                let width = rows[0].keys().map(String::len).max().unwrap_or(0);
                for (k, v) in &rows[0] {
                    writeln!(w, "{k:<width$}  {}", cell(v, "-"))?;
                }
                Ok(())
            }
            Body::Rows(rows) => {
                let (keys, cells) = grid(rows, "-");
                let widths: Vec<usize> = keys
                    .iter()
                    .enumerate()
                    .map(|(i, k)| cells.iter().map(|r| r[i].len()).chain([k.len()]).max().unwrap_or(0))
                    .collect();
                let line = |w: &mut dyn Write, cols: &[String]| -> io::Result<()> {
                    let parts: Vec<String> = cols.iter().zip(&widths).map(|(c, &n)| format!("{c:<n$}")).collect();
                    writeln!(w, "{}", parts.join("  ").trim_end())
                };
                line(w, &keys)?;
                for r in &cells {
                    line(w, r)?;
                }
                Ok(())
            }
            Body::Report(r) => {
                for c in r["checks"].as_array().into_iter().flatten() {
                    let status = cell(&c["status"], "");
                    let desc = cell(&c["description"], "");
                    if status == "PASS" {
                        writeln!(w, "{status}  {desc}")?;
                    } else {
                        writeln!(
                            w,
                            "{status}  {desc} (expected {}, got {})",
                            cell(&c["expected"], ""),
                            cell(&c["actual"], "")
                        )?;
                    }
                }
                let count = |s: &str| {
                    r["checks"]
                        .as_array()
                        .map_or(0, |cs| cs.iter().filter(|c| c["status"] == s).count())
                };
                writeln!(
                    w,
                    "{}: {} passed, {} failed, {} warnings",
                    cell(&r["suite"], ""),
                    count("PASS"),
                    count("FAIL"),
                    count("WARN")
                )
            }
        },
    }
}
