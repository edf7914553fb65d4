//! Deterministic rendering: sorted keys, floats at 12 significant digits,
//! rationals as `"num/den"`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_rational::Ratio;
use serde_json::{json, Value};

use ecc_spectra::spectral::Inertia;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One compact JSON document per line.
    Json,
    /// Tab-separated table with a header row.
    Tsv,
    /// Indented JSON.
    Pretty,
}

/// Command result: data records, optionally followed by summary records.
#[derive(Debug, Default)]
pub struct Output {
    pub records: Vec<Value>,
    pub summary: Vec<Value>,
    /// Raw lines emitted verbatim in every format.
    pub lines: Vec<String>,
}

pub fn float(x: f64) -> Value {
    if x.is_nan() {
        return Value::from("nan");
    }
    if x.is_infinite() {
        return Value::from(if x > 0.0 { "inf" } else { "-inf" });
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    Value::from(if rounded == 0.0 { 0.0 } else { rounded })
}

pub fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().copied().map(float).collect())
}

pub fn ratio(r: Ratio<i64>) -> Value {
    if r.is_integer() {
        Value::from(*r.numer())
    } else {
        Value::from(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn inertia(i: Inertia) -> Value {
    json!({ "positive": i.n_plus, "negative": i.n_minus, "zero": i.n_zero })
}

pub fn render(out: &Output, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => {
            for v in out.records.iter().chain(&out.summary) {
                writeln!(s, "{v}").expect("write to string");
            }
        }
        Format::Pretty => {
            for v in out.records.iter().chain(&out.summary) {
                writeln!(s, "{}", serde_json::to_string_pretty(v).expect("serializable")).expect("write to string");
            }
        }
        Format::Tsv => {
            table(&mut s, &out.records);
            if !out.records.is_empty() && !out.summary.is_empty() {
                s.push('\n');
            }
            table(&mut s, &out.summary);
        }
    }
    for line in &out.lines {
        s.push_str(line);
        s.push('\n');
    }
    s
}

fn table(s: &mut String, records: &[Value]) {
    if records.is_empty() {
        return;
    }
    let columns: BTreeSet<&str> =
        records.iter().filter_map(Value::as_object).flat_map(|m| m.keys().map(String::as_str)).collect();
    let columns: Vec<&str> = columns.into_iter().collect();
    s.push_str(&columns.join("\t"));
    s.push('\n');
    for r in records {
        let row: Vec<String> = columns.iter().map(|c| cell(r.get(*c).unwrap_or(&Value::Null))).collect();
        s.push_str(&row.join("\t"));
        s.push('\n');
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(t) => t.replace(['\t', '\n'], " "),
        other => other.to_string(),
    }
}
