//! Report envelope and output formats.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// One report: the parsed input, the result, and the formula it came from.
#[derive(Serialize)]
pub struct Report {
    pub input: Value,
    pub result: Value,
    pub provenance: String,
}

impl Report {
    pub fn new(input: Value, result: impl Serialize, provenance: impl Into<String>) -> Self {
        Report {
            input,
            result: serde_json::to_value(result).expect("serializable result"),
            provenance: provenance.into(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&json!({
                    "input": self.input,
                    "result": self.result,
                    "provenance": self.provenance,
                }))
                .expect("json");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut out = String::new();
                flatten("input", &self.input, &mut out);
                flatten("result", &self.result, &mut out);
                let _ = writeln!(out, "provenance\t{}", self.provenance);
                out
            }
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                let _ = writeln!(out, "{prefix}\t");
            }
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{prefix}\t{s}");
        }
        other => {
            let _ = writeln!(out, "{prefix}\t{other}");
        }
    }
}

/// Rounds to `digits` decimal places for display.
pub fn round(x: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    (x * scale).round() / scale
}
