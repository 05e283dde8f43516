//! Report envelope and its JSON / markdown renderings.
//!
//! Markdown is produced from the same JSON value, so both formats carry
//! exactly the same numbers.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: Vec<String>, payload: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            payload,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable report");
                s.push('\n');
                s
            }
            Format::Markdown => self.markdown(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# skewtor {}\n\n", self.command.join(" ")));
        out.push_str(&format!("- **schema_version**: {}\n", self.schema_version));
        match &self.payload {
            Value::Object(map) => object(&mut out, map, 2),
            other => out.push_str(&format!("\n{}\n", inline(other))),
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim_end().replace('\n', "; "),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter()
                .map(|(k, v)| format!("{k}: {}", inline(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

fn is_table(a: &[Value]) -> bool {
    !a.is_empty() && a.iter().all(Value::is_object)
}

fn object(out: &mut String, map: &Map<String, Value>, level: usize) {
    let hashes = "#".repeat(level.min(6));
    let mut nested: Vec<(&String, &Value)> = Vec::new();
    for (k, v) in map {
        match v {
            Value::Object(_) => nested.push((k, v)),
            Value::Array(a) if is_table(a) => nested.push((k, v)),
            Value::String(s) if s.contains('\n') => nested.push((k, v)),
            _ => out.push_str(&format!("- **{k}**: {}\n", inline(v))),
        }
    }
    for (k, v) in nested {
        out.push_str(&format!("\n{hashes} {k}\n\n"));
        match v {
            Value::Object(m) => object(out, m, level + 1),
            Value::Array(a) => table(out, a),
            Value::String(s) => out.push_str(&format!("```\n{}```\n", s)),
            _ => unreachable!(),
        }
    }
}

fn table(out: &mut String, rows: &[Value]) {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("table row").keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    out.push_str(&format!("| {} |\n", cols.join(" | ")));
    out.push_str(&format!("|{}\n", " --- |".repeat(cols.len())));
    for r in rows {
        let m = r.as_object().expect("table row");
        let cells: Vec<String> = cols
            .iter()
            .map(|c| m.get(c).map_or_else(String::new, |v| inline(v).replace('|', "\\|")))
            .collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
}
