//! Output shared by the commands: plain text lines, or one JSON document
//! `{"command", "inputs", "results"}` with 1-based labels throughout.

use serde_json::{json, Value};
use wardforge::Magma;

pub struct Report {
    command: &'static str,
    inputs: Value,
    results: Vec<Value>,
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            results: Vec::new(),
            lines: Vec::new(),
        }
    }

    /// Records one result and its text rendering.
    pub fn push(&mut self, line: impl Into<String>, result: Value) {
        self.lines.push(line.into());
        self.results.push(result);
    }

    /// A text line with no JSON counterpart.
    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn print(&self, json: bool) {
        if json {
            let doc = json!({
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("values serialize"));
        } else {
            for line in &self.lines {
                println!("{line}");
            }
        }
    }
}

/// An internal element as its external label.
pub fn label(x: usize) -> usize {
    x + 1
}

pub fn labels(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|&x| label(x)).collect()
}

/// `(a, b, c)` in external labels.
pub fn tuple(xs: &[usize]) -> String {
    let parts: Vec<String> = labels(xs).iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `{a, b}` in external labels, or `none`.
pub fn set(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "none".to_string();
    }
    let parts: Vec<String> = labels(xs).iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The rows of a table in external labels.
pub fn rows(m: &Magma) -> Value {
    Value::from(m.rows().map(labels).collect::<Vec<_>>())
}
