//! The report document and its two renderings.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Everything in a report that is a function of the input alone.
///
/// Field order is the serialization order, and nested objects are
/// `serde_json` maps with sorted keys, so the JSON form is canonical.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportBody {
    pub tool_version: &'static str,
    pub command: String,
    pub input_digest: String,
    pub warnings: Vec<String>,
    pub invariants: Option<Value>,
    pub verdict: Option<Value>,
    pub justification: Vec<Value>,
    pub details: Option<Value>,
    pub error: Option<String>,
}

impl ReportBody {
    pub fn new(command: &str, input: &[u8]) -> Self {
        ReportBody {
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            input_digest: sha256_hex(input),
            warnings: Vec::new(),
            invariants: None,
            verdict: None,
            justification: Vec::new(),
            details: None,
            error: None,
        }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("report values are always serializable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    #[serde(flatten)]
    pub body: ReportBody,
    /// Digest of the canonical body; timings are not covered.
    pub canonical_digest: String,
    pub timings: Timings,
}

impl ReportDocument {
    pub fn new(body: ReportBody, timings: Timings) -> Self {
        let canonical_digest = sha256_hex(body.canonical_json().as_bytes());
        ReportDocument {
            body,
            canonical_digest,
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report values are always serializable");
        s.push('\n');
        s
    }

    /// Indented `key: value` text carrying the same content as the JSON.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("report values are always serializable");
        let mut out = String::new();
        // Walk in document order rather than the sorted order of `value`.
        for key in [
            "tool_version",
            "command",
            "input_digest",
            "warnings",
            "invariants",
            "verdict",
            "justification",
            "details",
            "error",
            "canonical_digest",
            "timings",
        ] {
            write_entry(&mut out, key, &value[key], 0);
        }
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_entry(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Null => {}
        Value::Array(a) if a.is_empty() => {}
        Value::Array(a) if a.iter().all(is_scalar) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", items.join(", ")));
        }
        Value::Array(a) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in a {
                write_item(out, item, depth + 1);
            }
        }
        Value::Object(m) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, child) in m {
                write_entry(out, k, child, depth + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
    }
}

fn write_item(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            let mut first = true;
            for (k, child) in m {
                let mut entry = String::new();
                write_entry(&mut entry, k, child, depth + 1);
                if entry.is_empty() {
                    continue;
                }
                if first {
                    // Replace the indentation of the first line with a bullet.
                    entry.replace_range(..pad.len() + 2, &format!("{pad}- "));
                    first = false;
                }
                out.push_str(&entry);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(|x| if is_scalar(x) { scalar(x) } else { x.to_string() }).collect();
            out.push_str(&format!("{pad}- [{}]\n", items.join(", ")));
        }
        other => out.push_str(&format!("{pad}- {}\n", scalar(other))),
    }
}
