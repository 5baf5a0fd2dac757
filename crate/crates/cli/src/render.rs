//! Plain-text rendering of a command result.
//!
//! Single-value commands print just the value. Everything else prints one
//! `key: value` line per field in key order; polynomials print in their
//! text form, lists of numbers space-separated, and lists of records or
//! polynomials one per indented line.

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::commands::Request;

pub fn text(request: &Request, result: &Value) -> String {
    let single = match request {
        Request::Cyclo { .. } => Some(&result["polynomial"]),
        Request::Phi { .. } => Some(&result["phi"]),
        Request::Mobius { .. } => Some(&result["mobius"]),
        Request::Height { .. } => Some(&result["height"]),
        Request::Flat { .. } => Some(&result["flat"]),
        _ => None,
    };
    match (single, result) {
        (Some(v), _) => format!("{}\n", inline(v)),
        (None, Value::Object(fields)) => {
            let mut out = String::new();
            write_fields(&mut out, fields, 0);
            out
        }
        (None, other) => format!("{}\n", inline(other)),
    }
}

fn is_polynomial(v: &Value) -> bool {
    v.get("coeffs").is_some() && v.get("text").is_some()
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(inline).collect::<Vec<_>>().join(" ")
        }
        v if is_polynomial(v) => v["text"].as_str().unwrap_or_default().to_owned(),
        other => other.to_string(),
    }
}

fn write_fields(out: &mut String, fields: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (key, v) in fields {
        match v {
            Value::Object(inner) if !is_polynomial(v) => {
                let _ = writeln!(out, "{pad}{key}:");
                write_fields(out, inner, depth + 1);
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                let _ = writeln!(out, "{pad}{key}: ({})", items.len());
                for item in items {
                    match item {
                        Value::Object(rec) if !is_polynomial(item) => {
                            let line: Vec<String> = rec.iter().map(|(k, x)| format!("{k}={}", inline(x))).collect();
                            let _ = writeln!(out, "{pad}  {}", line.join(", "));
                        }
                        _ => {
                            let _ = writeln!(out, "{pad}  {}", inline(item));
                        }
                    }
                }
            }
            _ => {
                let _ = writeln!(out, "{pad}{key}: {}", inline(v));
            }
        }
    }
}
