//! Plain-text rendering of a JSON report: one `key: value` line per scalar,
//! nested objects indented, arrays of scalars inline.

use std::fmt::Write as _;

use serde_json::Value;

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|v| !v.is_object() && (!v.is_array() || is_flat(v))),
        _ => true,
    }
}

fn flat(value: &Value) -> String {
    match value {
        Value::Array(items) => format!("[{}]", items.iter().map(flat).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn write_value(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if is_flat(value) {
        let _ = writeln!(out, "{pad}{key}: {}", flat(value));
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| write_value(out, k, v, indent + 1)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| write_value(out, &format!("- {i}"), v, indent + 1)),
        _ => unreachable!("scalars are flat"),
    }
}

pub fn render(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| write_value(&mut out, k, v, 0)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| write_value(&mut out, &format!("- {i}"), v, 0)),
        other => out.push_str(&scalar(other)),
    }
    out.trim_end().to_string()
}
