//! Plain-text rendering of a JSON report.
//!
//! Text output is produced from the same value as the JSON output, so both
//! always carry identical dimensions and booleans.

use std::fmt::Write;

use serde_json::Value;

pub fn json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("values serialize");
    s.push('\n');
    s
}

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    if let Some(table) = report.get("table") {
        multiplication_table(&mut out, table);
    } else {
        value(&mut out, report, 0);
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) | Value::Null => Some(v.to_string()),
        _ => None,
    }
}

/// Arrays holding no objects are printed on one line.
fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat),
        Value::Object(_) => false,
        _ => true,
    }
}

fn is_check(v: &Value) -> bool {
    v.get("name").is_some() && v.get("status").is_some()
}

fn value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                if let Some(s) = scalar(item) {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                } else if is_flat(item) {
                    let _ = writeln!(out, "{pad}{k}: {item}");
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    value(out, item, indent + 2);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_check(item) {
                    let field = |f: &str| item.get(f).and_then(scalar).unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{pad}[{}] {}: {}",
                        field("status"),
                        field("name"),
                        field("detail")
                    );
                } else if is_flat(item) {
                    let _ = writeln!(out, "{pad}- {item}");
                } else {
                    let _ = writeln!(out, "{pad}-");
                    value(out, item, indent + 2);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// `e_i · e_j` as linear combinations, one row per `i`.
fn multiplication_table(out: &mut String, table: &Value) {
    let rows = table.as_array().map(Vec::as_slice).unwrap_or_default();
    for (i, row) in rows.iter().enumerate() {
        let cells = row.as_array().map(Vec::as_slice).unwrap_or_default();
        let line: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("e{i}*e{j} = {}", combination(cell)))
            .collect();
        let _ = writeln!(out, "{}", line.join("  "));
    }
}

fn combination(cell: &Value) -> String {
    let coords = cell.as_array().map(Vec::as_slice).unwrap_or_default();
    let mut s = String::new();
    for (k, c) in coords.iter().enumerate() {
        let c = c.as_str().unwrap_or("0");
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c),
        };
        let coeff = if mag == "1" {
            String::new()
        } else {
            format!("{mag} ")
        };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let _ = write!(s, "{coeff}e{k}");
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn combinations() {
        assert_eq!(combination(&json!(["0", "0", "0", "1"])), "e3");
        assert_eq!(combination(&json!(["-1", "0", "0", "0"])), "-e0");
        assert_eq!(
            combination(&json!(["0", "-2/3", "0", "5"])),
            "-2/3 e1 + 5 e3"
        );
        assert_eq!(combination(&json!(["0", "0", "0", "0"])), "0");
    }

    #[test]
    fn checks_and_scalars() {
        let report = json!({
            "der_dim": 3,
            "equal": true,
            "params": ["1", "1", "1"],
            "checks": [{"name": "a", "status": "pass", "detail": "dim 3"}],
        });
        let t = text(&report);
        assert!(t.contains("der_dim: 3\n"));
        assert!(t.contains("equal: true\n"));
        assert!(t.contains("params: [\"1\",\"1\",\"1\"]\n"));
        assert!(t.contains("  [pass] a: dim 3\n"));
    }
}
