//! Plain-text rendering of the JSON records.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn grid(rows: &[&serde_json::Map<String, Value>]) -> String {
    let cols: Vec<&String> = rows[0].keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(*c).map(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| {
        let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(cols.iter().map(|c| c.as_str()).collect());
    for r in &cells {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

/// Objects become `key: value` lines; arrays of objects become aligned tables.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (key, val) in map {
                match val {
                    Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                        let rows: Vec<_> = items.iter().filter_map(Value::as_object).collect();
                        out += &format!("{key}:\n");
                        for l in grid(&rows).lines() {
                            out += &format!("  {l}\n");
                        }
                    }
                    Value::Object(_) => {
                        out += &format!("{key}:\n");
                        for l in table(val).lines() {
                            out += &format!("  {l}\n");
                        }
                    }
                    _ => out += &format!("{key:<width$}  {}\n", scalar(val)),
                }
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let rows: Vec<_> = items.iter().filter_map(Value::as_object).collect();
            out = grid(&rows);
        }
        other => out = scalar(other) + "\n",
    }
    out
}
