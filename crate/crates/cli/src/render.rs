use serde_json::Value;

use crate::Format;

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize"),
        Format::Table => table(value, 0),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(" ")
        }
        Value::Array(items) if items.iter().all(|i| i.as_array().is_some_and(|a| a.iter().all(|x| !x.is_array()))) => {
            items.iter().map(|i| format!("({})", scalar(i).replace(' ', ","))).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|i| !i.is_object()),
        _ => true,
    }
}

/// Objects become `key: value` lines, arrays of objects become aligned
/// columns, and scalars print as text.
fn table(value: &Value, indent: usize) -> String {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            let mut lines = Vec::new();
            for (k, v) in map {
                if is_flat(v) {
                    lines.push(format!("{pad}{k:<width$}  {}", scalar(v)));
                } else {
                    lines.push(format!("{pad}{k}:"));
                    lines.push(table(v, indent + 2));
                }
            }
            lines.join("\n")
        }
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let headers: Vec<&String> = items[0].as_object().unwrap().keys().collect();
            let rows: Vec<Vec<String>> = items
                .iter()
                .map(|i| headers.iter().map(|h| i.get(h.as_str()).map_or_else(String::new, scalar)).collect())
                .collect();
            let widths: Vec<usize> = headers
                .iter()
                .enumerate()
                .map(|(c, h)| rows.iter().map(|r| r[c].chars().count()).chain([h.len()]).max().unwrap())
                .collect();
            let fmt_row = |cells: Vec<String>| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{pad}{}", parts.join("  ").trim_end())
            };
            let mut lines = vec![fmt_row(headers.iter().map(|h| h.to_string()).collect())];
            lines.extend(rows.into_iter().map(fmt_row));
            lines.join("\n")
        }
        Value::Array(items) => items.iter().map(|i| format!("{pad}{}", scalar(i))).collect::<Vec<_>>().join("\n"),
        other => format!("{pad}{}", scalar(other)),
    }
}
