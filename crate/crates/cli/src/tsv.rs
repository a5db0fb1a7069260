//! Lossy tab-separated projection of a JSON result.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
            let keys: Vec<&String> = rows[0].as_object().expect("checked").keys().collect();
            out.push_str(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t"));
            out.push('\n');
            for row in rows {
                let line: Vec<String> = keys.iter().map(|k| cell(row.get(k.as_str()).unwrap_or(&Value::Null))).collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            for row in rows {
                let line: Vec<String> = row.as_array().expect("checked").iter().map(cell).collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                out.push_str(k);
                out.push('\t');
                out.push_str(&cell(v));
                out.push('\n');
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}
