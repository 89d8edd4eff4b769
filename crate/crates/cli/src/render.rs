use serde::Serialize;
use serde_json::Value;

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// `key: value` lines for the same data the JSON carries.
pub fn text<T: Serialize>(value: &T) -> String {
    let mut out = String::new();
    let value = serde_json::to_value(value).expect("reports serialize");
    write_value(&mut out, "", &value);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{key}: {s}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if key.is_empty() { k.clone() } else { format!("{key}.{k}") };
                write_value(out, &key, v);
            }
        }
        Value::Array(items) => {
            let flat: Option<Vec<String>> = items.iter().map(scalar).collect();
            match flat {
                Some(items) => out.push_str(&format!("{key}: [{}]\n", items.join("; "))),
                None => {
                    for (i, item) in items.iter().enumerate() {
                        write_value(out, &format!("{key}[{i}]"), item);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
}
