use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

/// Leaf values of a JSON document as `(dotted.path, value)` pairs, in
/// document order. Array indices become path segments; edge lists collapse
/// to `u-v` tokens.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(v, String::new(), &mut out);
    out
}

fn walk(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                walk(x, join(k), out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((path, format!("[{}]", parts.join(" "))));
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(is_pair) => {
            let parts: Vec<String> = items.iter().map(|e| format!("{}-{}", e[0], e[1])).collect();
            out.push((path, parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                walk(x, join(&i.to_string()), out);
            }
        }
        _ => out.push((path, scalar(v))),
    }
}

fn is_pair(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.len() == 2 && a.iter().all(Value::is_u64))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<w$}", w = widths[c]))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn reproduction_table(rows: &[Value]) -> String {
    let mut table = vec![vec!["id".to_string(), "expected".into(), "computed".into(), "match".into()]];
    for r in rows {
        table.push(vec![
            scalar(&r["id"]),
            scalar(&r["expected"]),
            scalar(&r["computed"]),
            if r["matches"] == Value::Bool(true) { "yes".into() } else { "NO".into() },
        ]);
    }
    let mut s = aligned(&table);
    for r in rows {
        if let Some(note) = r.get("note").and_then(Value::as_str) {
            s.push_str(&format!("note {}: {note}\n", scalar(&r["id"])));
        }
    }
    s
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            if let Some(rows) = report.pointer("/results/rows").and_then(Value::as_array) {
                let mut head = report.clone();
                if let Some(r) = head.get_mut("results").and_then(Value::as_object_mut) {
                    r.remove("rows");
                }
                let pairs: Vec<Vec<String>> = flatten(&head).into_iter().map(|(k, v)| vec![k, v]).collect();
                return aligned(&pairs) + "\n" + &reproduction_table(rows);
            }
            let pairs: Vec<Vec<String>> = flatten(report).into_iter().map(|(k, v)| vec![k, v]).collect();
            aligned(&pairs)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["key", "value"]).expect("in-memory write");
            for (k, v) in flatten(report) {
                w.write_record([k, v]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_paths() {
        let v = json!({"a": {"b": 1, "c": [1, 2]}, "d": [{"e": "x"}], "f": [[0, 1], [1, 2]]});
        assert_eq!(
            flatten(&v),
            vec![
                ("a.b".to_string(), "1".to_string()),
                ("a.c".into(), "[1 2]".into()),
                ("d.0.e".into(), "x".into()),
                ("f".into(), "0-1 1-2".into())
            ]
        );
    }

    #[test]
    fn csv_quotes() {
        let s = render(&json!({"k": "a,b"}), Format::Csv);
        assert_eq!(s, "key,value\nk,\"a,b\"\n");
    }
}
