use serde_json::Value;

/// One JSON object per line, keys sorted, so equal runs give equal bytes.
pub fn json_lines(records: &[Value]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// A plain-text table; a new header starts whenever the key set changes.
pub fn table(records: &[Value]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < records.len() {
        let keys: Vec<String> = match &records[i] {
            Value::Object(m) => m.keys().cloned().collect(),
            _ => vec!["value".into()],
        };
        let mut j = i;
        let mut rows = Vec::new();
        while j < records.len() {
            let row: Vec<String> = match &records[j] {
                Value::Object(m) if m.keys().eq(keys.iter()) => keys.iter().map(|k| cell(&m[k])).collect(),
                Value::Object(_) => break,
                v if keys == ["value"] => vec![cell(v)],
                _ => break,
            };
            rows.push(row);
            j += 1;
        }
        let widths: Vec<usize> = (0..keys.len())
            .map(|c| rows.iter().map(|r| r[c].len()).chain([keys[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&line(&keys));
        out.push_str(&line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
        for r in &rows {
            out.push_str(&line(r));
        }
        i = j;
    }
    out
}
