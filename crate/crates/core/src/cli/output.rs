use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputEnvelope {
    pub ok: bool,
    pub result: Value,
    pub citations: Vec<String>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl OutputEnvelope {
    pub fn success(result: Value, citations: Vec<String>, warnings: Vec<String>) -> Self {
        let mut cites: Vec<String> = Vec::new();
        for c in citations {
            if !cites.contains(&c) {
                cites.push(c);
            }
        }
        OutputEnvelope { ok: true, result, citations: cites, warnings, error: None }
    }

    pub fn failure(message: String) -> Self {
        OutputEnvelope {
            ok: false,
            result: Value::Null,
            citations: Vec::new(),
            warnings: Vec::new(),
            error: Some(message),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![("ok".to_string(), self.ok.to_string())];
        if let Some(e) = &self.error {
            rows.push(("error".to_string(), e.clone()));
        }
        flatten("result", &self.result, &mut rows);
        for (i, c) in self.citations.iter().enumerate() {
            rows.push((format!("citations[{i}]"), c.clone()));
        }
        for (i, w) in self.warnings.iter().enumerate() {
            rows.push((format!("warnings[{i}]"), w.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn is_scalar_list(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

fn flatten(path: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&format!("{path}.{k}"), v, rows);
            }
        }
        Value::Array(items) if !items.is_empty() && !is_scalar_list(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), v, rows);
            }
        }
        Value::String(s) => rows.push((path.to_string(), s.clone())),
        other => rows.push((path.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_is_aligned() {
        let env = OutputEnvelope::success(json!({"chi": 6, "v": [1, 3, 2, 6]}), vec!["x".into(), "x".into()], vec![]);
        assert_eq!(env.citations, vec!["x"]);
        let table = env.to_table();
        assert_eq!(table, "ok            true\nresult.chi    6\nresult.v      [1,3,2,6]\ncitations[0]  x\n");
    }
}
