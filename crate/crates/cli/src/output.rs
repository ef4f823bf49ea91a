use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Everything one command emits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub params: Map<String, Value>,
    pub rows: Vec<Map<String, Value>>,
    pub warnings: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            params: Map::new(),
            rows: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(key.to_string(), to_value(value));
    }

    /// Appends a row from any value serializing to a JSON object.
    pub fn row(&mut self, value: impl Serialize) {
        match to_value(value) {
            Value::Object(map) => self.rows.push(map),
            other => {
                let mut map = Map::new();
                map.insert("value".into(), other);
                self.rows.push(map);
            }
        }
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Json => {
                let mut out = serde_json::to_vec_pretty(self).map_err(|e| CliError::Io(e.to_string()))?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => self.render_csv(),
        }
    }

    /// Header is the union of row keys in first-seen order; missing cells stay empty.
    fn render_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut header: Vec<&str> = Vec::new();
        for row in &self.rows {
            for key in row.keys() {
                if !header.contains(&key.as_str()) {
                    header.push(key);
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(e.to_string());
        if !header.is_empty() {
            w.write_record(&header).map_err(io)?;
        }
        for row in &self.rows {
            let cells: Vec<String> = header.iter().map(|k| row.get(*k).map_or(String::new(), cell)).collect();
            w.write_record(&cells).map_err(io)?;
        }
        w.flush().map_err(|e| CliError::Io(e.to_string()))?;
        w.into_inner().map_err(|e| CliError::Io(e.to_string()))
    }
}

/// Non-finite floats have no JSON form and become `null`.
fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).unwrap_or(Value::Null)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn write_output(bytes: &[u8], path: Option<&std::path::Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(bytes).map_err(|e| CliError::Io(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_union_header_and_empty_cells() {
        let mut rec = OutputRecord::new("t");
        rec.row(json!({"n": 1, "a_n": 0.5}));
        rec.row(json!({"n": 2, "note": "x,y"}));
        let text = String::from_utf8(rec.render(Format::Csv).unwrap()).unwrap();
        assert_eq!(text, "n,a_n,note\n1,0.5,\n2,,\"x,y\"\n");
    }

    #[test]
    fn floats_round_trip() {
        let mut rec = OutputRecord::new("t");
        rec.row(json!({"x": 0.1 + 0.2, "y": f64::INFINITY}));
        let text = String::from_utf8(rec.render(Format::Json).unwrap()).unwrap();
        assert!(text.contains("0.30000000000000004"));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["rows"][0]["x"].as_f64().unwrap(), 0.1 + 0.2);
        assert!(back["rows"][0]["y"].is_null());
    }
}
