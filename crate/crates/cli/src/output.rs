//! Rendering of JSON reports as JSON, CSV or a plain fixed-width table.

use serde_json::Value;

use drinfeld::census::{self, CensusReport};

use crate::Format;

/// Flattens nested objects and arrays into dotted keys; scalar arrays are
/// joined with `;`.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), joined.join(";")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(value))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_error(e: impl std::fmt::Display) -> String {
    format!("csv output failed: {e}")
}

pub fn render(value: &Value, census_reports: Option<&[CensusReport]>, format: Format) -> Result<String, String> {
    match format {
        Format::Json => Ok(format!("{value}\n")),
        Format::Csv => {
            let mut buf = Vec::new();
            match census_reports {
                Some(reports) => census::write_csv(reports, &mut buf).map_err(csv_error)?,
                None => {
                    let mut fields = Vec::new();
                    flatten("", value, &mut fields);
                    let mut writer = csv::Writer::from_writer(&mut buf);
                    writer.write_record(fields.iter().map(|(k, _)| k)).map_err(csv_error)?;
                    writer.write_record(fields.iter().map(|(_, v)| v)).map_err(csv_error)?;
                    writer.flush().map_err(csv_error)?;
                }
            }
            String::from_utf8(buf).map_err(csv_error)
        }
        Format::Plain => {
            let mut fields = Vec::new();
            flatten("", value, &mut fields);
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            Ok(fields
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                .collect())
        }
    }
}
