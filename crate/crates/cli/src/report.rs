//! Command reports and their JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use coordring::membership::MembershipVerdict;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub chart: String,
    pub pullback: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member: Option<bool>,
    pub certificates: Vec<CertificateJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Value>,
    pub seed: u64,
    pub version: String,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, group: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            group: group.into(),
            member: None,
            certificates: Vec::new(),
            values: None,
            seed,
            version: VERSION.to_string(),
            timing_ms: 0,
        }
    }

    pub fn with_verdict(mut self, v: &MembershipVerdict) -> Self {
        self.member = Some(v.member);
        self.certificates = v
            .certificates
            .iter()
            .map(|c| CertificateJson {
                chart: c.chart.to_string(),
                pullback: c.pullback.to_string(),
                ok: c.ok,
            })
            .collect();
        self
    }

    pub fn with_values(mut self, values: Value) -> Self {
        self.values = Some(values);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} [{}]", self.command, self.group);
        if let Some(m) = self.member {
            let _ = writeln!(s, "verdict: {}", if m { "member" } else { "not a member" });
        }
        for c in &self.certificates {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {:<16} {}", c.chart, c.pullback);
        }
        if let Some(v) = &self.values {
            write_value(&mut s, v, 0);
        }
        let _ = writeln!(
            s,
            "seed {} | version {} | {} ms",
            self.seed, self.version, self.timing_ms
        );
        s
    }
}

fn write_value(s: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                if v.is_object() || matches!(v, Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array())) {
                    let _ = writeln!(s, "{pad}{k}:");
                    write_value(s, v, indent + 1);
                } else {
                    let _ = writeln!(s, "{pad}{k}: {}", inline(v));
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(row) = row_line(item) {
                    let _ = writeln!(s, "{pad}{row}");
                } else if item.is_object() {
                    write_value(s, item, indent);
                    let _ = writeln!(s);
                } else {
                    let _ = writeln!(s, "{pad}{}", inline(item));
                }
            }
        }
        other => {
            let _ = writeln!(s, "{pad}{}", inline(other));
        }
    }
}

/// One-line forms for `{param, value}` and `{name, status[, detail]}`.
fn row_line(v: &Value) -> Option<String> {
    let m = v.as_object()?;
    let get = |k: &str| m.get(k).and_then(Value::as_str);
    match (get("param"), get("value"), get("name"), get("status")) {
        (Some(p), Some(v), _, _) if m.len() == 2 => Some(format!("{p} = {v}")),
        (_, _, Some(n), Some(st)) => Some(match get("detail") {
            Some(d) => format!("{n:<28} {st}: {d}"),
            None => format!("{n:<28} {st}"),
        }),
        _ => None,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optional_fields_are_omitted() {
        let r = Report::new("weights", "A3", 7);
        let json = r.to_json();
        assert!(!json.contains("member"));
        assert!(!json.contains("values"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_lists_values() {
        let r = Report::new("weights", "A3", 7).with_values(serde_json::json!({"word": "(2,1,3)"}));
        assert!(r.to_text().contains("word: (2,1,3)"));
    }
}
