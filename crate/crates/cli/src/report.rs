use std::fmt;
use std::time::Duration;

use serde_json::{Map, Value};

/// Outcome categories; each maps to a fixed exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Colorable,
    NotColorable,
    Free,
    Contains,
    Classified,
    Refused,
    Generated,
    Verified,
    Failed,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Colorable | Verdict::Free | Verdict::Classified | Verdict::Generated | Verdict::Verified => 0,
            Verdict::NotColorable | Verdict::Contains | Verdict::Failed => 1,
            Verdict::Refused => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Colorable => "colorable",
            Verdict::NotColorable => "not-colorable",
            Verdict::Free => "free",
            Verdict::Contains => "contains",
            Verdict::Classified => "classified",
            Verdict::Refused => "refused",
            Verdict::Generated => "generated",
            Verdict::Verified => "verified",
            Verdict::Failed => "failed",
        })
    }
}

/// Key-value report; keys print in insertion order.
pub struct RunReport {
    pub command: String,
    pub verdict: Verdict,
    pub fields: Vec<(String, String)>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: &str, verdict: Verdict) -> Self {
        RunReport { command: command.to_string(), verdict, fields: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn text(&self) -> String {
        let mut out = format!("command={}\nverdict={}\n", self.command, self.verdict);
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}={v}\n"));
        }
        out.push_str(&format!("elapsed_ms={:.3}\n", self.elapsed.as_secs_f64() * 1e3));
        out
    }

    pub fn json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), Value::from(self.command.clone()));
        m.insert("verdict".into(), Value::from(self.verdict.to_string()));
        for (k, v) in &self.fields {
            m.insert(k.clone(), Value::from(v.clone()));
        }
        m.insert("elapsed_ms".into(), Value::from(self.elapsed.as_secs_f64() * 1e3));
        Value::Object(m).to_string() + "\n"
    }
}
