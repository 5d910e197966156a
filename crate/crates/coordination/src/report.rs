//! Report documents and their JSON/CSV/pretty renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use coordination_core::ExactInteger;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

/// Integers that fit in `i64` stay numbers, larger ones become decimal strings.
pub fn big_value(v: &ExactInteger) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub seed: u64,
}

impl ReportDocument {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).count()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["id", "paper_ref", "verdict", "witness", "millis"])
                    .expect("in-memory write");
                for c in &self.checks {
                    let witness = c.witness.as_ref().map(Value::to_string).unwrap_or_default();
                    let millis = c.millis.map(|m| m.to_string()).unwrap_or_default();
                    w.write_record([c.id.as_str(), c.paper_ref, c.verdict.label(), &witness, &millis])
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
            Format::Pretty => {
                let mut out = String::new();
                let _ = writeln!(out, "suite {} (seed {})", self.suite, self.seed);
                let id_w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
                for c in &self.checks {
                    let _ = write!(out, "{} {:<id_w$}  [{}]", c.verdict.label(), c.id, c.paper_ref);
                    if let Some(ms) = c.millis {
                        let _ = write!(out, " {ms} ms");
                    }
                    if let Some(w) = &c.witness {
                        let _ = write!(out, "  {w}");
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), self.failures());
                out
            }
        }
    }
}
