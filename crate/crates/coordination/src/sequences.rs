//! One-dimensional sequences for the `series` subcommand.

use std::fmt::Write as _;
use std::str::FromStr;

use coordination_core::lattice::DiagonalKind;
use coordination_core::riordan::RiordanArray;
use coordination_core::{Error, ExactRational, Result as CoreResult};
use serde_json::{json, Value};

use crate::report::{big_value, Format};
use crate::suites::central_routes;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceName {
    Central(DiagonalKind),
    /// A-sequence of the coordination triangle.
    ProductionA,
    /// Z-sequence of the coordination triangle.
    ProductionZ,
}

impl SequenceName {
    pub fn label(self) -> &'static str {
        match self {
            Self::Central(DiagonalKind::D) => "D",
            Self::Central(DiagonalKind::S) => "S",
            Self::Central(DiagonalKind::C) => "C",
            Self::Central(DiagonalKind::Schroder) => "r",
            Self::ProductionA => "A",
            Self::ProductionZ => "Z",
        }
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "D" => Self::Central(DiagonalKind::D),
            "S" => Self::Central(DiagonalKind::S),
            "C" => Self::Central(DiagonalKind::C),
            "r" => Self::Central(DiagonalKind::Schroder),
            "A" => Self::ProductionA,
            "Z" => Self::ProductionZ,
            _ => return Err(format!("unknown sequence `{s}` (expected D, S, C, r, A, Z)")),
        })
    }
}

/// Terms `0..terms`. Central sequences must agree across every available
/// route or the call fails.
pub fn terms(name: SequenceName, terms: usize) -> CoreResult<Vec<ExactRational>> {
    if terms == 0 {
        return Ok(Vec::new());
    }
    match name {
        SequenceName::Central(kind) => {
            let values = central_routes(kind, terms - 1)?
                .ok_or(Error::CrossCheckFailed("central sequence routes disagree"))?;
            Ok(values.into_iter().map(ExactRational::from_integer).collect())
        }
        SequenceName::ProductionA | SequenceName::ProductionZ => {
            // A and Z are known to one order less than the array.
            let prod = RiordanArray::coordination_triangle_c(terms).extract_production()?;
            let s = if name == SequenceName::ProductionA { prod.a } else { prod.z };
            Ok(s.coeffs().iter().take(terms).cloned().collect())
        }
    }
}

fn value(v: &ExactRational) -> Value {
    if v.is_integer() {
        big_value(v.numer())
    } else {
        Value::String(v.to_string())
    }
}

pub fn render(name: SequenceName, values: &[ExactRational], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "value"]).expect("in-memory write");
            for (n, v) in values.iter().enumerate() {
                w.write_record([n.to_string(), v.to_string()]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Json => {
            let terms: Vec<Value> = values.iter().map(value).collect();
            let mut s = serde_json::to_string_pretty(&json!({ "sequence": name.label(), "terms": terms }))
                .expect("serializable");
            s.push('\n');
            s
        }
        Format::Pretty => {
            let width = values.len().saturating_sub(1).to_string().len();
            let mut out = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{}({n:>width$}) = {v}", name.label());
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn production_z_prefix() {
        let z = terms(SequenceName::ProductionZ, 4).unwrap();
        let shown: Vec<String> = z.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["2", "-2", "6", "-22"]);
    }

    #[test]
    fn csv_has_header() {
        let v = terms("D".parse().unwrap(), 3).unwrap();
        assert_eq!(render("D".parse().unwrap(), &v, Format::Csv), "n,value\n0,1\n1,3\n2,13\n");
    }
}
