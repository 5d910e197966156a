//! Integer tables and triangles of the `L^(m)` family.

use std::fmt::Write as _;
use std::str::FromStr;

use coordination_core::lattice::LatticeFamily;
use coordination_core::ExactInteger;
use serde_json::{json, Value};

use crate::report::{big_value, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// The square array `L^(m)`; `S`, `D`, `C` are `m = 0, 1, 2`.
    Square(i64),
    /// The triangle `l(n,k) = L^(m)(n-k, k)`.
    Triangle(i64),
}

impl Family {
    pub fn m(self) -> i64 {
        match self {
            Self::Square(m) | Self::Triangle(m) => m,
        }
    }

    pub fn name(self) -> String {
        match self {
            Self::Square(0) => "S".into(),
            Self::Square(1) => "D".into(),
            Self::Square(2) => "C".into(),
            Self::Square(m) => format!("L({m})"),
            Self::Triangle(0) => "s-tri".into(),
            Self::Triangle(1) => "d-tri".into(),
            Self::Triangle(2) => "c-tri".into(),
            Self::Triangle(m) => format!("L({m})-tri"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unknown family `{s}` (expected S, C, D, L(m), s-tri, d-tri, c-tri)");
        match s {
            "S" => return Ok(Self::Square(0)),
            "D" => return Ok(Self::Square(1)),
            "C" => return Ok(Self::Square(2)),
            "s-tri" => return Ok(Self::Triangle(0)),
            "d-tri" => return Ok(Self::Triangle(1)),
            "c-tri" => return Ok(Self::Triangle(2)),
            _ => {}
        }
        let (body, tri) = match s.strip_suffix("-tri") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let rest = body.strip_prefix('L').ok_or_else(bad)?;
        let rest = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| rest.strip_prefix('='))
            .unwrap_or(rest);
        let m: i64 = rest.parse().map_err(|_| bad())?;
        Ok(if tri { Self::Triangle(m) } else { Self::Square(m) })
    }
}

/// `rows` rows; square families get `cols` columns, triangle row `n` gets
/// `min(n + 1, cols)` entries.
pub fn build(family: Family, rows: usize, cols: usize) -> Vec<Vec<ExactInteger>> {
    let mut lat = LatticeFamily::new(family.m());
    match family {
        Family::Square(_) => lat.table(rows, cols),
        Family::Triangle(_) => (0..rows)
            .map(|n| {
                let mut row = lat.triangle_row(n);
                row.truncate(cols);
                row
            })
            .collect(),
    }
}

pub fn render(family: Family, table: &[Vec<ExactInteger>], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            for row in table {
                w.write_record(row.iter().map(ToString::to_string)).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii digits")
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|r| Value::Array(r.iter().map(big_value).collect()))
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "family": family.name(), "rows": rows }))
                .expect("serializable");
            s.push('\n');
            s
        }
        Format::Pretty => pretty(table),
    }
}

/// `n\k` header, a rule, then right-aligned rows.
fn pretty(table: &[Vec<ExactInteger>]) -> String {
    let cols = table.iter().map(Vec::len).max().unwrap_or(0);
    let cells: Vec<Vec<String>> = table
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let mut width = vec![0usize; cols];
    for (k, w) in width.iter_mut().enumerate() {
        *w = k.to_string().len();
        for row in &cells {
            if let Some(c) = row.get(k) {
                *w = (*w).max(c.len());
            }
        }
    }
    let label = table.len().saturating_sub(1).to_string().len().max(3);
    let mut out = String::new();
    let _ = write!(out, "{:>label$} |", "n\\k");
    for (k, w) in width.iter().enumerate() {
        let _ = write!(out, " {k:>w$}");
    }
    out.push('\n');
    let rule = label + 2 + width.iter().map(|w| w + 1).sum::<usize>();
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for (n, row) in cells.iter().enumerate() {
        let _ = write!(out, "{n:>label$} |");
        for (c, w) in row.iter().zip(&width) {
            let _ = write!(out, " {c:>w$}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_family_names() {
        assert_eq!("S".parse(), Ok(Family::Square(0)));
        assert_eq!("L(3)".parse(), Ok(Family::Square(3)));
        assert_eq!("L-1".parse(), Ok(Family::Square(-1)));
        assert_eq!("L=4".parse(), Ok(Family::Square(4)));
        assert_eq!("L(5)-tri".parse(), Ok(Family::Triangle(5)));
        assert_eq!("c-tri".parse(), Ok(Family::Triangle(2)));
        assert!("X".parse::<Family>().is_err());
        assert!("L(x)".parse::<Family>().is_err());
    }

    #[test]
    fn csv_has_no_header() {
        let t = build(Family::Triangle(2), 3, 3);
        assert_eq!(render(Family::Triangle(2), &t, Format::Csv), "1\n2,1\n2,4,1\n");
    }

    #[test]
    fn pretty_layout() {
        let t = build(Family::Square(0), 2, 3);
        let s = render(Family::Square(0), &t, Format::Pretty);
        assert_eq!(s, "n\\k | 0 1 2\n-----------\n  0 | 1 1 1\n  1 | 0 2 4\n");
    }
}
