//! Named verification suites.
//!
//! A suite is a list of independent checks. They run on the rayon pool and
//! the report is sorted by check id, so output order never depends on
//! scheduling.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use clap::ValueEnum;
use coordination_core::analytics::{
    self, check_column_row_logconcavity, check_logconcave_unimodal, check_logconvex_3term, check_sm,
    check_variance_bound, hankel_sequence, hankel_suite, telescoping_check, HankelKind, MeanDrift,
    NormalityReport, SmVerdict,
};
use coordination_core::lattice::{
    diagonal, gf_expand, jacobi_eval, lattice_gf_table, closed_form_d, closed_form_s, DelannoyVariant,
    DiagonalKind, JacobiParams, LatticeFamily,
};
use coordination_core::positivity::{
    check_lstp_window, check_pf_sequence, check_stp_window, check_tp_window, TpReport,
};
use coordination_core::riordan::{
    ldu_factors, left_product_decompose, replay_rows, LduTarget, RiordanArray,
};
use coordination_core::scalar::{pow2, rat};
use coordination_core::zeros::{
    check_interlacing, check_real_rooted_and_interval, empirical_zero_density, family_poly,
    verify_delannoy_zero_formula, InterlaceVerdict, PolyFamily, PolyKind,
};
use coordination_core::{ExactInteger, ExactMatrix, ExactRational, Result as CoreResult};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{big_value, Check, ReportDocument, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Riordan,
    Positivity,
    Zeros,
    Normality,
    Hankel,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::Riordan => "riordan",
            Self::Positivity => "positivity",
            Self::Zeros => "zeros",
            Self::Normality => "normality",
            Self::Hankel => "hankel",
            Self::All => "all",
        }
    }
}

/// Command-line overrides; `None` falls back to the suite default.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub n: Option<usize>,
    pub max_n: Option<usize>,
    pub window: Option<usize>,
    pub max_order: Option<usize>,
    pub smoke: bool,
    pub timing: bool,
    pub seed: u64,
}

/// Resolved parameters of one suite run.
#[derive(Clone, Debug)]
struct Params {
    /// Hankel depth.
    n: usize,
    central_n: usize,
    zeros_max_n: usize,
    ladder_top: usize,
    lcx_max_n: usize,
    window: usize,
    max_order: usize,
    seed: u64,
}

impl Params {
    fn resolve(o: &Options) -> Self {
        let pick = |v: Option<usize>, full: usize, smoke: usize| v.unwrap_or(if o.smoke { smoke } else { full });
        Self {
            n: pick(o.n, 8, 5),
            central_n: pick(o.max_n, 30, 15),
            zeros_max_n: pick(o.max_n, 50, 12),
            ladder_top: pick(o.max_n, 200, 40),
            lcx_max_n: pick(o.max_n, 200, 40),
            window: pick(o.window, 8, 6),
            max_order: pick(o.max_order, 4, 3),
            seed: o.seed,
        }
    }

    fn record(&self, suite: Suite, smoke: bool) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: usize| {
            m.insert(k.to_string(), Value::from(v));
        };
        match suite {
            Suite::Riordan => {
                put("max_n", self.central_n);
                put("window", self.window);
            }
            Suite::Positivity => {
                put("window", self.window);
                put("max_order", self.max_order);
            }
            Suite::Zeros => put("max_n", self.zeros_max_n),
            Suite::Normality => put("max_n", self.ladder_top),
            Suite::Hankel => {
                put("N", self.n);
                put("max_n", self.lcx_max_n);
            }
            Suite::All => {
                put("N", self.n);
                put("window", self.window);
                put("max_order", self.max_order);
            }
        }
        m.insert("smoke".into(), Value::from(smoke));
        m
    }
}

struct Outcome {
    pass: bool,
    witness: Option<Value>,
}

impl Outcome {
    fn ok(pass: bool) -> Self {
        Self { pass, witness: None }
    }

    fn with(pass: bool, witness: Value) -> Self {
        Self {
            pass,
            witness: Some(witness),
        }
    }
}

type Body = Box<dyn Fn() -> CoreResult<Outcome> + Send + Sync>;

struct Job {
    id: String,
    paper_ref: &'static str,
    body: Body,
}

fn job(
    id: impl Into<String>,
    paper_ref: &'static str,
    body: impl Fn() -> CoreResult<Outcome> + Send + Sync + 'static,
) -> Job {
    Job {
        id: id.into(),
        paper_ref,
        body: Box::new(body),
    }
}

fn run_jobs(jobs: Vec<Job>, timing: bool) -> Vec<Check> {
    let mut checks: Vec<Check> = jobs
        .into_par_iter()
        .map(|j| {
            let start = Instant::now();
            let outcome = (j.body)().unwrap_or_else(|e| Outcome::with(false, json!({ "error": e.to_string() })));
            Check {
                id: j.id,
                paper_ref: j.paper_ref,
                verdict: Verdict::from_bool(outcome.pass),
                witness: outcome.witness,
                millis: timing.then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    checks
}

pub fn run(suite: Suite, options: &Options) -> ReportDocument {
    let p = Params::resolve(options);
    let jobs = match suite {
        Suite::Riordan => riordan_jobs(&p),
        Suite::Positivity => positivity_jobs(&p),
        Suite::Zeros => zeros_jobs(&p),
        Suite::Normality => normality_jobs(&p),
        Suite::Hankel => hankel_jobs(&p),
        Suite::All => {
            let mut all = riordan_jobs(&p);
            all.extend(positivity_jobs(&p));
            all.extend(zeros_jobs(&p));
            all.extend(normality_jobs(&p));
            all.extend(hankel_jobs(&p));
            all
        }
    };
    ReportDocument {
        suite: suite.name().to_string(),
        params: p.record(suite, options.smoke),
        checks: run_jobs(jobs, options.timing),
        seed: p.seed,
    }
}

// ---------------------------------------------------------------------------
// Shared helpers.

fn ints(v: &[i64]) -> Vec<ExactInteger> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn integer_rows(m: &ExactMatrix) -> Vec<Vec<ExactInteger>> {
    m.integer_rows().unwrap_or_default()
}

/// Lower-triangular part of each row.
fn lower_rows(m: &ExactMatrix) -> Vec<Vec<ExactInteger>> {
    integer_rows(m)
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.truncate(i + 1);
            r
        })
        .collect()
}

fn table_literal(rows: &[&[i64]]) -> Vec<Vec<ExactInteger>> {
    rows.iter().map(|r| ints(r)).collect()
}

fn first_failure(range: impl Iterator<Item = usize>, mut ok: impl FnMut(usize) -> CoreResult<bool>) -> CoreResult<Option<usize>> {
    for n in range {
        if !ok(n)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn scan(range: std::ops::RangeInclusive<usize>, ok: impl FnMut(usize) -> CoreResult<bool>) -> CoreResult<Outcome> {
    let (lo, hi) = (*range.start(), *range.end());
    Ok(match first_failure(range, ok)? {
        None => Outcome::with(true, json!({ "from": lo, "to": hi })),
        Some(n) => Outcome::with(false, json!({ "n": n })),
    })
}

fn tp_outcome(r: TpReport) -> Outcome {
    let mut w = json!({ "size": r.window_size, "max_order": r.max_minor_order, "minors": r.minors_checked });
    if let Some(m) = &r.witness {
        w["rows"] = json!(m.rows);
        w["cols"] = json!(m.cols);
        w["value"] = Value::String(m.value.to_string());
    }
    Outcome::with(r.passed(), w)
}

pub const S_TABLE: [&[i64]; 5] = [
    &[1, 1, 1, 1, 1],
    &[0, 2, 4, 6, 8],
    &[0, 2, 8, 18, 32],
    &[0, 2, 12, 38, 88],
    &[0, 2, 16, 66, 192],
];

pub const D_TABLE: [&[i64]; 5] = [
    &[1, 1, 1, 1, 1],
    &[1, 3, 5, 7, 9],
    &[1, 5, 13, 25, 41],
    &[1, 7, 25, 63, 129],
    &[1, 9, 41, 129, 321],
];

pub const C_HAT_ROWS: [&[i64]; 5] = [&[1], &[2, 1], &[2, 4, 1], &[2, 8, 6, 1], &[2, 12, 18, 8, 1]];

pub const C_HAT_INVERSE_ROWS: [&[i64]; 5] = [
    &[1],
    &[-2, 1],
    &[6, -4, 1],
    &[-22, 16, -6, 1],
    &[90, -68, 30, -8, 1],
];

// ---------------------------------------------------------------------------
// Riordan suite.

/// Values of a central sequence by every independent route, required to agree.
pub fn central_routes(kind: DiagonalKind, up_to: usize) -> CoreResult<Option<Vec<ExactInteger>>> {
    let rec = diagonal(kind, up_to)?.values;
    let mut agree = gf_expand(kind, up_to)? == rec;
    if let Some(params) = JacobiParams::for_diagonal(kind) {
        for (n, v) in rec.iter().enumerate() {
            agree &= jacobi_eval(&params, n)? == ExactRational::from_integer(v.clone());
        }
        let m = match kind {
            DiagonalKind::S => 0,
            DiagonalKind::D => 1,
            _ => 2,
        };
        let mut lat = LatticeFamily::new(m);
        agree &= (0..=up_to).all(|n| lat.get(n, n) == rec[n]);
    }
    Ok(agree.then_some(rec))
}

fn riordan_jobs(p: &Params) -> Vec<Job> {
    let w = p.window;
    let central = p.central_n;
    let mut jobs = vec![
        job("riordan.table.S", "coordination table S", || {
            let t = RiordanArray::coordination_s(4).square_window(5)?;
            Ok(Outcome::ok(integer_rows(&t) == table_literal(&S_TABLE)))
        }),
        job("riordan.table.D", "crystal ball table D", || {
            let t = RiordanArray::delannoy(4).square_window(5)?;
            Ok(Outcome::ok(integer_rows(&t) == table_literal(&D_TABLE)))
        }),
        job("riordan.table.routes", "L(m) recurrence, Riordan and bivariate g.f.", move || {
            for m in -1..=3i64 {
                let riordan = integer_rows(&RiordanArray::lattice(m, w).square_window(w + 1)?);
                let rec = LatticeFamily::new(m).table(w + 1, w + 1);
                if riordan != rec || lattice_gf_table(m, w + 1, w + 1) != rec {
                    return Ok(Outcome::with(false, json!({ "m": m })));
                }
            }
            let closed = (0..=w).all(|n| {
                (0..=w).all(|k| {
                    closed_form_s(n, k) == LatticeFamily::new(0).get(n, k)
                        && closed_form_d(n, k, DelannoyVariant::Binom2) == LatticeFamily::new(1).get(n, k)
                        && closed_form_d(n, k, DelannoyVariant::BinomShift) == LatticeFamily::new(1).get(n, k)
                })
            });
            Ok(Outcome::ok(closed))
        }),
        job("riordan.triangle.c-hat", "coordination triangle", || {
            let c = RiordanArray::coordination_triangle_c(4).square_window(5)?;
            Ok(Outcome::ok(lower_rows(&c) == table_literal(&C_HAT_ROWS)))
        }),
        job("riordan.triangle.c-hat-inverse", "inverse coordination triangle", || {
            let inv = RiordanArray::coordination_triangle_c(4).inverse()?.square_window(5)?;
            Ok(Outcome::ok(lower_rows(&inv) == table_literal(&C_HAT_INVERSE_ROWS)))
        }),
        job("riordan.identity.S-half-sum", "S_n = (D_n + D_{n-1})/2", move || {
            let d = diagonal(DiagonalKind::D, central)?.values;
            let s = diagonal(DiagonalKind::S, central)?.values;
            scan(1..=central, |n| Ok(BigInt::from(2) * &s[n] == &d[n] + &d[n - 1]))
        }),
        job("riordan.identity.C-schroeder", "C_n = (n+1) r_n", move || {
            let c = diagonal(DiagonalKind::C, central)?.values;
            let r = diagonal(DiagonalKind::Schroder, central)?.values;
            scan(0..=central, |n| Ok(c[n] == BigInt::from(n + 1) * &r[n]))
        }),
        job("riordan.left-product", "left product matrix decomposition", move || {
            for r in [
                RiordanArray::coordination_c(w),
                RiordanArray::coordination_s(w),
                RiordanArray::coordination_triangle_c(w),
                RiordanArray::coordination_triangle_s(w),
            ] {
                let (l, b) = left_product_decompose(&r, w)?;
                if l.matrix() * &b != r.square_window(w)? {
                    return Ok(Outcome::ok(false));
                }
            }
            Ok(Outcome::ok(true))
        }),
        job("riordan.ldu.S", "LDU decomposition of S", move || {
            let (l, d, u) = ldu_factors(LduTarget::S, w);
            let lower = RiordanArray::ldu_lower_s(w).square_window(w)?;
            Ok(Outcome::ok(
                &(&l * &d) * &u == RiordanArray::coordination_s(w).square_window(w)? && l == lower,
            ))
        }),
        job("riordan.ldu.C", "LDU decomposition of C", move || {
            let (l, d, u) = ldu_factors(LduTarget::C, w);
            let lower = RiordanArray::ldu_lower_c(w).square_window(w)?;
            Ok(Outcome::ok(
                &(&l * &d) * &u == RiordanArray::coordination_c(w).square_window(w)? && l == lower,
            ))
        }),
        job("riordan.det.S", "det S window = 2^{n(n+1)/2}", move || {
            let s = RiordanArray::coordination_s(w);
            scan(0..=w.saturating_sub(1), |n| {
                let det = s.square_window(n + 1)?.det_fraction_free()?;
                Ok(det == ExactRational::from_integer(pow2((n * (n + 1) / 2) as u32)))
            })
        }),
        job("riordan.production.c-hat", "A- and Z-sequences and row replay", || {
            let c = RiordanArray::coordination_triangle_c(11);
            let prod = c.extract_production()?;
            let a = prod.a.integer_coeffs().unwrap_or_default();
            let z = prod.z.integer_coeffs().unwrap_or_default();
            let r = diagonal(DiagonalKind::Schroder, 9)?.values;
            let mut ok = a.len() >= 9 && z.len() >= 8 && a[0] == BigInt::one();
            for n in 0..8.min(z.len()) {
                let signed = if n % 2 == 0 { r[n].clone() } else { -r[n].clone() };
                ok &= a[n + 1] == z[n] && (n == 0 || z[n] == signed);
            }
            ok &= z.first() == Some(&BigInt::from(2));
            let rows = replay_rows(&prod, 11)?;
            let window = c.square_window(11)?;
            ok &= rows
                .iter()
                .enumerate()
                .all(|(n, row)| row.iter().enumerate().all(|(k, v)| v == window.get(n, k)));
            Ok(Outcome::with(
                ok,
                json!({
                    "A": a.iter().take(8).map(big_value).collect::<Vec<_>>(),
                    "Z": z.iter().take(8).map(big_value).collect::<Vec<_>>(),
                }),
            ))
        }),
        job("riordan.group", "Riordan products and inverses", move || {
            let j = RiordanArray::partial_sums(w);
            let ok = j.multiply(&RiordanArray::coordination_triangle_s(w))?.square_window(w + 1)?
                == RiordanArray::delannoy_triangle(w).square_window(w + 1)?
                && j.multiply(&RiordanArray::coordination_s(w))?.square_window(w + 1)?
                    == RiordanArray::delannoy(w).square_window(w + 1)?;
            let c = RiordanArray::coordination_triangle_c(w);
            let id = c.inverse()?.multiply(&c)?.square_window(w + 1)? == ExactMatrix::identity(w + 1);
            Ok(Outcome::ok(ok && id))
        }),
    ];
    for (label, kind, prefix) in [
        ("D", DiagonalKind::D, [1, 3, 13, 63, 321]),
        ("S", DiagonalKind::S, [1, 2, 8, 38, 192]),
        ("C", DiagonalKind::C, [1, 4, 18, 88, 450]),
        ("r", DiagonalKind::Schroder, [1, 2, 6, 22, 90]),
    ] {
        jobs.push(job(
            format!("riordan.central.{label}"),
            "central sequences by recurrence, g.f. and Jacobi values",
            move || {
                let values = central_routes(kind, central.max(4))?;
                Ok(match values {
                    Some(v) => Outcome::with(v[..5] == ints(&prefix)[..], json!({ "terms": central + 1 })),
                    None => Outcome::with(false, json!({ "error": "routes disagree" })),
                })
            },
        ));
    }
    jobs
}

// ---------------------------------------------------------------------------
// Positivity suite.

fn positivity_jobs(p: &Params) -> Vec<Job> {
    let (w, order, seed) = (p.window, p.max_order, p.seed);
    let mut jobs = Vec::new();
    let tp_targets: [(&str, fn(usize) -> RiordanArray); 6] = [
        ("S", RiordanArray::coordination_s),
        ("C", RiordanArray::coordination_c),
        ("D", RiordanArray::delannoy),
        ("s-hat", RiordanArray::coordination_triangle_s),
        ("c-hat", RiordanArray::coordination_triangle_c),
        ("d-hat", RiordanArray::delannoy_triangle),
    ];
    for (label, make) in tp_targets {
        jobs.push(job(format!("positivity.tp.{label}"), "total positivity on windows", move || {
            Ok(tp_outcome(check_tp_window(&make(w).square_window(w)?, order)))
        }));
    }
    for (label, make) in [
        ("C", RiordanArray::coordination_c as fn(usize) -> RiordanArray),
        ("D", RiordanArray::delannoy),
    ] {
        let size = w.saturating_sub(1).max(1);
        jobs.push(job(format!("positivity.stp.{label}"), "STP by corner minors", move || {
            Ok(tp_outcome(check_stp_window(&make(size).square_window(size)?)?))
        }));
    }
    for (label, make) in [
        ("c-hat", RiordanArray::coordination_triangle_c as fn(usize) -> RiordanArray),
        ("d-hat", RiordanArray::delannoy_triangle),
        ("p-hat", RiordanArray::pascal),
    ] {
        jobs.push(job(format!("positivity.lstp.{label}"), "LSTP by corner minors", move || {
            Ok(tp_outcome(check_lstp_window(&make(w).square_window(w)?, seed)?))
        }));
    }
    jobs.push(job("positivity.control.p-hat-not-stp", "STP corner criterion rejects a triangle", move || {
        let r = check_stp_window(&RiordanArray::pascal(w).square_window(w)?)?;
        Ok(Outcome::ok(!r.passed()))
    }));
    for (label, m) in [("C", 2i64), ("D", 1)] {
        jobs.push(job(format!("positivity.pf.{label}-row-2"), "row generating function is PF", move || {
            let row: Vec<ExactInteger> = (0..2 * w).map(|k| LatticeFamily::new(m).get(2, k)).collect();
            Ok(tp_outcome(check_pf_sequence(&row, w.min(6), order)?))
        }));
    }
    jobs.push(job("positivity.tp.left-product-C", "left product matrix of C is TP", move || {
        let l = RiordanArray::coordination_c(w).left_product_matrix(w)?;
        Ok(tp_outcome(check_tp_window(l.matrix(), order)))
    }));
    jobs.push(job("positivity.tp.hankel-delta", "Hankel matrix of D_n is TP", move || {
        let size = w.min(6);
        let d = diagonal(DiagonalKind::D, 2 * size)?.values;
        let h = ExactMatrix::from_integer_fn(size, size, |i, j| d[i + j].clone());
        Ok(tp_outcome(check_tp_window(&h, order)))
    }));
    jobs
}

// ---------------------------------------------------------------------------
// Zeros suite.

fn zeros_jobs(p: &Params) -> Vec<Job> {
    let max_n = p.zeros_max_n;
    let mut jobs = Vec::new();
    for (label, kind) in [("c", PolyKind::C), ("d", PolyKind::D)] {
        jobs.push(job(
            format!("zeros.real-rooted.{label}"),
            "real, simple zeros inside (-3-2sqrt2, -3+2sqrt2)",
            move || scan(1..=max_n, |n| Ok(check_real_rooted_and_interval(kind, n)?.passed())),
        ));
    }
    let interlacing: [(&str, PolyKind, PolyKind, bool, InterlaceVerdict); 4] = [
        ("c", PolyKind::C, PolyKind::C, true, InterlaceVerdict::Interlaces),
        ("d", PolyKind::D, PolyKind::D, true, InterlaceVerdict::Interlaces),
        ("d-c", PolyKind::D, PolyKind::C, true, InterlaceVerdict::Interlaces),
        ("c-d", PolyKind::C, PolyKind::D, false, InterlaceVerdict::AlternatesLeft),
    ];
    for (label, left, right, previous, expect) in interlacing {
        jobs.push(job(format!("zeros.interlace.{label}"), "interlacing by the sign criterion", move || {
            scan(1..=max_n, |n| {
                let l = family_poly(left, if previous { n - 1 } else { n });
                Ok(check_interlacing(&l, &family_poly(right, n))? == expect)
            })
        }));
    }
    let formula_n = max_n.min(20);
    jobs.push(job("zeros.delannoy-formula", "trigonometric zeros of d_n", move || {
        let tol = ExactRational::new(BigInt::one(), BigInt::from(10).pow(30));
        scan(1..=formula_n, |n| Ok(verify_delannoy_zero_formula(n, &tol)?.passed()))
    }));
    jobs.push(job("zeros.density", "zeros fill the interval", move || {
        let small = empirical_zero_density(5, f64::INFINITY)?;
        let large = empirical_zero_density(max_n, f64::INFINITY)?;
        Ok(Outcome::with(
            max_n > 5 && large.all_inside && small.all_inside && large.max_gap < small.max_gap,
            json!({ "gap_5": small.max_gap, "gap_max_n": large.max_gap, "pooled": large.pooled }),
        ))
    }));
    jobs
}

// ---------------------------------------------------------------------------
// Normality suite.

/// `top/8, top/4, top/2, top`.
pub fn ladder(top: usize) -> Vec<usize> {
    vec![(top / 8).max(1), (top / 4).max(1), (top / 2).max(1), top.max(1)]
}

/// Nonincreasing with at most one non-strict step.
pub fn ladder_ok<T: PartialOrd>(values: &[T]) -> bool {
    let mut ties = 0;
    for w in values.windows(2) {
        if w[1] > w[0] {
            return false;
        }
        if w[1] == w[0] {
            ties += 1;
        }
    }
    ties <= 1
}

fn normality_jobs(p: &Params) -> Vec<Job> {
    let top = p.ladder_top;
    let rungs = ladder(top);
    let reports: Arc<OnceLock<CoreResult<Vec<NormalityReport>>>> = Arc::new(OnceLock::new());
    let fetch = {
        let reports = Arc::clone(&reports);
        let rungs = rungs.clone();
        move || -> CoreResult<Vec<NormalityReport>> {
            reports
                .get_or_init(|| {
                    rungs
                        .par_iter()
                        .map(|&n| analytics::normality_report(PolyKind::C, n))
                        .collect()
                })
                .clone()
        }
    };
    let fetch_clt = fetch.clone();
    let fetch_llt = fetch;
    let newton_n = top.min(100);
    vec![
        job("normality.clt-ladder", "central limit sup-error across a doubling ladder", move || {
            let r = fetch_clt()?;
            let errs: Vec<_> = r.iter().map(|x| x.clt_sup_error.clone()).collect();
            Ok(Outcome::with(
                ladder_ok(&errs),
                json!(r.iter().map(|x| json!({ "n": x.n, "error": x.clt_sup_error.to_decimal(12) })).collect::<Vec<_>>()),
            ))
        }),
        job("normality.llt-ladder", "local limit sup-error across a doubling ladder", move || {
            let r = fetch_llt()?;
            let errs: Vec<_> = r.iter().map(|x| x.llt_sup_error.clone()).collect();
            Ok(Outcome::with(
                ladder_ok(&errs),
                json!(r.iter().map(|x| json!({ "n": x.n, "error": x.llt_sup_error.to_decimal(12) })).collect::<Vec<_>>()),
            ))
        }),
        job("normality.mean-drift", "mean of c-rows minus (n-1)/2 tends to 1/(2sqrt2)", {
            let rungs = rungs.clone();
            move || {
                let drifts: Vec<MeanDrift> = rungs.iter().map(|&n| MeanDrift::new(n)).collect();
                let ok = drifts.windows(2).all(|w| w[0].exceeds(&w[1]));
                Ok(Outcome::with(
                    ok,
                    json!(drifts.iter().map(|d| json!({ "n": d.n, "drift": format!("{:.3e}", d.to_f64()) })).collect::<Vec<_>>()),
                ))
            }
        }),
        job("normality.variance-bound", "variance exceeds t0 n/(1+t1)^2", move || {
            let (t0, t1) = (rat(1, 6), rat(6, 1));
            let mut c = PolyFamily::new(PolyKind::C);
            scan(1..=top, |n| {
                let v = check_variance_bound(c.get(n), &t0, &t1)?;
                Ok(v.bounds_enclose && v.holds)
            })
        }),
        job("normality.unique-mode", "c-row has the unique mode floor(n/2)", move || {
            scan(1..=top, |n| {
                Ok(check_logconcave_unimodal(&analytics::c_row(n)).unique_mode() == Some(n / 2))
            })
        }),
        job("normality.newton-darroch", "Newton and Darroch inequalities on c-rows", move || {
            scan(1..=newton_n, |n| {
                let r = check_logconcave_unimodal(&analytics::c_row(n));
                Ok(r.logconcave && r.newton_pass && r.darroch_pass)
            })
        }),
        job("normality.c-mean", "mean of c-rows through d_n(1)/c_n(1)", move || {
            let mut c = PolyFamily::new(PolyKind::C);
            scan(1..=top, |n| {
                let s = analytics::coeff_stats(c.get(n))?;
                Ok(s.mean == analytics::c_mean_via_delannoy(n))
            })
        }),
        job("normality.column-row", "columns and rows of C are log-concave", || {
            let r = check_column_row_logconcavity(2, 2, 12);
            Ok(Outcome::with(
                r.passed(),
                json!({ "column": r.column.iter().take(5).map(big_value).collect::<Vec<_>>() }),
            ))
        }),
    ]
}

// ---------------------------------------------------------------------------
// Hankel suite.

fn hankel_label(kind: HankelKind) -> &'static str {
    match kind {
        HankelKind::Delta => "delta",
        HankelKind::DeltaBar => "delta-bar",
        HankelKind::Epsilon => "epsilon",
        HankelKind::Sigma => "sigma",
        HankelKind::Gamma => "gamma",
    }
}

fn hankel_jobs(p: &Params) -> Vec<Job> {
    let n = p.n;
    let lcx = p.lcx_max_n.max(2);
    let mut jobs = Vec::new();
    for kind in HankelKind::ALL {
        let label = hankel_label(kind);
        jobs.push(job(format!("hankel.determinants.{label}"), "Hankel determinants and closed forms", move || {
            let s = hankel_suite(kind, n)?;
            Ok(Outcome::with(
                s.passed() && (s.has_closed_form || !matches!(kind, HankelKind::Delta | HankelKind::DeltaBar | HankelKind::Epsilon)),
                json!({ "h": s.determinants.iter().map(big_value).collect::<Vec<_>>(), "closed_form": s.has_closed_form }),
            ))
        }));
    }
    for (label, kind, expect_sm) in [
        ("S", DiagonalKind::S, true),
        ("D", DiagonalKind::D, true),
        ("C", DiagonalKind::C, false),
    ] {
        jobs.push(job(format!("hankel.sm.{label}"), "Stieltjes moment test by Hankel signs", move || {
            let r = check_sm(kind, n.max(2))?;
            let consistent = r.verdict == SmVerdict::Consistent;
            let witness = match &r.witness {
                Some(w) => json!({ "verdict": "not-sm", "n": w.n, "shifted": w.shifted, "h": big_value(&w.value) }),
                None => json!({ "verdict": "sm-consistent" }),
            };
            Ok(Outcome::with(consistent == expect_sm, witness))
        }));
    }
    jobs.push(job("hankel.telescoping", "Desnanot-Jacobi telescoping for h_n(epsilon)", move || {
        Ok(match telescoping_check(n)? {
            None => Outcome::ok(true),
            Some(k) => Outcome::with(false, json!({ "n": k })),
        })
    }));
    jobs.push(job("hankel.sigma-split", "S_n = (D_n + E_n)/2", move || {
        let d = hankel_sequence(HankelKind::Delta, 2 * n + 2)?;
        let e = hankel_sequence(HankelKind::Epsilon, 2 * n + 2)?;
        let s = hankel_sequence(HankelKind::Sigma, 2 * n + 2)?;
        scan(0..=2 * n + 1, |k| Ok(BigInt::from(2) * &s[k] == &d[k] + &e[k]))
    }));
    for (label, kind) in [("D", DiagonalKind::D), ("S", DiagonalKind::S), ("C", DiagonalKind::C)] {
        jobs.push(job(format!("hankel.log-convex.{label}"), "strict log-convexity via three-term recurrence", move || {
            let r = check_logconvex_3term(kind, lcx)?;
            Ok(Outcome::with(
                r.passed(),
                json!({
                    "up_to": lcx,
                    "strict_witness": r.strict_witness,
                    "hypothesis_witness": r.hypothesis_witness,
                }),
            ))
        }));
    }
    jobs
}
