//! Total positivity on finite windows.
//!
//! `TP` means every minor is nonnegative, `STP` every minor positive, and a
//! lower-triangular matrix is `LSTP` when every minor whose row indices
//! dominate its column indices (`i_l >= j_l`) is positive. STP and LSTP are
//! decided through the corner-minor criteria, so they need only
//! polynomially many determinants; TP is exhaustive up to a minor order.

use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{integer_minor, ExactMatrix};
use crate::scalar::{ExactInteger, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TpVerdict {
    TpPass,
    StpPass,
    LstpPass,
    Fail,
}

/// A minor that broke the property being checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpReport {
    pub window_size: usize,
    pub max_minor_order: usize,
    pub verdict: TpVerdict,
    pub witness: Option<MinorWitness>,
    pub minors_checked: usize,
}

impl TpReport {
    pub fn passed(&self) -> bool {
        self.verdict != TpVerdict::Fail
    }
}

/// Minor evaluation with an integer fast path.
enum Minors<'a> {
    Integer(Vec<Vec<BigInt>>),
    Rational(&'a ExactMatrix),
}

impl<'a> Minors<'a> {
    fn new(m: &'a ExactMatrix) -> Self {
        match m.integer_rows() {
            Some(rows) => Self::Integer(rows),
            None => Self::Rational(m),
        }
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> ExactRational {
        match self {
            Self::Integer(a) => BigRational::from_integer(integer_minor(a, rows, cols)),
            Self::Rational(m) => m.minor(rows, cols).expect("valid index sets"),
        }
    }
}

struct Tally {
    checked: usize,
    witness: Option<MinorWitness>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            witness: None,
        }
    }

    /// Records the minor; returns `false` once a witness has been found.
    fn check(&mut self, minors: &Minors<'_>, rows: &[usize], cols: &[usize], strict: bool) -> bool {
        self.checked += 1;
        let value = minors.minor(rows, cols);
        let bad = value.is_negative() || (strict && value.is_zero());
        if bad {
            self.witness = Some(MinorWitness {
                rows: rows.to_vec(),
                cols: cols.to_vec(),
                value,
            });
        }
        !bad
    }
}

fn report(window_size: usize, max_minor_order: usize, pass: TpVerdict, tally: Tally) -> TpReport {
    TpReport {
        window_size,
        max_minor_order,
        verdict: if tally.witness.is_some() {
            TpVerdict::Fail
        } else {
            pass
        },
        witness: tally.witness,
        minors_checked: tally.checked,
    }
}

/// Every minor of order at most `max_order`, in order of size, then
/// lexicographically by rows and columns. The first negative one is the witness.
pub fn check_tp_window(m: &ExactMatrix, max_order: usize) -> TpReport {
    let max_order = max_order.min(m.rows()).min(m.cols());
    let minors = Minors::new(m);
    let mut tally = Tally::new();
    'outer: for k in 1..=max_order {
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                if !tally.check(&minors, &rows, &cols, false) {
                    break 'outer;
                }
            }
        }
    }
    report(m.rows().max(m.cols()), max_order, TpVerdict::TpPass, tally)
}

/// Corner-minor criterion for STP: `A(i..i+k; 0..k) > 0` and
/// `A(0..k; i..i+k) > 0` for `k = 0..m`, `i = 0..m-k`.
pub fn check_stp_window(m: &ExactMatrix) -> Result<TpReport> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let size = m.rows();
    let minors = Minors::new(m);
    let mut tally = Tally::new();
    'outer: for k in 0..size {
        let lead: Vec<usize> = (0..=k).collect();
        for i in 0..size - k {
            let shifted: Vec<usize> = (i..=i + k).collect();
            if !tally.check(&minors, &shifted, &lead, true)
                || !tally.check(&minors, &lead, &shifted, true)
            {
                break 'outer;
            }
        }
    }
    Ok(report(size, size, TpVerdict::StpPass, tally))
}

/// Random row/column index sets of equal size with `rows[l] >= cols[l]`.
fn dominated_pair(rng: &mut ChaCha8Rng, size: usize) -> (Vec<usize>, Vec<usize>) {
    let k = rng.gen_range(1..=size);
    let mut rows = rand::seq::index::sample(rng, size, k).into_vec();
    rows.sort_unstable();
    let mut cols = Vec::with_capacity(k);
    let mut next = 0usize;
    for &r in &rows {
        let j = rng.gen_range(next..=r);
        cols.push(j);
        next = j + 1;
    }
    (rows, cols)
}

/// Default number of random dominated minors in the LSTP spot check.
pub const LSTP_SAMPLES: usize = 200;

/// Corner criterion `A_m(m-k..m; 0..k) > 0` for every leading principal
/// window `A_m`, plus a seeded spot check of random dominated minors.
pub fn check_lstp_window(m: &ExactMatrix, seed: u64) -> Result<TpReport> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_lower_triangular() {
        return Err(Error::NotLowerTriangular);
    }
    let size = m.rows();
    let minors = Minors::new(m);
    let mut tally = Tally::new();
    'corner: for top in 0..size {
        for k in 0..=top {
            let rows: Vec<usize> = (top - k..=top).collect();
            let cols: Vec<usize> = (0..=k).collect();
            if !tally.check(&minors, &rows, &cols, true) {
                break 'corner;
            }
        }
    }
    if tally.witness.is_none() && size > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..LSTP_SAMPLES {
            let (rows, cols) = dominated_pair(&mut rng, size);
            if !tally.check(&minors, &rows, &cols, true) {
                break;
            }
        }
    }
    Ok(report(size, size, TpVerdict::LstpPass, tally))
}

/// Toeplitz window `[a_{i-j}]` of size `window`.
pub fn toeplitz_window(a: &[ExactInteger], window: usize) -> ExactMatrix {
    ExactMatrix::from_integer_fn(window, window, |i, j| {
        if i >= j {
            a[i - j].clone()
        } else {
            BigInt::zero()
        }
    })
}

/// TP check of the Toeplitz window of a finite prefix.
pub fn check_pf_sequence(a: &[ExactInteger], window: usize, max_order: usize) -> Result<TpReport> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    if window > a.len() {
        return Err(Error::InsufficientOrder {
            needed: window - 1,
            available: a.len() - 1,
        });
    }
    Ok(check_tp_window(&toeplitz_window(a, window), max_order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{diagonal, DiagonalKind};
    use crate::riordan::RiordanArray;
    use crate::scalar::{int, rat_int};
    use crate::series::TruncatedSeries;

    fn ints(v: &[i64]) -> Vec<ExactInteger> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn tp_examples() {
        let xi = ints(&[1, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(check_pf_sequence(&xi, 6, 4).unwrap().verdict, TpVerdict::TpPass);
        let c = RiordanArray::coordination_triangle_c(7).square_window(8).unwrap();
        assert_eq!(check_tp_window(&c, 4).verdict, TpVerdict::TpPass);
        let bad = ExactMatrix::from_rows(&[&[1, 2], &[3, 1]]);
        let r = check_tp_window(&bad, 2);
        assert_eq!(r.verdict, TpVerdict::Fail);
        assert_eq!(
            r.witness,
            Some(MinorWitness {
                rows: vec![0, 1],
                cols: vec![0, 1],
                value: rat_int(-5)
            })
        );
    }

    #[test]
    fn pf_examples() {
        // Row 2 of C from 2(1+y)/(1-y)^3, and row 2 of D from (1+y)^2/(1-y)^3.
        let c_row = TruncatedSeries::rational(&[2, 2], &[1, -3, 3, -1], 7).unwrap();
        let c_row = c_row.integer_coeffs().unwrap();
        assert_eq!(c_row[..5], ints(&[2, 8, 18, 32, 50]));
        assert!(check_pf_sequence(&c_row, 6, 4).unwrap().passed());
        let d_row = ints(&[1, 5, 13, 25, 41, 61, 85]);
        assert!(check_pf_sequence(&d_row, 6, 4).unwrap().passed());

        let r = check_pf_sequence(&ints(&[1, 0, 1]), 3, 3).unwrap();
        assert_eq!(r.verdict, TpVerdict::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.value, rat_int(-1));
        assert_eq!((w.rows, w.cols), (vec![1, 2], vec![0, 1]));
        assert_eq!(check_pf_sequence(&[], 1, 1), Err(Error::EmptySequence));
    }

    #[test]
    fn stp_examples() {
        let c = RiordanArray::coordination_c(6).square_window(7).unwrap();
        assert_eq!(check_stp_window(&c).unwrap().verdict, TpVerdict::StpPass);
        let d = RiordanArray::delannoy(6).square_window(7).unwrap();
        assert_eq!(check_stp_window(&d).unwrap().verdict, TpVerdict::StpPass);
        let tri = RiordanArray::pascal(6).square_window(7).unwrap();
        let r = check_stp_window(&tri).unwrap();
        assert_eq!(r.verdict, TpVerdict::Fail);
        assert!(r.witness.unwrap().value.is_zero());
    }

    #[test]
    fn lstp_examples() {
        for r in [
            RiordanArray::coordination_triangle_c(7),
            RiordanArray::delannoy_triangle(7),
            RiordanArray::pascal(7),
        ] {
            let w = r.square_window(8).unwrap();
            assert_eq!(check_lstp_window(&w, 7).unwrap().verdict, TpVerdict::LstpPass);
        }
        // The identity is TP but not LSTP.
        let id = ExactMatrix::identity(4);
        assert_eq!(check_lstp_window(&id, 1).unwrap().verdict, TpVerdict::Fail);
        let full = RiordanArray::coordination_c(3).square_window(4).unwrap();
        assert_eq!(check_lstp_window(&full, 1), Err(Error::NotLowerTriangular));
    }

    #[test]
    fn riordan_theorem_instances() {
        for (num, den) in [(&[1i64, 1][..], &[1i64, -1][..]), (&[1][..], &[1, -1][..])] {
            let f = TruncatedSeries::rational(num, den, 7).unwrap();
            let square = RiordanArray::new(f.clone(), f.clone()).square_window(8).unwrap();
            assert!(check_stp_window(&square).unwrap().passed());
            let tri = RiordanArray::new(f.clone(), f.mul_x().truncate(7).unwrap())
                .square_window(8)
                .unwrap();
            assert!(check_lstp_window(&tri, 3).unwrap().passed());
        }
        // Left product matrix of C is TP.
        let (l, _) =
            crate::riordan::left_product_decompose(&RiordanArray::coordination_c(7), 8).unwrap();
        assert!(check_tp_window(l.matrix(), 4).passed());
    }

    #[test]
    fn hankel_of_delannoy_is_tp() {
        let d = diagonal(DiagonalKind::D, 12).unwrap().values;
        let h = ExactMatrix::from_integer_fn(6, 6, |i, j| d[i + j].clone());
        assert!(check_tp_window(&h, 6).passed());
    }

    #[test]
    fn product_minors_dominate_single_cauchy_binet_terms() {
        let j = RiordanArray::partial_sums(7).square_window(8).unwrap();
        let s = RiordanArray::coordination_triangle_s(7).square_window(8).unwrap();
        let d = RiordanArray::delannoy_triangle(7).square_window(8).unwrap();
        assert_eq!(&j * &s, d);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..100 {
            let k = rng.gen_range(1..=8);
            let pick = |rng: &mut ChaCha8Rng| {
                let mut v = rand::seq::index::sample(rng, 8, k).into_vec();
                v.sort_unstable();
                v
            };
            let (rows, cols, mid) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let whole = d.minor(&rows, &cols).unwrap();
            let term = j.minor(&rows, &mid).unwrap() * s.minor(&mid, &cols).unwrap();
            assert!(whole >= term);
        }
    }
}
