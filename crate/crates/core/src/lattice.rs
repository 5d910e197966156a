//! Direct generators for the `L^(m)` numbers and the central sequences.
//!
//! The memoised recurrence
//! `L(n,k) = L(n-1,k-1) + L(n-1,k) + L(n,k-1)`, `L(0,k) = 1`, `L(n,0) = m`
//! is the canonical source; closed forms, Jacobi evaluations and generating
//! functions are independent paths used to cross-check it.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, binomial_rational, binomial_shifted, pow2, ExactInteger, ExactRational};
use crate::series::TruncatedSeries;

/// Memo table for one member `L^(m)`.
#[derive(Clone, Debug)]
pub struct LatticeFamily {
    m: i64,
    table: Vec<Vec<ExactInteger>>,
}

impl LatticeFamily {
    pub fn new(m: i64) -> Self {
        Self {
            m,
            table: Vec::new(),
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    fn boundary(&self, n: usize) -> ExactInteger {
        if n == 0 {
            BigInt::one()
        } else {
            BigInt::from(self.m)
        }
    }

    /// Grows the memo to cover rows `0..=n` and columns `0..=k`.
    fn ensure(&mut self, n: usize, k: usize) {
        let cols = self.table.first().map_or(0, Vec::len).max(k + 1);
        let rows = self.table.len().max(n + 1);
        for i in 0..rows {
            if i == self.table.len() {
                self.table.push(Vec::with_capacity(cols));
            }
            for j in self.table[i].len()..cols {
                let v = match (i, j) {
                    (0, _) => BigInt::one(),
                    (_, 0) => self.boundary(i),
                    _ => {
                        &self.table[i - 1][j - 1] + &self.table[i - 1][j] + &self.table[i][j - 1]
                    }
                };
                self.table[i].push(v);
            }
        }
    }

    pub fn get(&mut self, n: usize, k: usize) -> ExactInteger {
        self.ensure(n, k);
        self.table[n][k].clone()
    }

    /// Rows `0..rows`, columns `0..cols`.
    pub fn table(&mut self, rows: usize, cols: usize) -> Vec<Vec<ExactInteger>> {
        if rows == 0 || cols == 0 {
            return vec![Vec::new(); rows];
        }
        self.ensure(rows - 1, cols - 1);
        self.table[..rows].iter().map(|r| r[..cols].to_vec()).collect()
    }

    /// Row `n` of the triangle, `l(n,k) = L(n-k, k)`, i.e. the coefficients of `l_n(x)`.
    pub fn triangle_row(&mut self, n: usize) -> Vec<ExactInteger> {
        self.ensure(n, n);
        (0..=n).map(|k| self.table[n - k][k].clone()).collect()
    }
}

pub fn lattice_number(m: i64, n: usize, k: usize) -> ExactInteger {
    LatticeFamily::new(m).get(n, k)
}

/// `S(n,k) = sum_i binomial(n-1, i-1) binomial(k, i) 2^i`, with `S(0,k) = 1`.
pub fn closed_form_s(n: usize, k: usize) -> ExactInteger {
    (0..=n.min(k))
        .map(|i| binomial_shifted(n as u64, i as u64) * binomial(k as u64, i as u64) * pow2(i as u32))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DelannoyVariant {
    /// `sum_i binomial(n,i) binomial(k,i) 2^i`
    Binom2,
    /// `sum_i binomial(n+i,k) binomial(k,i)`
    BinomShift,
}

pub fn closed_form_d(n: usize, k: usize, variant: DelannoyVariant) -> ExactInteger {
    let (n, k) = (n as u64, k as u64);
    match variant {
        DelannoyVariant::Binom2 => (0..=n.min(k))
            .map(|i| binomial(n, i) * binomial(k, i) * pow2(i as u32))
            .sum(),
        DelannoyVariant::BinomShift => (0..=k)
            .map(|i| binomial(n + i, k) * binomial(k, i))
            .sum(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagonalKind {
    /// Central Delannoy numbers `D_n = D(n,n)`.
    D,
    /// `S_n = S(n,n)`.
    S,
    /// `C_n = C(n,n)`.
    C,
    /// Large Schroeder numbers `r_n`.
    Schroder,
}

impl DiagonalKind {
    pub const ALL: [DiagonalKind; 4] = [Self::D, Self::S, Self::C, Self::Schroder];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSequence {
    pub kind: DiagonalKind,
    pub values: Vec<ExactInteger>,
}

/// `num / den`, insisting the division is exact.
fn exact_div(num: ExactInteger, den: ExactInteger, n: usize) -> Result<ExactInteger> {
    if den.is_zero() {
        return Err(Error::DegenerateRecurrence { n });
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::CrossCheckFailed("three-term recurrence produced a non-integer"));
    }
    Ok(q)
}

/// Values `0..=up_to` of a central sequence.
///
/// `D`, `S`, `C` come from their three-term recurrences; the Schroeder
/// numbers from counting paths that never rise above the diagonal.
pub fn diagonal(kind: DiagonalKind, up_to: usize) -> Result<DiagonalSequence> {
    let big = |v: i64| BigInt::from(v);
    let values = match kind {
        DiagonalKind::Schroder => schroder_paths(up_to),
        _ => {
            let init = match kind {
                DiagonalKind::D => [1, 3],
                DiagonalKind::S => [1, 2],
                _ => [1, 4],
            };
            let mut v: Vec<ExactInteger> = init.iter().map(|&x| big(x)).collect();
            for n in 2..=up_to {
                let ni = n as i64;
                let (a, b) = (&v[n - 1], &v[n - 2]);
                let next = match kind {
                    // n D_n = 3(2n-1) D_{n-1} - (n-1) D_{n-2}
                    DiagonalKind::D => exact_div(a * big(3 * (2 * ni - 1)) - b * big(ni - 1), big(ni), n)?,
                    // n(2n-3) S_n = 4(3n^2-6n+2) S_{n-1} - (n-2)(2n-1) S_{n-2}
                    DiagonalKind::S => exact_div(
                        a * big(4 * (3 * ni * ni - 6 * ni + 2)) - b * big((ni - 2) * (2 * ni - 1)),
                        big(ni * (2 * ni - 3)),
                        n,
                    )?,
                    // n(n-1) C_n = 3(2n-1)(n-1) C_{n-1} - n(n-2) C_{n-2}
                    _ => exact_div(
                        a * big(3 * (2 * ni - 1) * (ni - 1)) - b * big(ni * (ni - 2)),
                        big(ni * (ni - 1)),
                        n,
                    )?,
                };
                v.push(next);
            }
            v.truncate(up_to + 1);
            v
        }
    };
    Ok(DiagonalSequence { kind, values })
}

/// Paths from `(0,0)` to `(n,n)` with steps `(1,0)`, `(0,1)`, `(1,1)` that
/// stay on or below the diagonal.
fn schroder_paths(up_to: usize) -> Vec<ExactInteger> {
    // row[j] holds the count for the point (i, j), j <= i.
    let mut out = vec![BigInt::one()];
    let mut prev: Vec<ExactInteger> = vec![BigInt::one()];
    for i in 1..=up_to {
        let mut row: Vec<ExactInteger> = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let mut v = BigInt::zero();
            if j < i {
                v += &prev[j];
            }
            if j > 0 {
                v += &row[j - 1];
                v += &prev[j - 1];
            }
            row.push(v);
        }
        out.push(row[i].clone());
        prev = row;
    }
    out
}

/// Parameters of a Jacobi polynomial evaluation `P_n^(alpha, beta)(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub alpha: ExactRational,
    pub beta: ExactRational,
    pub t: ExactRational,
}

impl JacobiParams {
    pub fn new(alpha: ExactRational, beta: ExactRational, t: ExactRational) -> Self {
        Self { alpha, beta, t }
    }

    /// The parameter set whose values at `n` give the central sequence `kind`.
    pub fn for_diagonal(kind: DiagonalKind) -> Option<Self> {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let (a, b) = match kind {
            DiagonalKind::D => (0, 0),
            DiagonalKind::S => (0, -1),
            DiagonalKind::C => (1, -1),
            DiagonalKind::Schroder => return None,
        };
        Some(Self::new(r(a), r(b), r(3)))
    }
}

/// Explicit sum
/// `sum_i binomial(n+alpha, i) binomial(n+beta, n-i) ((t+1)/2)^i ((t-1)/2)^(n-i)`.
pub fn jacobi_sum(p: &JacobiParams, n: usize) -> ExactRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let one = BigRational::one();
    let up = (&p.t + &one) / &two;
    let down = (&p.t - &one) / &two;
    let nr = BigRational::from_integer(BigInt::from(n));
    let na = &nr + &p.alpha;
    let nb = &nr + &p.beta;
    (0..=n)
        .map(|i| {
            binomial_rational(&na, i)
                * binomial_rational(&nb, n - i)
                * num_traits::pow(up.clone(), i)
                * num_traits::pow(down.clone(), n - i)
        })
        .fold(BigRational::zero(), |acc, v| acc + v)
}

/// `P_0 ..= P_n` by the three-term recurrence, seeded with
/// `P_0 = 1`, `P_1 = (alpha+1) + (alpha+beta+2)(t-1)/2`.
pub fn jacobi_recurrence(p: &JacobiParams, n: usize) -> Result<Vec<ExactRational>> {
    let r = |v: i64| BigRational::from_integer(BigInt::from(v));
    let (a, b, t) = (&p.alpha, &p.beta, &p.t);
    let mut out = vec![BigRational::one()];
    if n >= 1 {
        out.push((a + r(1)) + (a + b + r(2)) * (t - r(1)) / r(2));
    }
    for k in 2..=n {
        let kr = r(k as i64);
        let s = &kr * r(2) + a + b;
        let lead = r(2) * &kr * (&kr + a + b) * (&s - r(2));
        if lead.is_zero() {
            return Err(Error::DegenerateRecurrence { n: k });
        }
        let c1 = (&s - r(1)) * (&s * (&s - r(2)) * t + a * a - b * b);
        let c2 = r(2) * (&kr + a - r(1)) * (&kr + b - r(1)) * &s;
        let v = (c1 * &out[k - 1] - c2 * &out[k - 2]) / lead;
        out.push(v);
    }
    Ok(out)
}

/// `P_n^(alpha, beta)(t)` from the explicit sum, confirmed by the recurrence.
pub fn jacobi_eval(p: &JacobiParams, n: usize) -> Result<ExactRational> {
    let value = jacobi_sum(p, n);
    let rec = jacobi_recurrence(p, n)?;
    if rec[n] != value {
        return Err(Error::CrossCheckFailed("Jacobi sum and recurrence disagree"));
    }
    Ok(value)
}

/// Coefficients `0..=up_to` of the closed-form generating function of `kind`.
pub fn gf_expand(kind: DiagonalKind, up_to: usize) -> Result<Vec<ExactInteger>> {
    let order = up_to + 1;
    let root = TruncatedSeries::from_ints(&[1, -6, 1], order).sqrt()?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let series = match kind {
        DiagonalKind::D => root.recip()?,
        DiagonalKind::S => (&TruncatedSeries::from_ints(&[1, 1], order) + &root)
            .div(&root)?
            .scale(&half),
        DiagonalKind::C => (&TruncatedSeries::from_ints(&[3, -1], order) - &root)
            .div(&root)?
            .scale(&half),
        DiagonalKind::Schroder => (&TruncatedSeries::from_ints(&[1, -1], order) - &root)
            .div_x()?
            .scale(&half),
    };
    series
        .truncate(up_to)?
        .integer_coeffs()
        .ok_or(Error::CrossCheckFailed("generating function has a fractional coefficient"))
}

/// Row-wise expansion of `num(x, y) / den(x, y)` with `den(0,0) = 1`.
///
/// Polynomials are given as `p[i][j]` = coefficient of `x^i y^j`; the result
/// is the `rows x cols` coefficient array indexed the same way.
pub fn bivariate_expand(
    num: &[&[i64]],
    den: &[&[i64]],
    rows: usize,
    cols: usize,
) -> Vec<Vec<ExactInteger>> {
    assert_eq!(den[0][0], 1, "denominator must have constant term 1");
    let at = |p: &[&[i64]], i: usize, j: usize| -> i64 {
        p.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    };
    let mut c = vec![vec![BigInt::zero(); cols]; rows];
    for n in 0..rows {
        for k in 0..cols {
            let mut v = BigInt::from(at(num, n, k));
            for (i, row) in den.iter().enumerate().take(n + 1) {
                for (j, &d) in row.iter().enumerate().take(k + 1) {
                    if (i, j) != (0, 0) && d != 0 {
                        v -= &c[n - i][k - j] * d;
                    }
                }
            }
            c[n][k] = v;
        }
    }
    c
}

/// Bivariate generating function `(1 + (m-1)x) / (1 - x - y - xy)` of `L^(m)`,
/// expanded into a `rows x cols` table.
pub fn lattice_gf_table(m: i64, rows: usize, cols: usize) -> Vec<Vec<ExactInteger>> {
    bivariate_expand(&[&[1], &[m - 1]], &[&[1, -1], &[-1, -1]], rows, cols)
}
