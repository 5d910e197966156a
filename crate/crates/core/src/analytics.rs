//! Coefficient analytics: moments and modes of coefficient rows,
//! log-concavity, log-convexity of the central sequences, normality
//! statistics and the Hankel-determinant suite.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::highprec::{self, HighFloat};
use crate::lattice::{diagonal, DiagonalKind, LatticeFamily};
use crate::matrix::{det_integer, ExactMatrix};
use crate::poly::ExactPolynomial;
use crate::scalar::{pow2, ExactInteger, ExactRational};
use crate::series::TruncatedSeries;
use crate::zeros::{family_poly, PolyKind};

fn rational(v: &BigInt) -> ExactRational {
    BigRational::from_integer(v.clone())
}

fn ri(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Indices attaining the maximum.
fn argmax(a: &[ExactRational]) -> Vec<usize> {
    let Some(max) = a.iter().max() else {
        return Vec::new();
    };
    (0..a.len()).filter(|&k| &a[k] == max).collect()
}

// ---------------------------------------------------------------------------
// Moments.

/// Mean, variance and modes of the distribution `k -> a_k / A(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffStats {
    pub n: usize,
    /// `A(1)`.
    pub total: ExactRational,
    /// `A'(1) / A(1)`.
    pub mean: ExactRational,
    /// `A''(1)/A(1) + mean - mean^2`.
    pub variance: ExactRational,
    pub modes: Vec<usize>,
}

pub fn coeff_stats(p: &ExactPolynomial) -> Result<CoeffStats> {
    let coeffs = p.coeffs();
    if let Some(index) = coeffs.iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient { index });
    }
    if p.is_zero() {
        return Err(Error::EmptySequence);
    }
    let total = p.value_at_one();
    let d1 = p.derivative();
    let mean = d1.value_at_one() / &total;
    let second = d1.derivative().value_at_one() / &total;
    let variance = second + &mean - &mean * &mean;
    Ok(CoeffStats {
        n: p.degree().unwrap_or(0),
        total,
        mean,
        variance,
        modes: argmax(coeffs),
    })
}

// ---------------------------------------------------------------------------
// Log-concavity, unimodality, Newton and Darroch.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavityReport {
    pub logconcave: bool,
    /// First `k` with `a_{k-1} a_{k+1} > a_k^2`.
    pub logconcave_witness: Option<usize>,
    pub no_internal_zeros: bool,
    pub unimodal: bool,
    pub modes: Vec<usize>,
    /// `a_k^2 >= a_{k-1} a_{k+1} (k+1)(n-k+1) / (k(n-k))` for `1 <= k < n`.
    pub newton_pass: bool,
    pub newton_witness: Option<usize>,
    /// Every mode lies within distance `< 1` of `A'(1)/A(1)`.
    pub darroch_pass: bool,
}

impl LogConcavityReport {
    pub fn unique_mode(&self) -> Option<usize> {
        match self.modes.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }
}

pub fn check_logconcave_unimodal(a: &[ExactInteger]) -> LogConcavityReport {
    let len = a.len();
    let logconcave_witness = (1..len.saturating_sub(1)).find(|&k| &a[k - 1] * &a[k + 1] > &a[k] * &a[k]);

    let nonzero: Vec<usize> = (0..len).filter(|&k| !a[k].is_zero()).collect();
    let no_internal_zeros = match (nonzero.first(), nonzero.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 == nonzero.len(),
        _ => true,
    };

    // Weakly up, then weakly down.
    let mut k = 0;
    while k + 1 < len && a[k] <= a[k + 1] {
        k += 1;
    }
    while k + 1 < len && a[k] >= a[k + 1] {
        k += 1;
    }
    let unimodal = k + 1 >= len;

    let modes = argmax(&a.iter().map(rational).collect::<Vec<_>>());

    // Newton's inequality with n the degree.
    let n = len.saturating_sub(1);
    let newton_witness = (1..n).find(|&k| {
        let lhs = &a[k] * &a[k] * BigInt::from(k) * BigInt::from(n - k);
        let rhs = &a[k - 1] * &a[k + 1] * BigInt::from(k + 1) * BigInt::from(n - k + 1);
        lhs < rhs
    });

    // |m - sum k a_k / sum a_k| < 1  <=>  |m total - sum k a_k| < total.
    let total: BigInt = a.iter().sum();
    let weighted: BigInt = a.iter().enumerate().map(|(k, v)| v * BigInt::from(k)).sum();
    let darroch_pass = total.is_positive()
        && modes
            .iter()
            .all(|&m| (BigInt::from(m) * &total - &weighted).abs() < total);

    LogConcavityReport {
        logconcave: logconcave_witness.is_none(),
        logconcave_witness,
        no_internal_zeros,
        unimodal,
        modes,
        newton_pass: newton_witness.is_none(),
        newton_witness,
        darroch_pass,
    }
}

/// Row `(c(n,0), ..., c(n,n))`, i.e. the antidiagonal `C(n-k, k)`.
pub fn c_row(n: usize) -> Vec<ExactInteger> {
    let mut c = LatticeFamily::new(2);
    c.triangle_row(n)
}

// ---------------------------------------------------------------------------
// Log-convexity of the central sequences.

/// `(a_n, b_n, c_n)` of `a_n z_n = b_n z_{n-1} - c_n z_{n-2}`, `n >= 2`.
pub fn three_term_coefficients(kind: DiagonalKind, n: usize) -> (BigInt, BigInt, BigInt) {
    let n = BigInt::from(n);
    let one = BigInt::one();
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let odd = &two * &n - &one;
    match kind {
        DiagonalKind::D => (n.clone(), &three * &odd, &n - &one),
        DiagonalKind::S => (
            &n * (&two * &n - &three),
            BigInt::from(4) * (&three * &n * &n - BigInt::from(6) * &n + &two),
            (&n - &two) * &odd,
        ),
        DiagonalKind::C => (&n * (&n - &one), &three * &odd * (&n - &one), &n * (&n - &two)),
        DiagonalKind::Schroder => (&n + &one, &three * &odd, &n - &two),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConvexReport {
    pub kind: DiagonalKind,
    pub up_to: usize,
    /// `z_{n-1} z_{n+1} > z_n^2` for `1 <= n < up_to`.
    pub strict: bool,
    pub strict_witness: Option<usize>,
    /// `z_1 > z_0` and `z_0 z_2 > z_1^2`.
    pub initial: bool,
    /// The sequence satisfies its three-term recurrence with `a_n > 0`, `b_n, c_n >= 0`.
    pub recurrence: bool,
    /// `a_n b_{n+1} - a_{n+1} b_n >= max(0, a_n c_{n+1} - a_{n+1} c_n)` for `2 <= n <= up_to`.
    pub hypothesis: bool,
    pub hypothesis_witness: Option<usize>,
}

impl LogConvexReport {
    pub fn passed(&self) -> bool {
        self.strict && self.initial && self.recurrence && self.hypothesis
    }
}

pub fn check_logconvex_3term(kind: DiagonalKind, up_to: usize) -> Result<LogConvexReport> {
    if up_to < 2 {
        return Err(Error::InsufficientOrder { needed: 2, available: up_to });
    }
    let z = diagonal(kind, up_to)?.values;
    let strict_witness = (1..up_to).find(|&n| &z[n - 1] * &z[n + 1] <= &z[n] * &z[n]);
    let initial = z[1] > z[0] && &z[0] * &z[2] > &z[1] * &z[1];
    let recurrence = (2..=up_to).all(|n| {
        let (a, b, c) = three_term_coefficients(kind, n);
        a.is_positive() && !b.is_negative() && !c.is_negative() && &a * &z[n] == &b * &z[n - 1] - &c * &z[n - 2]
    });
    let hypothesis_witness = (2..=up_to).find(|&n| {
        let (a0, b0, c0) = three_term_coefficients(kind, n);
        let (a1, b1, c1) = three_term_coefficients(kind, n + 1);
        let lhs = &a0 * &b1 - &a1 * &b0;
        let rhs = (&a0 * &c1 - &a1 * &c0).max(BigInt::zero());
        lhs < rhs
    });
    Ok(LogConvexReport {
        kind,
        up_to,
        strict: strict_witness.is_none(),
        strict_witness,
        initial,
        recurrence,
        hypothesis: hypothesis_witness.is_none(),
        hypothesis_witness,
    })
}

// ---------------------------------------------------------------------------
// Column and row log-concavity of C.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnRowReport {
    pub column_index: usize,
    pub column: Vec<ExactInteger>,
    pub column_logconcave: bool,
    /// Column prefix equals the expansion of `((1+x)/(1-x))^(k+1)`.
    pub column_gf_matches: bool,
    pub row_index: usize,
    pub row: Vec<ExactInteger>,
    pub row_logconcave: bool,
    /// Row prefix equals the expansion of `2(1+y)^(n-1)/(1-y)^(n+1)` (`1/(1-y)` for `n = 0`).
    pub row_gf_matches: bool,
}

impl ColumnRowReport {
    pub fn passed(&self) -> bool {
        self.column_logconcave && self.column_gf_matches && self.row_logconcave && self.row_gf_matches
    }
}

fn binomial_power(sign: i64, e: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(&[1, sign], order).pow(e)
}

/// Column `k` and row `n` of `C`, each with `length` entries.
pub fn check_column_row_logconcavity(k: usize, n: usize, length: usize) -> ColumnRowReport {
    let mut c = LatticeFamily::new(2);
    let column: Vec<ExactInteger> = (0..length).map(|i| c.get(i, k)).collect();
    let row: Vec<ExactInteger> = (0..length).map(|j| c.get(n, j)).collect();

    let column_gf = binomial_power(1, k + 1, length)
        .div(&binomial_power(-1, k + 1, length))
        .expect("unit denominator");
    let row_gf = if n == 0 {
        TruncatedSeries::one(length).div(&binomial_power(-1, 1, length))
    } else {
        binomial_power(1, n - 1, length)
            .scale(&ri(2))
            .div(&binomial_power(-1, n + 1, length))
    }
    .expect("unit denominator");

    let matches = |v: &[ExactInteger], s: &TruncatedSeries| {
        v.iter()
            .enumerate()
            .all(|(i, x)| s.coeff(i).is_some_and(|c| c == &rational(x)))
    };
    ColumnRowReport {
        column_index: k,
        column_logconcave: check_logconcave_unimodal(&column).logconcave,
        column_gf_matches: matches(&column, &column_gf),
        column,
        row_index: n,
        row_logconcave: check_logconcave_unimodal(&row).logconcave,
        row_gf_matches: matches(&row, &row_gf),
        row,
    }
}

// ---------------------------------------------------------------------------
// Normality.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub kind: PolyKind,
    pub n: usize,
    pub mean: ExactRational,
    pub variance: ExactRational,
    /// `sup_x |sum_{k <= mu + x sigma} p(n,k) - Phi(x)|`.
    pub clt_sup_error: HighFloat,
    /// `sup_x |sigma p(n, floor(mu + x sigma)) - phi(x)|`.
    pub llt_sup_error: HighFloat,
}

fn inv_sqrt_two_pi() -> HighFloat {
    &HighFloat::one() / &highprec::pi().mul_int(2).sqrt()
}

fn density(x: &HighFloat, scale: &HighFloat) -> HighFloat {
    let half_sq = (x * x).div_int(2);
    &highprec::exp(&-&half_sq) * scale
}

fn dist(a: &HighFloat, b: &HighFloat) -> HighFloat {
    (a - b).abs()
}

pub fn normality_report(kind: PolyKind, n: usize) -> Result<NormalityReport> {
    let p = family_poly(kind, n);
    let stats = coeff_stats(&p)?;
    if !stats.variance.is_positive() {
        return Err(Error::ConstantPolynomial);
    }
    let sigma = HighFloat::from_rational(&stats.variance).sqrt();
    let probs: Vec<HighFloat> = p
        .coeffs()
        .iter()
        .map(|c| HighFloat::from_rational(&(c / &stats.total)))
        .collect();
    let deg = probs.len() - 1;
    // Jump points x_k = (k - mu)/sigma for k = 0..=deg+1.
    let xs: Vec<HighFloat> = (0..=deg + 1)
        .map(|k| &HighFloat::from_rational(&(ri(k as i64) - &stats.mean)) / &sigma)
        .collect();

    let mut clt = HighFloat::zero();
    let mut below = HighFloat::zero();
    for k in 0..=deg {
        let phi = highprec::normal_cdf(&xs[k]);
        let upto = &below + &probs[k];
        clt = clt.max(dist(&below, &phi)).max(dist(&upto, &phi));
        below = upto;
    }

    let scale = inv_sqrt_two_pi();
    let dens: Vec<HighFloat> = xs.iter().map(|x| density(x, &scale)).collect();
    let zero = HighFloat::zero();
    // Outside [x_0, x_{deg+1}) the step is 0; since x_0 < 0 < x_{deg+1}
    // the density there peaks at the boundary.
    let mut llt = dens[0].clone().max(dens[deg + 1].clone());
    for k in 0..=deg {
        let v = &probs[k] * &sigma;
        let (lo, hi) = (&dens[k], &dens[k + 1]);
        let top = if xs[k] <= zero && zero < xs[k + 1] {
            scale.clone()
        } else {
            lo.clone().max(hi.clone())
        };
        let bottom = lo.clone().min(hi.clone());
        llt = llt.max(dist(&v, &top)).max(dist(&v, &bottom));
    }

    Ok(NormalityReport {
        kind,
        n,
        mean: stats.mean,
        variance: stats.variance,
        clt_sup_error: clt,
        llt_sup_error: llt,
    })
}

/// `l_n(1)` from `l_n(1) = 2 l_{n-1}(1) + l_{n-2}(1)`, `l_0(1) = 1`, `l_1(1) = 1 + m`.
pub fn row_sum(m: i64, n: usize) -> ExactInteger {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::from(1 + m));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(2) * &cur + &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `(n-1)/2 + d_n(1) / (2 c_n(1))`, the mean of the `c`-row written through
/// `c_n = d_n + d_{n-1}`.
pub fn c_mean_via_delannoy(n: usize) -> ExactRational {
    let d = rational(&row_sum(1, n));
    let c = rational(&row_sum(2, n));
    BigRational::new(BigInt::from(n as i64 - 1), BigInt::from(2)) + d / (c * ri(2))
}

/// Rational bounds `lo < 1/(2 sqrt 2) < hi` of width `2^-bits`.
fn inv_two_sqrt2_bounds(bits: u32) -> (ExactRational, ExactRational) {
    // sqrt(2)/4 with sqrt(2) enclosed by floor(sqrt(2 * 4^bits)) / 2^bits.
    let scale = pow2(bits);
    let r = (BigInt::from(2) * &scale * &scale).sqrt();
    let den = &scale * BigInt::from(4);
    (BigRational::new(r.clone(), den.clone()), BigRational::new(r + 1, den))
}

/// `|mean(c_n) - (n-1)/2 - 1/(2 sqrt 2)|`, kept in the exact form
/// `|a^2 - 1/8| / (a + 1/(2 sqrt 2))` with `a = d_n(1)/(2 c_n(1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanDrift {
    pub n: usize,
    pub numerator: ExactRational,
    pub offset: ExactRational,
}

impl MeanDrift {
    pub fn new(n: usize) -> Self {
        let offset = c_mean_via_delannoy(n) - BigRational::new(BigInt::from(n as i64 - 1), BigInt::from(2));
        let numerator = (&offset * &offset - BigRational::new(BigInt::one(), BigInt::from(8))).abs();
        Self { n, numerator, offset }
    }

    /// Certified `self > other`.
    pub fn exceeds(&self, other: &MeanDrift) -> bool {
        let (lo, hi) = inv_two_sqrt2_bounds(512);
        // num_s / (a_s + s) > num_o / (a_o + s), denominators positive.
        &self.numerator * (&other.offset + &lo) > &other.numerator * (&self.offset + &hi)
    }

    pub fn to_f64(&self) -> f64 {
        let num = self.numerator.to_f64().unwrap_or(f64::NAN);
        let den = self.offset.to_f64().unwrap_or(f64::NAN) + core::f64::consts::SQRT_2 / 4.0;
        num / den
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarianceBound {
    pub n: usize,
    pub variance: ExactRational,
    pub bound: ExactRational,
    /// `t0 < 3 - 2 sqrt 2` and `t1 > 3 + 2 sqrt 2`.
    pub bounds_enclose: bool,
    pub holds: bool,
}

/// `sigma^2 > t0 n / (1 + t1)^2` for a row polynomial of degree `n`.
pub fn check_variance_bound(
    p: &ExactPolynomial,
    t0: &ExactRational,
    t1: &ExactRational,
) -> Result<VarianceBound> {
    let three = ri(3);
    let eight = ri(8);
    let bounds_enclose = t0.is_positive()
        && t0 < &three
        && (&three - t0) * (&three - t0) > eight
        && t1 > &three
        && (t1 - &three) * (t1 - &three) > eight;
    let stats = coeff_stats(p)?;
    let (n, variance) = (stats.n, stats.variance);
    let one_t1 = ri(1) + t1;
    let bound = t0 * ri(n as i64) / (&one_t1 * &one_t1);
    Ok(VarianceBound {
        n,
        holds: variance > bound,
        variance,
        bound,
        bounds_enclose,
    })
}

// ---------------------------------------------------------------------------
// Hankel determinants.

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HankelKind {
    /// `(D_n)`.
    Delta,
    /// `(D_{n+1})`.
    DeltaBar,
    /// `(1, D_0, D_1, ...)`.
    Epsilon,
    /// `(S_n)`.
    Sigma,
    /// `(C_n)`.
    Gamma,
}

impl HankelKind {
    pub const ALL: [HankelKind; 5] = [Self::Delta, Self::DeltaBar, Self::Epsilon, Self::Sigma, Self::Gamma];
}

/// First `len` terms of the sequence.
pub fn hankel_sequence(kind: HankelKind, len: usize) -> Result<Vec<ExactInteger>> {
    let take = |k: DiagonalKind, skip: usize| -> Result<Vec<ExactInteger>> {
        let v = diagonal(k, len + skip)?.values;
        Ok(v[skip..skip + len].to_vec())
    };
    match kind {
        HankelKind::Delta => take(DiagonalKind::D, 0),
        HankelKind::DeltaBar => take(DiagonalKind::D, 1),
        HankelKind::Epsilon => {
            let mut v = vec![BigInt::one()];
            v.extend(take(DiagonalKind::D, 0)?);
            v.truncate(len);
            Ok(v)
        }
        HankelKind::Sigma => take(DiagonalKind::S, 0),
        HankelKind::Gamma => take(DiagonalKind::C, 0),
    }
}

/// `h_0, ..., h_up_to` of `[a_{i+j}]`; needs `2 up_to + 1` terms.
pub fn hankel_determinants(a: &[ExactInteger], up_to: usize) -> Vec<ExactInteger> {
    (0..=up_to)
        .map(|n| det_integer((0..=n).map(|i| a[i..=i + n].to_vec()).collect()))
        .collect()
}

pub fn hankel_closed_form(kind: HankelKind, n: usize) -> Option<ExactInteger> {
    let e = |v: usize| pow2(v as u32);
    match kind {
        HankelKind::Delta => Some(e(n * (n + 3) / 2)),
        HankelKind::DeltaBar => Some(e(n * (n + 3) / 2) * (e(n + 1) + 1)),
        HankelKind::Epsilon => Some(e(n * (n + 1) / 2)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSuite {
    pub kind: HankelKind,
    pub determinants: Vec<ExactInteger>,
    /// First `n` where the closed form disagrees; `None` also when no closed form exists.
    pub closed_form_witness: Option<usize>,
    pub has_closed_form: bool,
    /// `h_n(a) h_{n-2}(a'') = h_{n-1}(a) h_{n-1}(a'') - h_{n-1}(a')^2`, `a'` the
    /// shift and `a''` the double shift, for `2 <= n <= up_to`.
    pub desnanot_jacobi: bool,
}

impl HankelSuite {
    pub fn passed(&self) -> bool {
        self.closed_form_witness.is_none() && self.desnanot_jacobi
    }
}

pub fn hankel_suite(kind: HankelKind, up_to: usize) -> Result<HankelSuite> {
    let a = hankel_sequence(kind, 2 * up_to + 3)?;
    let h = hankel_determinants(&a, up_to);
    let h1 = hankel_determinants(&a[1..], up_to);
    let h2 = hankel_determinants(&a[2..], up_to);
    let desnanot_jacobi = (2..=up_to).all(|n| &h[n] * &h2[n - 2] == &h[n - 1] * &h2[n - 1] - &h1[n - 1] * &h1[n - 1]);
    let has_closed_form = hankel_closed_form(kind, 0).is_some();
    let closed_form_witness = (0..=up_to).find(|&n| hankel_closed_form(kind, n).is_some_and(|c| c != h[n]));
    Ok(HankelSuite {
        kind,
        determinants: h,
        closed_form_witness,
        has_closed_form,
        desnanot_jacobi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmVerdict {
    Consistent,
    NotSm,
}

/// A negative Hankel determinant `h_n` of the sequence (`shifted = false`)
/// or of its shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelWitness {
    pub n: usize,
    pub shifted: bool,
    pub value: ExactInteger,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmReport {
    pub kind: DiagonalKind,
    pub window: usize,
    pub verdict: SmVerdict,
    pub witness: Option<HankelWitness>,
}

/// `h_n(a) >= 0` and `h_n(a') >= 0` for `n <= window`.
pub fn check_sm(kind: DiagonalKind, window: usize) -> Result<SmReport> {
    if window < 2 {
        return Err(Error::InsufficientOrder { needed: 2, available: window });
    }
    let a = diagonal(kind, 2 * window + 1)?.values;
    let h = hankel_determinants(&a, window);
    let h1 = hankel_determinants(&a[1..], window);
    let witness = (0..=window).find_map(|n| {
        if h[n].is_negative() {
            Some(HankelWitness { n, shifted: false, value: h[n].clone() })
        } else if h1[n].is_negative() {
            Some(HankelWitness { n, shifted: true, value: h1[n].clone() })
        } else {
            None
        }
    });
    Ok(SmReport {
        kind,
        window,
        verdict: if witness.is_some() { SmVerdict::NotSm } else { SmVerdict::Consistent },
        witness,
    })
}

/// `det M det M[interior] = det M[NW] det M[SE] - det M[NE] det M[SW]`, where
/// the corner blocks drop one outer row and one outer column.
pub fn desnanot_jacobi_check(m: &ExactMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let k = m.rows();
    if k < 2 {
        return Err(Error::BadIndexSet);
    }
    let all: Vec<usize> = (0..k).collect();
    let head = &all[..k - 1];
    let tail = &all[1..];
    let inner = &all[1..k - 1];
    let det = |r: &[usize], c: &[usize]| -> Result<ExactRational> {
        if r.is_empty() {
            Ok(ri(1))
        } else {
            m.minor(r, c)
        }
    };
    let lhs = det(&all, &all)? * det(inner, inner)?;
    let rhs = det(head, head)? * det(tail, tail)? - det(head, tail)? * det(tail, head)?;
    Ok(lhs == rhs)
}

/// Checks, for `2 <= n <= up_to`, the Desnanot-Jacobi step
/// `h_n(e) h_{n-2}(d') = h_{n-1}(e) h_{n-1}(d') - h_{n-1}(d)^2`, the partial
/// fraction `h_{k-1}(d)^2 / (h_{k-2}(d') h_{k-1}(d')) = 2/(2^{k-1}+1) - 2/(2^k+1)`
/// and the telescoped value `h_n(e) / h_{n-1}(d') = 2/(2^n+1)`.
///
/// Returns the first failing `n`.
pub fn telescoping_check(up_to: usize) -> Result<Option<usize>> {
    let d = hankel_sequence(HankelKind::Delta, 2 * up_to + 3)?;
    let e = hankel_sequence(HankelKind::Epsilon, 2 * up_to + 3)?;
    let hd = hankel_determinants(&d, up_to);
    let hdb = hankel_determinants(&d[1..], up_to);
    let he = hankel_determinants(&e, up_to);

    let two = ri(2);
    let frac = |k: usize| &two / rational(&(pow2(k as u32) + 1));
    if up_to >= 1 && rational(&he[1]) / rational(&hdb[0]) != BigRational::new(BigInt::from(2), BigInt::from(3)) {
        return Ok(Some(1));
    }
    let mut telescoped = BigRational::new(BigInt::from(2), BigInt::from(3));
    for n in 2..=up_to {
        let step = &he[n] * &hdb[n - 2] == &he[n - 1] * &hdb[n - 1] - &hd[n - 1] * &hd[n - 1];
        let term = rational(&(&hd[n - 1] * &hd[n - 1])) / rational(&(&hdb[n - 2] * &hdb[n - 1]));
        let split = term == frac(n - 1) - frac(n);
        telescoped -= term;
        let closed = rational(&he[n]) / rational(&hdb[n - 1]);
        if !(step && split && telescoped == closed && closed == frac(n)) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
