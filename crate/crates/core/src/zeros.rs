//! Row polynomials `l^(m)_n` and exact certificates about their zeros.
//!
//! Root counting uses Sturm sequences over the integers. With zero terms
//! skipped, `V(a) - V(b)` counts the distinct roots in the half-open interval
//! `(a, b]`, so rational endpoints that happen to be roots need no special
//! treatment.
//!
//! A root enclosure `[lo, hi]` is either a point (an exact rational root) or
//! an interval with `p(hi) != 0` whose open interior holds exactly one root.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::highprec::{self, HighFloat};
use crate::interval::RationalInterval;
use crate::poly::ExactPolynomial;
use crate::scalar::{ExactInteger, ExactRational};

/// Bisection budget per enclosure.
pub const MAX_HALVINGS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyKind {
    /// Delannoy polynomials `d_n`, `m = 1`.
    D,
    /// Coordination polynomials `c_n`, `m = 2`.
    C,
    /// `s_n`, `m = 0`.
    S,
    Ell(i64),
}

impl PolyKind {
    pub fn m(self) -> i64 {
        match self {
            Self::S => 0,
            Self::D => 1,
            Self::C => 2,
            Self::Ell(m) => m,
        }
    }
}

/// Cache of `l_0, l_1, ...` built by `l_n = (x+1) l_{n-1} + x l_{n-2}`,
/// `l_0 = 1`, `l_1 = x + m`.
#[derive(Clone, Debug)]
pub struct PolyFamily {
    kind: PolyKind,
    cache: Vec<ExactPolynomial>,
}

impl PolyFamily {
    pub fn new(kind: PolyKind) -> Self {
        Self {
            kind,
            cache: vec![
                ExactPolynomial::one(),
                ExactPolynomial::from_ints(&[kind.m(), 1]),
            ],
        }
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn get(&mut self, n: usize) -> &ExactPolynomial {
        let x_plus_one = ExactPolynomial::from_ints(&[1, 1]);
        let x = ExactPolynomial::x();
        while self.cache.len() <= n {
            let k = self.cache.len();
            let next = &(&x_plus_one * &self.cache[k - 1]) + &(&x * &self.cache[k - 2]);
            self.cache.push(next);
        }
        &self.cache[n]
    }
}

pub fn family_poly(kind: PolyKind, n: usize) -> ExactPolynomial {
    PolyFamily::new(kind).get(n).clone()
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers. Coefficients lowest degree first, no trailing zeros.

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Divides out the positive content.
fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in p.iter_mut() {
            *c /= &content;
        }
    }
    p
}

/// A positive multiple of the remainder of `a` by `b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    let abs_lb = lb.abs();
    let positive = lb.is_positive();
    while r.len() > db && !r.is_empty() {
        let lead = r[r.len() - 1].clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &abs_lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lead * bc;
            if positive {
                r[shift + i] -= t;
            } else {
                r[shift + i] += t;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Degree of `gcd(a, b)` via a primitive pseudo-remainder sequence.
fn gcd_degree(a: &[BigInt], b: &[BigInt]) -> usize {
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a.len().saturating_sub(1);
    }
    loop {
        let r = primitive(pseudo_rem(&a, &b));
        if r.is_empty() {
            return b.len() - 1;
        }
        a = b;
        b = r;
    }
}

fn integer_coeffs(p: &ExactPolynomial) -> Vec<BigInt> {
    p.primitive_integer()
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Sign of `p(x)` via homogeneous Horner on `x = num/den`, `den > 0`.
fn sign_at(p: &[BigInt], x: &ExactRational) -> i8 {
    if p.is_empty() {
        return 0;
    }
    let (num, den) = (x.numer(), x.denom());
    let mut acc = p[p.len() - 1].clone();
    let mut den_pow = BigInt::one();
    for c in p.iter().rev().skip(1) {
        den_pow *= den;
        acc = acc * num + c * &den_pow;
    }
    crate::scalar::sign_of(&acc)
}

fn sign_at_infinity(p: &[BigInt], positive: bool) -> i8 {
    let lead = crate::scalar::sign_of(&p[p.len() - 1]);
    if positive || (p.len() - 1).is_multiple_of(2) {
        lead
    } else {
        -lead
    }
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Power of two strictly above every root's absolute value (Cauchy bound).
fn root_bound(p: &[BigInt]) -> ExactRational {
    let lead = p[p.len() - 1].abs();
    let max = p[..p.len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    let ratio = max.div_ceil(&lead) + 1u32;
    let mut b = BigInt::one();
    while b <= ratio {
        b <<= 1;
    }
    BigRational::from_integer(b)
}

// ---------------------------------------------------------------------------

/// Sturm sequence `p, p', -rem(p, p'), ...` with each term made primitive.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &ExactPolynomial) -> Result<Self> {
        match p.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        let p0 = integer_coeffs(p);
        let p1 = primitive(derivative(&p0));
        let mut seq = vec![p0, p1];
        loop {
            let n = seq.len();
            let r = pseudo_rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            let next: Vec<BigInt> = primitive(r).into_iter().map(|c| -c).collect();
            seq.push(next);
        }
        Ok(Self { seq })
    }

    /// The polynomial itself, as primitive integer coefficients.
    pub fn polynomial(&self) -> &[BigInt] {
        &self.seq[0]
    }

    /// True when the sequence ends in a nonzero constant, i.e. `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.seq.last().is_some_and(|t| t.len() == 1)
    }

    pub fn sign_changes_at(&self, x: &ExactRational) -> usize {
        count_changes(self.seq.iter().map(|t| sign_at(t, x)))
    }

    pub fn sign_changes_at_infinity(&self, positive: bool) -> usize {
        count_changes(self.seq.iter().map(|t| sign_at_infinity(t, positive)))
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &ExactRational, hi: &ExactRational) -> usize {
        self.sign_changes_at(lo)
            .saturating_sub(self.sign_changes_at(hi))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.sign_changes_at_infinity(false)
            .saturating_sub(self.sign_changes_at_infinity(true))
    }

    /// Sign of the polynomial on the closed enclosure, if it is constant
    /// and nonzero there.
    pub fn constant_sign_on(&self, enc: &RationalInterval) -> Option<i8> {
        let p = self.polynomial();
        let s_hi = sign_at(p, enc.hi());
        if s_hi == 0 {
            return None;
        }
        if enc.is_point() {
            return Some(s_hi);
        }
        let s_lo = sign_at(p, enc.lo());
        (s_lo == s_hi && self.count(enc.lo(), enc.hi()) == 0).then_some(s_hi)
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_root_count(p: &ExactPolynomial, interval: &RationalInterval) -> Result<usize> {
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let sturm = SturmSequence::new(p)?;
    if !sturm.is_squarefree() {
        return Err(Error::NonSquarefree);
    }
    Ok(sturm.count(interval.lo(), interval.hi()))
}

/// Disjoint sorted enclosures, one per distinct real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    pub polynomial: ExactPolynomial,
    pub enclosures: Vec<RationalInterval>,
}

/// One bisection of an enclosure of a root of `p` (integer coefficients).
fn refine_step(p: &[BigInt], enc: &RationalInterval) -> RationalInterval {
    if enc.is_point() {
        return enc.clone();
    }
    let mid = enc.midpoint();
    let s_mid = sign_at(p, &mid);
    if s_mid == 0 {
        return RationalInterval::point(mid);
    }
    if s_mid != sign_at(p, enc.hi()) {
        RationalInterval::new(mid, enc.hi().clone()).expect("ordered")
    } else {
        RationalInterval::new(enc.lo().clone(), mid).expect("ordered")
    }
}

/// Halves `enc` until `done` holds, at most [`MAX_HALVINGS`] times.
pub fn refine_until(
    p: &[BigInt],
    mut enc: RationalInterval,
    mut done: impl FnMut(&RationalInterval) -> bool,
) -> Result<RationalInterval> {
    for _ in 0..=MAX_HALVINGS {
        if done(&enc) {
            return Ok(enc);
        }
        if enc.is_point() {
            break;
        }
        enc = refine_step(p, &enc);
    }
    if done(&enc) {
        Ok(enc)
    } else {
        Err(Error::RefinementExhausted(MAX_HALVINGS))
    }
}

fn isolate_with(
    sturm: &SturmSequence,
    precision: &ExactRational,
) -> Result<Vec<RationalInterval>> {
    let p = sturm.polynomial();
    let b = root_bound(p);
    let lo = -b.clone();
    let total = sturm.count(&lo, &b);
    let mut stack = vec![(lo, b, total, 0usize)];
    let mut found = Vec::new();
    while let Some((lo, hi, count, depth)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                let enc = if sign_at(p, &hi) == 0 {
                    RationalInterval::point(hi)
                } else {
                    RationalInterval::new(lo, hi).expect("ordered")
                };
                found.push(enc);
            }
            _ => {
                if depth > 4 * MAX_HALVINGS {
                    return Err(Error::RefinementExhausted(depth));
                }
                let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
                let left = sturm.count(&lo, &mid);
                stack.push((mid.clone(), hi, count - left, depth + 1));
                stack.push((lo, mid, left, depth + 1));
            }
        }
    }
    found.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut out: Vec<RationalInterval> = found
        .into_iter()
        .map(|e| refine_until(p, e, |e| &e.width() <= precision))
        .collect::<Result<_>>()?;
    // Adjacent enclosures may share an endpoint; shrink until they are apart.
    for i in 1..out.len() {
        let mut guard = 0;
        while !out[i - 1].disjoint_from(&out[i]) {
            guard += 1;
            if guard > MAX_HALVINGS {
                return Err(Error::RefinementExhausted(guard));
            }
            if out[i - 1].width() >= out[i].width() {
                out[i - 1] = refine_step(p, &out[i - 1]);
            } else {
                out[i] = refine_step(p, &out[i]);
            }
        }
    }
    Ok(out)
}

/// Isolates every distinct real root of `p` to enclosures of width at most
/// `precision`.
pub fn isolate_roots(p: &ExactPolynomial, precision: &ExactRational) -> Result<RootIsolation> {
    let sturm = SturmSequence::new(p)?;
    let sturm = if sturm.is_squarefree() {
        sturm
    } else {
        SturmSequence::new(&p.squarefree_part())?
    };
    Ok(RootIsolation {
        polynomial: p.clone(),
        enclosures: isolate_with(&sturm, precision)?,
    })
}

/// `x^2 + 6x + 1`, negative exactly on `(-3 - 2 sqrt 2, -3 + 2 sqrt 2)`.
pub fn boundary_polynomial() -> ExactPolynomial {
    ExactPolynomial::from_ints(&[1, 6, 1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootCertificate {
    pub kind: PolyKind,
    pub n: usize,
    pub degree: usize,
    pub real_roots: usize,
    pub simple: bool,
    /// Every root satisfies `r^2 + 6r + 1 < 0`.
    pub inside: bool,
    pub enclosures: Vec<RationalInterval>,
}

impl RealRootCertificate {
    pub fn passed(&self) -> bool {
        self.simple && self.real_roots == self.degree && self.inside
    }
}

/// Certifies that `l_n` has `n` simple real roots, all strictly between
/// `-3 - 2 sqrt 2` and `-3 + 2 sqrt 2`.
pub fn check_real_rooted_and_interval(kind: PolyKind, n: usize) -> Result<RealRootCertificate> {
    let p = family_poly(kind, n);
    certify_polynomial(kind, n, &p)
}

fn certify_polynomial(kind: PolyKind, n: usize, p: &ExactPolynomial) -> Result<RealRootCertificate> {
    let degree = p.degree().unwrap_or(0);
    let sturm = SturmSequence::new(p)?;
    if !sturm.is_squarefree() {
        return Err(Error::NonSquarefree);
    }
    let boundary = boundary_polynomial();
    if gcd_degree(sturm.polynomial(), &integer_coeffs(&boundary)) > 0 {
        return Err(Error::SharedRootWithBoundary);
    }
    let boundary_sturm = SturmSequence::new(&boundary)?;
    let coarse = isolate_with(&sturm, &BigRational::one())?;
    let mut inside = true;
    let mut enclosures = Vec::with_capacity(coarse.len());
    for enc in coarse {
        let enc = refine_until(sturm.polynomial(), enc, |e| {
            boundary_sturm.constant_sign_on(e).is_some()
        })?;
        inside &= boundary_sturm.constant_sign_on(&enc) == Some(-1);
        enclosures.push(enc);
    }
    Ok(RealRootCertificate {
        kind,
        n,
        degree,
        real_roots: enclosures.len(),
        simple: true,
        inside,
        enclosures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlaceVerdict {
    /// `deg q = deg p + 1` and the roots strictly alternate, starting and
    /// ending with a root of `q`.
    Interlaces,
    /// `deg q = deg p` and `p` alternates left of `q`.
    AlternatesLeft,
    Neither,
}

fn positive_lead(p: &ExactPolynomial) -> ExactPolynomial {
    match p.leading() {
        Some(l) if l.is_negative() => -p,
        _ => p.clone(),
    }
}

/// Decides `p < q` with the sign criterion `sgn q(r_i(p)) = (-1)^i`, where
/// `r_1 > r_2 > ...` are the roots of `p`.
///
/// Each root enclosure of `p` is refined until `q` has constant sign on it.
/// The criterion also forces `q` to be real-rooted, so only `p` is isolated.
pub fn check_interlacing(p: &ExactPolynomial, q: &ExactPolynomial) -> Result<InterlaceVerdict> {
    let (dp, dq) = (p.degree(), q.degree());
    let verdict = match (dp, dq) {
        (Some(a), Some(b)) if b == a + 1 => InterlaceVerdict::Interlaces,
        (Some(a), Some(b)) if a == b && a > 0 => InterlaceVerdict::AlternatesLeft,
        _ => return Err(Error::DegreeMismatch { left: dp, right: dq }),
    };
    let (p, q) = (positive_lead(p), positive_lead(q));
    if dp == Some(0) {
        // A positive constant against a linear polynomial.
        return Ok(verdict);
    }
    let pi = integer_coeffs(&p);
    let qi = integer_coeffs(&q);
    if gcd_degree(&pi, &qi) > 0 {
        return Err(Error::CommonRoot);
    }
    let sturm_p = SturmSequence::new(&p)?;
    if !sturm_p.is_squarefree() || sturm_p.count_real() != dp.unwrap_or(0) {
        return Ok(InterlaceVerdict::Neither);
    }
    let sturm_q = SturmSequence::new(&q.squarefree_part())?;
    let roots = isolate_with(&sturm_p, &BigRational::one())?;
    for (i, enc) in roots.into_iter().rev().enumerate() {
        let enc = refine_until(&pi, enc, |e| sturm_q.constant_sign_on(e).is_some())?;
        let expect = if i % 2 == 0 { -1 } else { 1 };
        if sturm_q.constant_sign_on(&enc) != Some(expect) {
            return Ok(InterlaceVerdict::Neither);
        }
    }
    Ok(verdict)
}

// ---------------------------------------------------------------------------
// Approximate cross-checks.

/// Enclosure width used when checking the trigonometric zero formula.
pub fn delannoy_check_width() -> ExactRational {
    BigRational::new(BigInt::one(), BigInt::one() << 60u32)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DelannoyZeroEntry {
    pub k: usize,
    /// The formula value, rounded for display.
    pub value: f64,
    /// First digits of the formula value.
    pub digits: String,
    pub inside_enclosure: bool,
    /// `|d_n(r)|` rounded for display.
    pub residual: f64,
    pub residual_ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DelannoyZeroReport {
    pub n: usize,
    pub entries: Vec<DelannoyZeroEntry>,
}

impl DelannoyZeroReport {
    pub fn passed(&self) -> bool {
        self.entries.len() == self.n
            && self.entries.iter().all(|e| e.inside_enclosure && e.residual_ok)
    }
}

fn eval_high(p: &ExactPolynomial, x: &HighFloat) -> HighFloat {
    p.coeffs().iter().rev().fold(HighFloat::zero(), |acc, c| {
        &(&acc * x) + &HighFloat::from_rational(c)
    })
}

/// `r_{n,k} = -(sqrt(1 + cos^2(k pi/(n+1))) - cos(k pi/(n+1)))^2` against the
/// certified enclosures of the roots of `d_n`.
///
/// `tolerance` bounds `|d_n(r)|` relative to the leading coefficient.
pub fn verify_delannoy_zero_formula(n: usize, tolerance: &ExactRational) -> Result<DelannoyZeroReport> {
    let p = family_poly(PolyKind::D, n);
    let iso = isolate_roots(&p, &delannoy_check_width())?;
    let lead = p.leading().cloned().unwrap_or_else(BigRational::one);
    let bound = HighFloat::from_rational(&(tolerance * lead.abs()));
    let slack = BigRational::new(BigInt::one(), BigInt::from(10).pow(100));
    let pi = highprec::pi();
    let mut entries = Vec::with_capacity(n);
    for k in 1..=n {
        let angle = pi.mul_int(k as i64).div_int(n as i64 + 1);
        let c = highprec::cos(&angle);
        let s = (&HighFloat::one() + &(&c * &c)).sqrt();
        let d = &s - &c;
        let sq = &d * &d;
        let r = -&sq;
        let residual = eval_high(&p, &r).abs();
        // k-th largest root sits at position n - k of the ascending list.
        let inside = iso.enclosures.get(n - k).is_some_and(|enc| {
            let x = r.to_rational();
            enc.lo() - &slack <= x && x <= enc.hi() + &slack
        });
        entries.push(DelannoyZeroEntry {
            k,
            value: r.to_f64(),
            digits: r.to_decimal(50),
            inside_enclosure: inside,
            residual: residual.to_f64(),
            residual_ok: residual < bound,
        });
    }
    Ok(DelannoyZeroReport { n, entries })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDensityReport {
    pub n_max: usize,
    pub pooled: usize,
    pub min_root: f64,
    pub max_root: f64,
    /// Largest gap between consecutive pooled roots, counting the gaps to the
    /// interval endpoints.
    pub max_gap: f64,
    /// Every pooled root certified strictly inside the interval.
    pub all_inside: bool,
    pub gap_within_tolerance: bool,
}

/// Pools the certified roots of `c_1 ..= c_N` and measures how evenly they
/// fill `[-3 - 2 sqrt 2, -3 + 2 sqrt 2]`. Floats appear only in the report.
pub fn empirical_zero_density(n_max: usize, gap_tolerance: f64) -> Result<ZeroDensityReport> {
    let mut mids: Vec<f64> = Vec::new();
    let mut all_inside = true;
    let width = BigRational::new(BigInt::one(), BigInt::one() << 40u32);
    for n in 1..=n_max {
        let cert = check_real_rooted_and_interval(PolyKind::C, n)?;
        all_inside &= cert.passed();
        let p = family_poly(PolyKind::C, n);
        let pi = integer_coeffs(&p);
        for enc in cert.enclosures {
            let enc = refine_until(&pi, enc, |e| e.width() <= width)?;
            mids.push(HighFloat::from_rational(&enc.midpoint()).to_f64());
        }
    }
    mids.sort_by(f64::total_cmp);
    let sqrt2 = core::f64::consts::SQRT_2;
    let (left, right) = (-3.0 - 2.0 * sqrt2, -3.0 + 2.0 * sqrt2);
    let mut max_gap: f64 = 0.0;
    let mut prev = left;
    for &m in mids.iter().chain(core::iter::once(&right)) {
        max_gap = max_gap.max(m - prev);
        prev = m;
    }
    Ok(ZeroDensityReport {
        n_max,
        pooled: mids.len(),
        min_root: mids.first().copied().unwrap_or(f64::NAN),
        max_root: mids.last().copied().unwrap_or(f64::NAN),
        max_gap,
        all_inside,
        gap_within_tolerance: max_gap <= gap_tolerance,
    })
}

/// Smallest real root of `l^(m)_n`, to within `2^-30`; `None` if there is none.
pub fn smallest_root(kind: PolyKind, n: usize) -> Result<Option<f64>> {
    let p = family_poly(kind, n);
    if p.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let width = BigRational::new(BigInt::one(), BigInt::one() << 30u32);
    let iso = isolate_roots(&p, &width)?;
    Ok(iso
        .enclosures
        .first()
        .map(|e| HighFloat::from_rational(&e.midpoint()).to_f64()))
}

/// Coefficients of the integer polynomial, for callers outside this module.
pub fn primitive_coefficients(p: &ExactPolynomial) -> Vec<ExactInteger> {
    integer_coeffs(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riordan::RiordanArray;
    use crate::scalar::{rat, rat_int};
    use proptest::prelude::*;

    fn interval(lo: i64, hi: i64) -> RationalInterval {
        RationalInterval::new(rat_int(lo), rat_int(hi)).unwrap()
    }

    #[test]
    fn family_members() {
        assert_eq!(family_poly(PolyKind::C, 2), ExactPolynomial::from_ints(&[2, 4, 1]));
        assert_eq!(family_poly(PolyKind::D, 0), ExactPolynomial::one());
        assert_eq!(family_poly(PolyKind::D, 1), ExactPolynomial::from_ints(&[1, 1]));
        let w = RiordanArray::coordination_triangle_c(5).square_window(6).unwrap();
        let row: Vec<ExactRational> = (0..=5).map(|k| w.get(5, k).clone()).collect();
        assert_eq!(family_poly(PolyKind::C, 5), ExactPolynomial::new(row));
    }

    #[test]
    fn family_identities() {
        let mut c = PolyFamily::new(PolyKind::C);
        let mut d = PolyFamily::new(PolyKind::D);
        let mut s = PolyFamily::new(PolyKind::S);
        let x = ExactPolynomial::x();
        let xp1 = ExactPolynomial::from_ints(&[1, 1]);
        for n in 2..=60 {
            for fam in [&mut c, &mut d, &mut s] {
                let lhs = fam.get(n).clone();
                let rhs = &(&xp1 * fam.get(n - 1)) + &(&x * fam.get(n - 2));
                assert_eq!(lhs, rhs);
            }
        }
        for n in 1..=60 {
            let (cn, dn, dm, sn, cm) = (
                c.get(n).clone(),
                d.get(n).clone(),
                d.get(n - 1).clone(),
                s.get(n).clone(),
                c.get(n - 1).clone(),
            );
            assert_eq!(cn, &dn + &dm);
            assert_eq!(sn, &dn - &dm);
            assert_eq!(sn, &x * &cm);
            let two_dm = dm.scale(&rat_int(2));
            assert_eq!(cn, &(&x * &cm) + &two_dm);
            assert_eq!(dn, &(&x * &cm) + &dm);
        }
    }

    #[test]
    fn sqrt_two_convergents() {
        let mut c = PolyFamily::new(PolyKind::C);
        let mut d = PolyFamily::new(PolyKind::D);
        for n in 0..=40 {
            let cv = c.get(n).value_at_one();
            let dv = d.get(n).value_at_one();
            let pell = &cv * &cv - &dv * &dv * rat_int(2);
            let expect = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(pell, rat_int(expect), "n = {n}");
        }
    }

    #[test]
    fn sturm_counts() {
        let c2 = ExactPolynomial::from_ints(&[2, 4, 1]);
        assert_eq!(sturm_root_count(&c2, &interval(-10, 0)).unwrap(), 2);
        let x2p1 = ExactPolynomial::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_root_count(&x2p1, &interval(-10, 10)).unwrap(), 0);
        let d2 = ExactPolynomial::from_ints(&[1, 3, 1]);
        assert_eq!(sturm_root_count(&d2, &interval(-1, 0)).unwrap(), 1);
        // Half-open convention: a root at the right end counts, at the left does not.
        let lin = ExactPolynomial::from_ints(&[1, 1]);
        assert_eq!(sturm_root_count(&lin, &interval(-2, -1)).unwrap(), 1);
        assert_eq!(sturm_root_count(&lin, &interval(-1, 0)).unwrap(), 0);
        let sq = &lin * &lin;
        assert_eq!(sturm_root_count(&sq, &interval(-2, 0)), Err(Error::NonSquarefree));
    }

    #[test]
    fn isolation_examples() {
        let tiny = rat(1, 1 << 20);
        let lin = isolate_roots(&ExactPolynomial::from_ints(&[1, 1]), &tiny).unwrap();
        assert_eq!(lin.enclosures.len(), 1);
        assert!(lin.enclosures[0].contains(&rat_int(-1)));

        let c3 = ExactPolynomial::from_ints(&[2, 8, 6, 1]);
        let iso = isolate_roots(&c3, &tiny).unwrap();
        assert_eq!(iso.enclosures.len(), 3);
        assert!(iso.enclosures.iter().all(|e| e.hi() < &rat_int(0)));
        assert_eq!(
            sturm_root_count(&c3, &RationalInterval::new(rat_int(-1000), rat_int(0)).unwrap()).unwrap(),
            3
        );

        let width = BigRational::new(BigInt::one(), BigInt::one() << 40u32);
        let d2 = isolate_roots(&ExactPolynomial::from_ints(&[1, 3, 1]), &width).unwrap();
        let five = 5f64.sqrt();
        let expect = [(-3.0 - five) / 2.0, (-3.0 + five) / 2.0];
        for (enc, e) in d2.enclosures.iter().zip(expect) {
            assert!(enc.width() <= width);
            let mid = HighFloat::from_rational(&enc.midpoint()).to_f64();
            assert!((mid - e).abs() < 1e-12);
        }
    }

    #[test]
    fn isolation_separates_touching_enclosures() {
        // Roots at 0 and 1/2 land on bisection points.
        let p = &ExactPolynomial::x() * &ExactPolynomial::new(vec![rat(-1, 2), rat_int(1)]);
        let iso = isolate_roots(&p, &rat_int(4)).unwrap();
        assert_eq!(iso.enclosures.len(), 2);
        assert!(iso.enclosures[0].disjoint_from(&iso.enclosures[1]));
        assert!(iso.enclosures[0].contains(&rat_int(0)));
        assert!(iso.enclosures[1].contains(&rat(1, 2)));
    }

    #[test]
    fn certificates() {
        let c2 = check_real_rooted_and_interval(PolyKind::C, 2).unwrap();
        assert!(c2.passed());
        // Oracle in Q(sqrt 2): (-2 + e sqrt2)^2 + 6(-2 + e sqrt2) + 1 = -5 + 2 e sqrt 2,
        // negative for e = +-1 because 8 < 25.
        let d1 = check_real_rooted_and_interval(PolyKind::D, 1).unwrap();
        assert!(d1.passed());
        assert!(d1.enclosures[0].contains(&rat_int(-1)));
        assert_eq!(rat_int(1) - rat_int(6) + rat_int(1), rat_int(-4));
        for n in 1..=20 {
            assert!(check_real_rooted_and_interval(PolyKind::C, n).unwrap().passed());
            assert!(check_real_rooted_and_interval(PolyKind::D, n).unwrap().passed());
        }
        // s_n has the root 0, which is outside.
        let s3 = check_real_rooted_and_interval(PolyKind::S, 3).unwrap();
        assert!(!s3.inside);
        // A polynomial vanishing on the boundary is rejected outright.
        let bad = &boundary_polynomial() * &ExactPolynomial::from_ints(&[1, 1]);
        assert_eq!(
            certify_polynomial(PolyKind::Ell(0), 0, &bad),
            Err(Error::SharedRootWithBoundary)
        );
    }

    #[test]
    fn interlacing() {
        let c1 = family_poly(PolyKind::C, 1);
        let c2 = family_poly(PolyKind::C, 2);
        assert_eq!(c2.eval(&rat_int(-2)), rat_int(-2));
        assert_eq!(check_interlacing(&c1, &c2).unwrap(), InterlaceVerdict::Interlaces);
        for n in 1..=30 {
            let dn = family_poly(PolyKind::D, n);
            let dm = family_poly(PolyKind::D, n - 1);
            let cn = family_poly(PolyKind::C, n);
            assert_eq!(check_interlacing(&dm, &dn).unwrap(), InterlaceVerdict::Interlaces);
            assert_eq!(check_interlacing(&cn, &dn).unwrap(), InterlaceVerdict::AlternatesLeft);
            assert_eq!(check_interlacing(&dm, &cn).unwrap(), InterlaceVerdict::Interlaces);
        }
        // Reversed roles fail the criterion.
        let d3 = family_poly(PolyKind::D, 3);
        let c3 = family_poly(PolyKind::C, 3);
        assert_eq!(check_interlacing(&d3, &c3).unwrap(), InterlaceVerdict::Neither);
        assert_eq!(
            check_interlacing(&c1, &family_poly(PolyKind::C, 3)),
            Err(Error::DegreeMismatch { left: Some(1), right: Some(3) })
        );
        let shared = &c1 * &ExactPolynomial::from_ints(&[5, 1]);
        assert_eq!(check_interlacing(&c1, &shared), Err(Error::CommonRoot));
    }

    #[test]
    fn delannoy_zero_formula() {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(30));
        let r1 = verify_delannoy_zero_formula(1, &tol).unwrap();
        assert!(r1.passed());
        assert!((r1.entries[0].value + 1.0).abs() < 1e-15);
        let r2 = verify_delannoy_zero_formula(2, &tol).unwrap();
        assert!(r2.passed());
        assert!((r2.entries[0].value - (-3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(r2.entries[0].digits.starts_with("-0.38196601125010515179541316563436188227969"));
        assert!(verify_delannoy_zero_formula(20, &tol).unwrap().passed());
    }

    #[test]
    fn zero_density() {
        let small = empirical_zero_density(2, 10.0).unwrap();
        assert_eq!(small.pooled, 3);
        assert!(small.max_gap.is_finite());
        let a = empirical_zero_density(5, 1.0).unwrap();
        let b = empirical_zero_density(25, 1.0).unwrap();
        assert!(b.max_gap < a.max_gap);
        let left = -3.0 - 2.0 * core::f64::consts::SQRT_2;
        assert!(a.all_inside && b.all_inside);
        assert!(b.min_root > left);
    }

    /// Products of distinct rational linear factors and positive-definite
    /// quadratics; the real roots are known exactly.
    fn known_factorisation() -> impl Strategy<Value = (ExactPolynomial, Vec<ExactRational>)> {
        (
            proptest::sample::subsequence((-12i64..=12).collect::<Vec<_>>(), 1..=5),
            1i64..=3,
            proptest::collection::vec(1i64..=9, 0..=1),
        )
            .prop_map(|(nums, den, quads)| {
                let roots: Vec<ExactRational> = nums.iter().map(|&a| rat(a, den)).collect();
                let mut p = ExactPolynomial::one();
                for r in &roots {
                    p = &p * &ExactPolynomial::new(vec![-r.clone(), rat_int(1)]);
                }
                for c in quads {
                    p = &p * &ExactPolynomial::from_ints(&[c, 1, 1]);
                }
                (p, roots)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sturm_matches_known_roots((p, roots) in known_factorisation(), lo in -15i64..=0, span in 1i64..=15) {
            let iv = RationalInterval::new(rat(2 * lo - 1, 2), rat(2 * (lo + span) + 1, 2)).unwrap();
            let expect = roots.iter().filter(|r| iv.lo() < *r && *r <= iv.hi()).count();
            prop_assert_eq!(sturm_root_count(&p, &iv).unwrap(), expect);
            let iso = isolate_roots(&p, &rat(1, 1024)).unwrap();
            prop_assert_eq!(iso.enclosures.len(), roots.len());
            let mut sorted = roots.clone();
            sorted.sort();
            for (enc, r) in iso.enclosures.iter().zip(&sorted) {
                prop_assert!(enc.contains(r));
            }
        }
    }
}
