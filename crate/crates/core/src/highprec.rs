//! Fixed-point approximate reals with a few hundred fractional bits.
//!
//! Only the trigonometric zero formula and the normal-approximation
//! statistics go through here; every certificate elsewhere is exact.
//! Values are `mantissa / 2^FRAC_BITS`, and each elementary operation rounds
//! towards negative infinity, so results carry an absolute error of a small
//! multiple of `2^-FRAC_BITS` for arguments of moderate size.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::ExactRational;

/// 384 fractional bits, a little over 115 decimal digits.
pub const FRAC_BITS: u32 = 384;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HighFloat {
    mantissa: BigInt,
}

impl HighFloat {
    pub fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self {
            mantissa: BigInt::from(v) << FRAC_BITS,
        }
    }

    /// Nearest-below fixed-point value of an exact rational.
    pub fn from_rational(v: &ExactRational) -> Self {
        let scaled = v.numer() << FRAC_BITS;
        Self {
            mantissa: scaled.div_floor(v.denom()),
        }
    }

    /// The exact dyadic rational this value represents.
    pub fn to_rational(&self) -> ExactRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << FRAC_BITS)
    }

    pub fn to_f64(&self) -> f64 {
        match self.mantissa.to_f64() {
            Some(m) if m.is_finite() => m * 2f64.powi(-(FRAC_BITS as i32)),
            // Huge magnitudes: drop to 60 fractional bits so the conversion stays finite.
            _ => {
                let shifted = &self.mantissa >> (FRAC_BITS - 60);
                shifted.to_f64().unwrap_or(f64::NAN) / (1u64 << 60) as f64
            }
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self {
            mantissa: &self.mantissa * k,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        Self {
            mantissa: self.mantissa.div_floor(&BigInt::from(k)),
        }
    }

    /// Square root; negative inputs are clamped to zero.
    pub fn sqrt(&self) -> Self {
        if !self.mantissa.is_positive() {
            return Self::zero();
        }
        Self {
            mantissa: (&self.mantissa << FRAC_BITS).sqrt(),
        }
    }

    /// `10^-digits` as a fixed-point value.
    pub fn ten_pow_neg(digits: u32) -> Self {
        Self::from_rational(&BigRational::new(BigInt::one(), BigInt::from(10).pow(digits)))
    }

    /// Rounded decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = self.to_rational() * BigRational::from_integer(BigInt::from(10).pow(digits));
        let int = scaled.round().to_integer();
        let s = int.abs().to_string();
        let d = digits as usize;
        let padded = if s.len() <= d {
            format!("{}{}", "0".repeat(d + 1 - s.len()), s)
        } else {
            s
        };
        let (head, tail) = padded.split_at(padded.len() - d);
        let sign = if int.is_negative() { "-" } else { "" };
        format!("{sign}{head}.{tail}")
    }
}

impl Add for &HighFloat {
    type Output = HighFloat;
    fn add(self, rhs: Self) -> HighFloat {
        HighFloat {
            mantissa: &self.mantissa + &rhs.mantissa,
        }
    }
}

impl Sub for &HighFloat {
    type Output = HighFloat;
    fn sub(self, rhs: Self) -> HighFloat {
        HighFloat {
            mantissa: &self.mantissa - &rhs.mantissa,
        }
    }
}

impl Mul for &HighFloat {
    type Output = HighFloat;
    fn mul(self, rhs: Self) -> HighFloat {
        HighFloat {
            mantissa: (&self.mantissa * &rhs.mantissa) >> FRAC_BITS,
        }
    }
}

impl Div for &HighFloat {
    type Output = HighFloat;
    fn div(self, rhs: Self) -> HighFloat {
        HighFloat {
            mantissa: (&self.mantissa << FRAC_BITS).div_floor(&rhs.mantissa),
        }
    }
}

impl Neg for &HighFloat {
    type Output = HighFloat;
    fn neg(self) -> HighFloat {
        HighFloat {
            mantissa: -&self.mantissa,
        }
    }
}

/// Threshold below which series terms are dropped.
fn negligible(term: &HighFloat) -> bool {
    term.mantissa.abs() <= BigInt::one()
}

/// `atan(1/k)` for integer `k >= 2` by its alternating Taylor series.
fn atan_inv(k: i64) -> HighFloat {
    let k2 = BigInt::from(k * k);
    let mut power = HighFloat::one().div_int(k);
    let mut acc = HighFloat::zero();
    let mut n = 0i64;
    loop {
        let term = power.div_int(2 * n + 1);
        if negligible(&term) {
            break;
        }
        acc = if n % 2 == 0 { &acc + &term } else { &acc - &term };
        power = HighFloat {
            mantissa: power.mantissa.div_floor(&k2),
        };
        n += 1;
    }
    acc
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi() -> HighFloat {
    &atan_inv(5).mul_int(16) - &atan_inv(239).mul_int(4)
}

/// Cosine by Taylor series; accurate for `|x|` up to a few units.
pub fn cos(x: &HighFloat) -> HighFloat {
    let x2 = x * x;
    let mut term = HighFloat::one();
    let mut acc = HighFloat::one();
    let mut k = 1i64;
    loop {
        term = (&(&term * &x2).div_int((2 * k - 1) * (2 * k))).neg();
        if negligible(&term) {
            break;
        }
        acc = &acc + &term;
        k += 1;
    }
    acc
}

/// Exponential by argument halving, Taylor series and repeated squaring.
pub fn exp(x: &HighFloat) -> HighFloat {
    if x.is_negative() {
        return &HighFloat::one() / &exp(&x.abs());
    }
    let mut halvings = 0u32;
    let mut y = x.clone();
    while y > HighFloat::from_rational(&BigRational::new(BigInt::one(), BigInt::from(16))) {
        y = y.div_int(2);
        halvings += 1;
    }
    let mut term = HighFloat::one();
    let mut acc = HighFloat::one();
    let mut k = 1i64;
    loop {
        term = (&term * &y).div_int(k);
        if negligible(&term) {
            break;
        }
        acc = &acc + &term;
        k += 1;
    }
    for _ in 0..halvings {
        acc = &acc * &acc;
    }
    acc
}

/// Standard normal density `exp(-x^2/2) / sqrt(2 pi)`.
pub fn normal_pdf(x: &HighFloat) -> HighFloat {
    let two_pi = pi().mul_int(2);
    &exp(&(&(x * x).div_int(2)).neg()) / &two_pi.sqrt()
}

/// Beyond this many standard deviations the tail mass is below `10^-32`.
const CDF_CUTOFF: i64 = 12;

/// Standard normal distribution function.
///
/// Uses `Phi(x) = 1/2 + phi(x) * sum_k x^(2k+1) / (2k+1)!!`, whose terms are
/// all of one sign, so nothing cancels. Arguments past `+-12` are clamped to
/// the limits `0` and `1`; the error there is below `10^-32`.
pub fn normal_cdf(x: &HighFloat) -> HighFloat {
    let cutoff = HighFloat::from_int(CDF_CUTOFF);
    if *x >= cutoff {
        return HighFloat::one();
    }
    if *x <= cutoff.neg() {
        return HighFloat::zero();
    }
    let x2 = x * x;
    let mut term = x.clone();
    let mut acc = x.clone();
    let mut k = 1i64;
    loop {
        term = (&term * &x2).div_int(2 * k + 1);
        if negligible(&term) {
            break;
        }
        acc = &acc + &term;
        k += 1;
    }
    &HighFloat::one().div_int(2) + &(&normal_pdf(x) * &acc)
}

impl PartialOrd<HighFloat> for &HighFloat {
    fn partial_cmp(&self, other: &HighFloat) -> Option<Ordering> {
        Some(self.mantissa.cmp(&other.mantissa))
    }
}

impl PartialEq<HighFloat> for &HighFloat {
    fn eq(&self, other: &HighFloat) -> bool {
        self.mantissa == other.mantissa
    }
}
