//! Scalar types and the handful of integer helpers every other module leans on.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

pub fn int(v: i64) -> ExactInteger {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `binomial(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInteger {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binomial(n, k)` over all integers `n`, `k`, using the convention that
/// vanishes for `k < 0` and extends to negative `n` by
/// `binomial(n, k) = (-1)^k binomial(k - n - 1, k)`.
pub fn binomial_int(n: i64, k: i64) -> ExactInteger {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial(n as u64, k as u64);
    }
    let b = binomial((k - n - 1) as u64, k as u64);
    if k % 2 == 0 {
        b
    } else {
        -b
    }
}

/// `binomial(n - 1, k - 1)` with the Kronecker convention at `n = 0`
/// (the entry is `1` exactly when `k = 0`). This is the entry rule of the
/// lower factor `[binomial(n-1, k-1)]` of `S`.
pub fn binomial_shifted(n: u64, k: u64) -> ExactInteger {
    match (n, k) {
        (0, 0) => BigInt::one(),
        (0, _) | (_, 0) => BigInt::zero(),
        _ => binomial(n - 1, k - 1),
    }
}

/// Generalised binomial `a (a-1) ... (a-k+1) / k!` for rational `a`.
pub fn binomial_rational(a: &ExactRational, k: usize) -> ExactRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= a - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

pub fn pow2(e: u32) -> ExactInteger {
    BigInt::one() << e
}

/// Sign as `-1`, `0`, `1`.
pub fn sign_of<T: Signed>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Integer value of a rational, if its denominator is one.
pub fn as_integer(v: &ExactRational) -> Option<ExactInteger> {
    v.is_integer().then(|| v.to_integer())
}

/// Converts a vector of rationals to integers, failing if any entry is fractional.
pub fn as_integers(vs: &[ExactRational]) -> Option<Vec<ExactInteger>> {
    vs.iter().map(as_integer).collect()
}

pub fn lcm_of_denominators(vs: &[ExactRational]) -> ExactInteger {
    use num_integer::Integer;
    vs.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
