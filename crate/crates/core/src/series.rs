//! Truncated formal power series with exact rational coefficients.
//!
//! A series carries the coefficients of `x^0 ..= x^order`; everything above
//! `order` is unknown. Binary operations return the smallest order both
//! operands can vouch for, so precision is never silently inflated.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{as_integers, ExactInteger, ExactRational};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Builds a series from its known coefficients; `order = coeffs.len() - 1`.
    ///
    /// An empty coefficient list is read as the zero series of order 0.
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Self { coeffs }
    }

    /// A finite polynomial viewed as an exact series known up to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut out = vec![BigRational::zero(); order + 1];
        for (slot, c) in out.iter_mut().zip(coeffs) {
            *slot = BigRational::from_integer(BigInt::from(*c));
        }
        Self { coeffs: out }
    }

    pub fn from_rationals(coeffs: &[ExactRational], order: usize) -> Self {
        let mut out = vec![BigRational::zero(); order + 1];
        for (slot, c) in out.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        Self { coeffs: out }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_ints(&[], order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_ints(&[1], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    /// Expansion of the rational function `num(x) / den(x)` with integer
    /// polynomial numerator and denominator.
    pub fn rational(num: &[i64], den: &[i64], order: usize) -> Result<Self> {
        Self::from_ints(num, order).div(&Self::from_ints(den, order))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`, or `None` beyond the trusted order.
    pub fn coeff(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<ExactInteger>> {
        as_integers(&self.coeffs)
    }

    /// Keeps only `x^0 ..= x^order`. Asking for more than is known is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder {
                needed: order,
                available: self.order(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn truncated_to(&self, order: usize) -> &[ExactRational] {
        &self.coeffs[..=order.min(self.order())]
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated to `min(order(self), order(other))`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// `q` with `q * other = self` to the common order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(other.order());
        let inv = b0.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &other.coeffs[k];
                if !b.is_zero() {
                    acc -= b * &q[n - k];
                }
            }
            q.push(acc * &inv);
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `self(inner(x))`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionNonNilpotent);
        }
        let order = self.order().min(inner.order());
        let inner = Self {
            coeffs: inner.truncated_to(order).to_vec(),
        };
        let outer = self.truncated_to(order);
        // Horner in the inner series.
        let mut acc = Self::zero(order);
        for c in outer.iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `self(g(x)) = g(self(x)) = x`.
    ///
    /// Uses Lagrange inversion: `[x^n] g = (1/n) [x^(n-1)] (x / self)^n`.
    pub fn reversion(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotReversible);
        }
        // self / x, known to order - 1; its reciprocal is x / self.
        let quotient = self.div_x()?;
        let h = quotient.recip()?;
        let mut out = vec![BigRational::zero(); order + 1];
        let mut power = Self::one(order - 1);
        for n in 1..=order {
            power = power.mul(&h);
            out[n] = &power.coeffs[n - 1] / BigRational::from_integer(BigInt::from(n));
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtUnsupportedConstantTerm);
        }
        let order = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
        s.push(BigRational::one());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s.push(acc * &half);
        }
        Ok(Self { coeffs: s })
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * BigRational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    /// Multiplication by `x`; the product is known one order further.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Division by `x`; requires a vanishing constant term and loses one order.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        if self.order() == 0 {
            return Err(Error::InsufficientOrder {
                needed: 1,
                available: 0,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Agreement with `other` on every coefficient both know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})x^{i}")?;
        }
        write!(f, " + O(x^{})", self.coeffs.len())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn mul_examples() {
        let geo = TruncatedSeries::from_ints(&[1; 8], 7);
        let one_plus_x = TruncatedSeries::from_ints(&[1, 1], 7);
        assert_eq!(ints(&one_plus_x.mul(&geo)), [1, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(one_plus_x.mul(&TruncatedSeries::one(7)), one_plus_x);
        let sq = TruncatedSeries::from_ints(&[1, 1], 4).pow(2);
        assert_eq!(ints(&sq), [1, 2, 1, 0, 0]);
    }

    #[test]
    fn mul_reports_min_order() {
        let a = TruncatedSeries::from_ints(&[1, 1], 3);
        let b = TruncatedSeries::from_ints(&[1, 1], 6);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn div_examples() {
        let s1 = TruncatedSeries::rational(&[1, 1], &[1, -1], 6).unwrap();
        assert_eq!(ints(&s1), [1, 2, 2, 2, 2, 2, 2]);
        let a = TruncatedSeries::from_ints(&[3, -1, 4], 5);
        assert_eq!(a.div(&a).unwrap(), TruncatedSeries::one(5));

        // Oracle: u_n = 2 u_{n-1} + u_{n-2}.
        let mut u = vec![1i64, 2];
        for n in 2..12 {
            u.push(2 * u[n - 1] + u[n - 2]);
        }
        let pell = TruncatedSeries::rational(&[1], &[1, -2, -1], 11).unwrap();
        assert_eq!(ints(&pell), u);
        assert_eq!(&ints(&pell)[..5], [1, 2, 5, 12, 29]);

        let no_unit = TruncatedSeries::from_ints(&[0, 1], 3);
        assert_eq!(a.div(&no_unit), Err(Error::DivisionByNonUnit));
    }

    #[test]
    fn compose_examples() {
        let a = TruncatedSeries::from_ints(&[2, -3, 5, 7], 6);
        assert_eq!(a.compose(&TruncatedSeries::x(6)).unwrap(), a);

        let geo = TruncatedSeries::rational(&[1], &[1, -1], 8).unwrap();
        let inner = TruncatedSeries::rational(&[0, 1], &[1, -1], 8).unwrap();
        // Oracle: (1 - x) / (1 - 2x) expanded directly.
        let expect = TruncatedSeries::rational(&[1, -1], &[1, -2], 8).unwrap();
        assert_eq!(geo.compose(&inner).unwrap(), expect);
        assert_eq!(&ints(&expect)[..5], [1, 1, 2, 4, 8]);

        assert_eq!(
            geo.compose(&geo),
            Err(Error::CompositionNonNilpotent)
        );
    }

    /// Coefficient-by-coefficient composition straight from the definition
    /// `sum_k a_k b(x)^k`, used as an independent oracle.
    fn compose_by_powers(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        let order = a.order().min(b.order());
        let mut acc = TruncatedSeries::zero(order);
        for k in 0..=order {
            let term = b.pow(k).scale(&a.coeffs()[k]);
            acc = &acc + &term;
        }
        acc
    }

    #[test]
    fn compose_associativity_on_eight_coefficients() {
        let f = TruncatedSeries::rational(&[0, 1], &[1, -1], 7).unwrap();
        let g = TruncatedSeries::rational(&[0, 1, 1], &[1, -1], 7).unwrap();
        let h = TruncatedSeries::rational(&[0, 1], &[1, 2], 7).unwrap();
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(f.compose(&g).unwrap(), compose_by_powers(&f, &g));
    }

    #[test]
    fn reversion_examples() {
        let x = TruncatedSeries::x(9);
        assert_eq!(x.reversion().unwrap(), x);

        let f = TruncatedSeries::rational(&[0, 1, 1], &[1, -1], 6).unwrap();
        assert_eq!(ints(&f.reversion().unwrap()), [0, 1, -2, 6, -22, 90, -394]);

        let g = TruncatedSeries::rational(&[0, 1], &[1, -1], 12).unwrap();
        let gbar = g.reversion().unwrap();
        assert_eq!(g.compose(&gbar).unwrap(), TruncatedSeries::x(12));

        assert_eq!(
            TruncatedSeries::from_ints(&[1, 1], 4).reversion(),
            Err(Error::NotReversible)
        );
        assert_eq!(
            TruncatedSeries::from_ints(&[0, 0, 1], 4).reversion(),
            Err(Error::NotReversible)
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            TruncatedSeries::one(5).sqrt().unwrap(),
            TruncatedSeries::one(5)
        );
        let root = TruncatedSeries::from_ints(&[1, -6, 1], 6).sqrt().unwrap();
        assert_eq!(ints(&root.recip().unwrap())[..5], [1, 3, 13, 63, 321]);

        let s = TruncatedSeries::from_ints(&[1, 6, 1], 6).sqrt().unwrap();
        let a = (&TruncatedSeries::from_ints(&[1, 1], 6) + &s).scale(&crate::scalar::rat(1, 2));
        assert_eq!(ints(&a)[..5], [1, 2, -2, 6, -22]);

        assert_eq!(
            TruncatedSeries::from_ints(&[4, 1], 3).sqrt(),
            Err(Error::SqrtUnsupportedConstantTerm)
        );
    }

    #[test]
    fn derivative_and_shifts() {
        let a = TruncatedSeries::from_ints(&[1, 2, 3, 4], 3);
        assert_eq!(ints(&a.derivative()), [2, 6, 12]);
        assert_eq!(a.mul_x().order(), 4);
        assert_eq!(a.mul_x().div_x().unwrap(), a);
        assert_eq!(a.coeff(4), None);
        assert_eq!(a.coeff(3), Some(&BigRational::from_integer(int(4))));
        assert!(a.truncate(7).is_err());
    }

    fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-9i64..=9, order + 1)
            .prop_map(move |c| TruncatedSeries::from_ints(&c, order))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-9i64..=9, order).prop_map(move |mut c| {
            c.insert(0, 1);
            TruncatedSeries::from_ints(&c, order)
        })
    }

    fn reversible(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (
            prop_oneof![-3i64..=-1, 1i64..=3],
            proptest::collection::vec(-5i64..=5, order - 1),
        )
            .prop_map(move |(lead, rest)| {
                let mut c = vec![0, lead];
                c.extend(rest);
                TruncatedSeries::from_ints(&c, order)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutes_and_associates(a in series_strategy(6), b in series_strategy(6), c in series_strategy(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn div_then_mul_round_trips(a in series_strategy(6), b in unit_series(6)) {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
        }

        #[test]
        fn reversion_is_two_sided(f in reversible(7)) {
            let g = f.reversion().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::x(7));
            prop_assert_eq!(g.compose(&f).unwrap(), TruncatedSeries::x(7));
        }

        #[test]
        fn sqrt_squares_back(a in unit_series(7)) {
            let s = a.sqrt().unwrap();
            prop_assert_eq!(s.mul(&s), a);
        }
    }
}
