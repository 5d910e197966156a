//! Riordan arrays `R(g, f)`: column `k` has generating function `g * f^k`.
//!
//! Arrays are stored through their two series and only ever materialised as
//! finite leading windows. An `(n+1) x (n+1)` window needs both series known
//! to order `n`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{binomial, binomial_shifted, pow2, ExactRational};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    g: TruncatedSeries,
    f: TruncatedSeries,
    proper: bool,
}

/// The `A`- and `Z`-sequences of a proper array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionData {
    pub a: TruncatedSeries,
    pub z: TruncatedSeries,
}

/// Left product matrix `L(g, f)`: column 0 holds `g`, column `j >= 1` holds
/// `x^(j-1) f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftProductMatrix {
    matrix: ExactMatrix,
}

impl LeftProductMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }
}

/// Which coordination matrix to factor in [`ldu_factors`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LduTarget {
    S,
    C,
}

fn rational(num: &[i64], den: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::rational(num, den, order).expect("denominator has unit constant term")
}

impl RiordanArray {
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Self {
        let proper = g.coeffs()[0].is_one()
            && f.coeffs()[0].is_zero()
            && f.coeff(1).is_some_and(|c| !c.is_zero());
        Self { g, f, proper }
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Highest row index whose entries are all trusted.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// Identity `R(1, x)`.
    pub fn identity(order: usize) -> Self {
        Self::new(TruncatedSeries::one(order), TruncatedSeries::x(order))
    }

    /// Coordination matrix `S = R(1, (1+x)/(1-x))`.
    pub fn coordination_s(order: usize) -> Self {
        Self::new(TruncatedSeries::one(order), rational(&[1, 1], &[1, -1], order))
    }

    /// Coordination matrix `C = R((1+x)/(1-x), (1+x)/(1-x))`.
    pub fn coordination_c(order: usize) -> Self {
        let h = rational(&[1, 1], &[1, -1], order);
        Self::new(h.clone(), h)
    }

    /// Triangle `s = R(1, x(1+x)/(1-x))`.
    pub fn coordination_triangle_s(order: usize) -> Self {
        Self::new(TruncatedSeries::one(order), rational(&[0, 1, 1], &[1, -1], order))
    }

    /// Triangle `c = R((1+x)/(1-x), x(1+x)/(1-x))`.
    pub fn coordination_triangle_c(order: usize) -> Self {
        Self::new(
            rational(&[1, 1], &[1, -1], order),
            rational(&[0, 1, 1], &[1, -1], order),
        )
    }

    /// Delannoy matrix `D = R(1/(1-x), (1+x)/(1-x))`.
    pub fn delannoy(order: usize) -> Self {
        Self::new(rational(&[1], &[1, -1], order), rational(&[1, 1], &[1, -1], order))
    }

    /// Delannoy triangle `d = R(1/(1-x), x(1+x)/(1-x))`.
    pub fn delannoy_triangle(order: usize) -> Self {
        Self::new(rational(&[1], &[1, -1], order), rational(&[0, 1, 1], &[1, -1], order))
    }

    /// `L^(m) = R((1+(m-1)x)/(1-x), (1+x)/(1-x))`; `m = 0, 1, 2` give `S, D, C`.
    pub fn lattice(m: i64, order: usize) -> Self {
        Self::new(
            rational(&[1, m - 1], &[1, -1], order),
            rational(&[1, 1], &[1, -1], order),
        )
    }

    /// Triangle of `L^(m)`, whose rows are the coefficients of `l^(m)_n`.
    pub fn lattice_triangle(m: i64, order: usize) -> Self {
        Self::new(
            rational(&[1, m - 1], &[1, -1], order),
            rational(&[0, 1, 1], &[1, -1], order),
        )
    }

    /// Square Pascal matrix `P = R(1/(1-x), 1/(1-x))`.
    pub fn pascal_square(order: usize) -> Self {
        let h = rational(&[1], &[1, -1], order);
        Self::new(h.clone(), h)
    }

    /// Pascal triangle `p = R(1/(1-x), x/(1-x))`.
    pub fn pascal(order: usize) -> Self {
        Self::new(rational(&[1], &[1, -1], order), rational(&[0, 1], &[1, -1], order))
    }

    /// `J = R(1/(1-x), x)`, the lower triangle of ones.
    pub fn partial_sums(order: usize) -> Self {
        Self::new(rational(&[1], &[1, -1], order), TruncatedSeries::x(order))
    }

    /// `L_S = R(1, x/(1-x)) = [binomial(n-1, k-1)]`.
    pub fn ldu_lower_s(order: usize) -> Self {
        Self::new(TruncatedSeries::one(order), rational(&[0, 1], &[1, -1], order))
    }

    /// `L_C = R((1+x)/(1-x), x/(1-x)) = [binomial(n,k) + binomial(n-1,k)]`.
    pub fn ldu_lower_c(order: usize) -> Self {
        Self::new(rational(&[1, 1], &[1, -1], order), rational(&[0, 1], &[1, -1], order))
    }

    /// Toeplitz array `T(g) = R(g, x)`.
    pub fn toeplitz(g: TruncatedSeries) -> Self {
        let order = g.order();
        Self::new(g, TruncatedSeries::x(order))
    }

    fn require_rows(&self, rows: usize) -> Result<()> {
        if rows > self.order() + 1 {
            return Err(Error::InsufficientOrder {
                needed: rows.saturating_sub(1),
                available: self.order(),
            });
        }
        Ok(())
    }

    /// Coefficient of `x^n` in `g f^k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<ExactRational> {
        self.require_rows(n + 1)?;
        let g = self.g.truncate(n)?;
        let f = self.f.truncate(n)?;
        Ok(g.mul(&f.pow(k)).coeffs()[n].clone())
    }

    /// Column `k` as a series to the array's order.
    pub fn column(&self, k: usize) -> TruncatedSeries {
        self.g.mul(&self.f.pow(k))
    }

    /// Leading `rows x cols` block.
    pub fn window(&self, rows: usize, cols: usize) -> Result<ExactMatrix> {
        self.require_rows(rows)?;
        if rows == 0 {
            return Ok(ExactMatrix::zeros(0, cols));
        }
        let order = rows - 1;
        let f = self.f.truncate(order)?;
        let mut col = self.g.truncate(order)?;
        let mut data: Vec<Vec<ExactRational>> = Vec::with_capacity(cols);
        for _ in 0..cols {
            data.push(col.coeffs().to_vec());
            col = col.mul(&f);
        }
        Ok(ExactMatrix::from_fn(rows, cols, |i, j| data[j][i].clone()))
    }

    pub fn square_window(&self, size: usize) -> Result<ExactMatrix> {
        self.window(size, size)
    }

    /// `self * other = R(d g(h), f(h))` for `self = R(d, h)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !self.proper {
            return Err(Error::ImproperLeftFactor);
        }
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        Ok(Self::new(g, f))
    }

    /// `R(1/g(fbar), fbar)`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.proper {
            return Err(Error::ImproperArray);
        }
        let fbar = self.f.reversion()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Ok(Self::new(g, fbar))
    }

    /// `A(y) = y / fbar(y)` and `Z(y) = ((1 - 1/g)/x)(fbar(y))`, each known to
    /// one order less than the array.
    pub fn extract_production(&self) -> Result<ProductionData> {
        if !self.proper {
            return Err(Error::ImproperArray);
        }
        let fbar = self.f.reversion()?;
        let a = self.f.div_x()?.compose(&fbar)?;
        let one = TruncatedSeries::one(self.g.order());
        let z = (&one - &self.g.recip()?).div_x()?.compose(&fbar)?;
        Ok(ProductionData { a, z })
    }

    /// Left product matrix window, `rows x (rows + 1)`.
    ///
    /// The extra column is needed when `f(0) != 0`, where row `i` reaches
    /// column `i + 1`.
    pub fn left_product_matrix(&self, rows: usize) -> Result<LeftProductMatrix> {
        self.require_rows(rows)?;
        let matrix = ExactMatrix::from_fn(rows, rows + 1, |i, j| {
            if j == 0 {
                self.g.coeffs()[i].clone()
            } else if i + 1 >= j {
                self.f.coeffs()[i + 1 - j].clone()
            } else {
                BigRational::zero()
            }
        });
        Ok(LeftProductMatrix { matrix })
    }
}

/// Rebuilds rows `0..rows` from the production recurrence
/// `R[0][0] = 1`, `R[n+1][0] = sum z_j R[n][j]`, `R[n+1][k+1] = sum a_j R[n][k+j]`.
pub fn replay_rows(prod: &ProductionData, rows: usize) -> Result<Vec<Vec<ExactRational>>> {
    let needed = rows.saturating_sub(2);
    let available = prod.a.order().min(prod.z.order());
    if rows >= 2 && needed > available {
        return Err(Error::InsufficientOrder { needed, available });
    }
    let mut out: Vec<Vec<ExactRational>> = Vec::with_capacity(rows);
    if rows == 0 {
        return Ok(out);
    }
    out.push(vec![BigRational::one()]);
    for n in 0..rows - 1 {
        let prev = &out[n];
        let mut next = Vec::with_capacity(n + 2);
        next.push(
            prev.iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (j, r)| acc + &prod.z.coeffs()[j] * r),
        );
        for k in 0..=n {
            next.push(
                prev[k..]
                    .iter()
                    .enumerate()
                    .fold(BigRational::zero(), |acc, (j, r)| acc + &prod.a.coeffs()[j] * r),
            );
        }
        out.push(next);
    }
    Ok(out)
}

/// `(R^L, diag(1, R))` windows with `R^L * diag(1, R)` equal to the leading
/// `size x size` window of `R`. The factors are `size x (size+1)` and
/// `(size+1) x size`.
pub fn left_product_decompose(
    r: &RiordanArray,
    size: usize,
) -> Result<(LeftProductMatrix, ExactMatrix)> {
    let left = r.left_product_matrix(size)?;
    let inner = r.window(size, size.saturating_sub(1))?;
    let bordered = ExactMatrix::from_fn(size + 1, size, |i, j| match (i, j) {
        (0, 0) => BigRational::one(),
        (0, _) | (_, 0) => BigRational::zero(),
        _ => inner.get(i - 1, j - 1).clone(),
    });
    Ok((left, bordered))
}

/// `(L, diag(1, 2, 4, ...), p^t)` windows of size `size` with product equal
/// to the `S` or `C` window.
pub fn ldu_factors(which: LduTarget, size: usize) -> (ExactMatrix, ExactMatrix, ExactMatrix) {
    let lower = ExactMatrix::from_integer_fn(size, size, |n, k| {
        let (n, k) = (n as u64, k as u64);
        match which {
            LduTarget::S => binomial_shifted(n, k),
            LduTarget::C => binomial(n, k) + if n == 0 { BigInt::zero() } else { binomial(n - 1, k) },
        }
    });
    let diag: Vec<ExactRational> = (0..size)
        .map(|i| BigRational::from_integer(pow2(i as u32)))
        .collect();
    let upper = ExactMatrix::from_integer_fn(size, size, |i, j| binomial(j as u64, i as u64));
    (lower, ExactMatrix::diagonal(&diag), upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{binomial_int, int, rat_int};
    use proptest::prelude::*;

    fn int_rows(m: &ExactMatrix) -> Vec<Vec<i64>> {
        m.integer_rows()
            .unwrap()
            .into_iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    fn lower_rows(m: &ExactMatrix) -> Vec<Vec<i64>> {
        int_rows(m)
            .into_iter()
            .enumerate()
            .map(|(i, r)| r[..=i].to_vec())
            .collect()
    }

    #[test]
    fn entries() {
        let c = RiordanArray::coordination_triangle_c(6);
        assert_eq!(c.entry(4, 2).unwrap(), rat_int(18));
        let id = RiordanArray::identity(6);
        for n in 0..6 {
            for k in 0..6 {
                assert_eq!(id.entry(n, k).unwrap(), rat_int(i64::from(n == k)));
            }
        }
        // Oracle: Pascal recurrence.
        let mut pascal = vec![vec![1i64]];
        for n in 1..=6 {
            let prev: &Vec<i64> = &pascal[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1] } else { 0 };
                    left + prev.get(k).copied().unwrap_or(0)
                })
                .collect();
            pascal.push(row);
        }
        let p = RiordanArray::pascal(6);
        assert_eq!(p.entry(4, 2).unwrap(), rat_int(pascal[4][2]));
        assert_eq!(p.entry(4, 2).unwrap(), rat_int(6));
        assert!(matches!(p.entry(7, 0), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn displayed_triangles() {
        let c = RiordanArray::coordination_triangle_c(4).square_window(5).unwrap();
        assert_eq!(
            lower_rows(&c),
            [
                vec![1],
                vec![2, 1],
                vec![2, 4, 1],
                vec![2, 8, 6, 1],
                vec![2, 12, 18, 8, 1]
            ]
        );
        let inv = RiordanArray::coordination_triangle_c(4).inverse().unwrap();
        assert_eq!(
            lower_rows(&inv.square_window(5).unwrap()),
            [
                vec![1],
                vec![-2, 1],
                vec![6, -4, 1],
                vec![-22, 16, -6, 1],
                vec![90, -68, 30, -8, 1]
            ]
        );
        let s = RiordanArray::coordination_s(4).window(4, 5).unwrap();
        assert_eq!(
            int_rows(&s),
            [
                vec![1, 1, 1, 1, 1],
                vec![0, 2, 4, 6, 8],
                vec![0, 2, 8, 18, 32],
                vec![0, 2, 12, 38, 88]
            ]
        );
    }

    #[test]
    fn multiplication() {
        let c = RiordanArray::coordination_triangle_c(7);
        assert_eq!(c.multiply(&RiordanArray::identity(7)).unwrap(), c);
        let inv = c.inverse().unwrap();
        assert_eq!(
            inv.multiply(&c).unwrap().square_window(6).unwrap(),
            ExactMatrix::identity(6)
        );
        let j = RiordanArray::partial_sums(7);
        let d = j.multiply(&RiordanArray::coordination_triangle_s(7)).unwrap();
        assert_eq!(
            d.square_window(8).unwrap(),
            RiordanArray::delannoy_triangle(7).square_window(8).unwrap()
        );
        let full = j.multiply(&RiordanArray::coordination_s(7)).unwrap();
        assert_eq!(
            full.square_window(8).unwrap(),
            RiordanArray::delannoy(7).square_window(8).unwrap()
        );
        assert_eq!(
            RiordanArray::coordination_s(4).multiply(&c),
            Err(Error::ImproperLeftFactor)
        );
    }

    #[test]
    fn inverses() {
        let id = RiordanArray::identity(5);
        assert_eq!(id.inverse().unwrap(), id);
        let p = RiordanArray::pascal(7).inverse().unwrap();
        let w = p.square_window(8).unwrap();
        for n in 0..8 {
            for k in 0..8 {
                let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                let expect = binomial_int(n as i64, k as i64) * sign;
                assert_eq!(w.get(n, k), &BigRational::from_integer(expect));
            }
        }
        assert_eq!(
            RiordanArray::coordination_c(4).inverse(),
            Err(Error::ImproperArray)
        );
    }

    #[test]
    fn production_sequences() {
        let c = RiordanArray::coordination_triangle_c(9);
        let prod = c.extract_production().unwrap();
        let a: Vec<_> = prod.a.integer_coeffs().unwrap();
        let z: Vec<_> = prod.z.integer_coeffs().unwrap();
        // a_{n+1} = z_n = (-1)^n r_n for n >= 1.
        let expect_a = [1, 2, -2, 6, -22, 90, -394, 1806];
        let expect_z = [2, -2, 6, -22, 90, -394, 1806, -8558];
        for n in 0..8 {
            assert_eq!(a[n], int(expect_a[n]));
            assert_eq!(z[n], int(expect_z[n]));
            assert_eq!(a[n + 1], z[n]);
        }
        let p = RiordanArray::pascal(6).extract_production().unwrap();
        assert_eq!(p.a.integer_coeffs().unwrap()[..3], [int(1), int(1), int(0)]);
        assert_eq!(p.z.integer_coeffs().unwrap()[..3], [int(1), int(0), int(0)]);
    }

    #[test]
    fn row_replay() {
        for r in [
            RiordanArray::coordination_triangle_c(11),
            RiordanArray::delannoy_triangle(11),
            RiordanArray::pascal(11),
            RiordanArray::lattice_triangle(3, 11),
        ] {
            let prod = r.extract_production().unwrap();
            let rows = replay_rows(&prod, 11).unwrap();
            let w = r.square_window(11).unwrap();
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    assert_eq!(v, w.get(n, k));
                }
            }
        }
    }

    #[test]
    fn left_product_examples() {
        for r in [
            RiordanArray::coordination_c(6),
            RiordanArray::coordination_triangle_c(6),
            RiordanArray::identity(6),
        ] {
            let (l, b) = left_product_decompose(&r, 6).unwrap();
            assert_eq!(l.matrix() * &b, r.square_window(6).unwrap());
        }
        let (l, _) = left_product_decompose(&RiordanArray::coordination_c(3), 4).unwrap();
        assert_eq!(
            int_rows(l.matrix()),
            [
                vec![1, 1, 0, 0, 0],
                vec![2, 2, 1, 0, 0],
                vec![2, 2, 2, 1, 0],
                vec![2, 2, 2, 2, 1]
            ]
        );
        let (l, _) = left_product_decompose(&RiordanArray::coordination_triangle_c(3), 4).unwrap();
        assert_eq!(
            lower_rows(&l.matrix().window(4, 4)),
            [vec![1], vec![2, 1], vec![2, 2, 1], vec![2, 2, 2, 1]]
        );
    }

    #[test]
    fn ldu() {
        for (which, r) in [
            (LduTarget::S, RiordanArray::coordination_s(7)),
            (LduTarget::C, RiordanArray::coordination_c(7)),
        ] {
            let (l, d, u) = ldu_factors(which, 8);
            assert_eq!(&(&l * &d) * &u, r.square_window(8).unwrap());
        }
        let (ls, _, _) = ldu_factors(LduTarget::S, 8);
        assert_eq!(ls, RiordanArray::ldu_lower_s(7).square_window(8).unwrap());
        let (lc, _, _) = ldu_factors(LduTarget::C, 8);
        assert_eq!(lc, RiordanArray::ldu_lower_c(7).square_window(8).unwrap());
        assert_eq!(int_rows(&lc)[3][..4], [2, 5, 4, 1]);
        let s = RiordanArray::coordination_s(7);
        for n in 0..8u32 {
            let w = s.square_window(n as usize + 1).unwrap();
            assert_eq!(w.det_fraction_free().unwrap(), BigRational::from_integer(pow2(n * (n + 1) / 2)));
        }
    }

    #[test]
    fn lattice_relation() {
        let d = RiordanArray::delannoy(10).square_window(11).unwrap();
        for m in 0..4i64 {
            let l = RiordanArray::lattice(m, 10).square_window(11).unwrap();
            for n in 0..11 {
                for k in 0..11 {
                    let mut expect = d.get(n, k).clone();
                    if n > 0 {
                        expect += d.get(n - 1, k) * rat_int(m - 1);
                    }
                    assert_eq!(l.get(n, k), &expect);
                }
            }
        }
    }

    fn proper_array(order: usize) -> impl Strategy<Value = RiordanArray> {
        (
            proptest::collection::vec(-4i64..=4, order),
            prop_oneof![Just(1i64), Just(-1), Just(2)],
            proptest::collection::vec(-4i64..=4, order - 1),
        )
            .prop_map(move |(g_tail, f1, f_tail)| {
                let mut g = vec![1];
                g.extend(g_tail);
                let mut f = vec![0, f1];
                f.extend(f_tail);
                RiordanArray::new(
                    TruncatedSeries::from_ints(&g, order),
                    TruncatedSeries::from_ints(&f, order),
                )
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn group_law_on_windows(a in proper_array(9), b in proper_array(9), c in proper_array(9)) {
            let ab = a.multiply(&b).unwrap();
            let wa = a.square_window(10).unwrap();
            let wb = b.square_window(10).unwrap();
            prop_assert_eq!(ab.square_window(10).unwrap(), &wa * &wb);
            let left = ab.multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(left.square_window(10).unwrap(), right.square_window(10).unwrap());
            let inv = a.inverse().unwrap();
            let id = ExactMatrix::identity(10);
            prop_assert_eq!(inv.multiply(&a).unwrap().square_window(10).unwrap(), id.clone());
            prop_assert_eq!(a.multiply(&inv).unwrap().square_window(10).unwrap(), id);
        }

        #[test]
        fn production_replay_matches(a in proper_array(10)) {
            let prod = a.extract_production().unwrap();
            let rows = replay_rows(&prod, 11).unwrap();
            let w = a.square_window(11).unwrap();
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    prop_assert_eq!(v, w.get(n, k));
                }
            }
        }
    }
}
