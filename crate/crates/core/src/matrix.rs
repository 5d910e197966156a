//! Dense exact matrices, minors and fraction-free determinants.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{as_integer, lcm_of_denominators, ExactInteger, ExactRational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_integer_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactInteger,
    ) -> Self {
        Self::from_fn(rows, cols, |i, j| BigRational::from_integer(f(i, j)))
    }

    /// Row-major small-integer literal, mostly for tests and examples.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| {
            BigRational::from_integer(BigInt::from(rows[i][j]))
        })
    }

    pub fn diagonal(entries: &[ExactRational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)`. Panics when out of bounds.
    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactRational) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Leading `rows x cols` block.
    pub fn window(&self, rows: usize, cols: usize) -> Self {
        assert!(rows <= self.rows && cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// All entries as integers, if they are.
    pub fn integer_rows(&self) -> Option<Vec<Vec<ExactInteger>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(as_integer).collect())
            .collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Exact determinant by single-division fraction-free elimination.
    ///
    /// Each row is first scaled to integers by the lcm of its denominators;
    /// the product of those factors is divided out at the end.
    pub fn det_fraction_free(&self) -> Result<ExactRational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = lcm_of_denominators(row);
                let out = row
                    .iter()
                    .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                    .collect();
                scale *= l;
                out
            })
            .collect();
        Ok(BigRational::new(det_integer(rows), scale))
    }

    /// Determinant of the submatrix on the given strictly increasing index lists.
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<ExactRational> {
        if !valid_index_set(row_idx, self.rows)
            || !valid_index_set(col_idx, self.cols)
            || row_idx.len() != col_idx.len()
        {
            return Err(Error::BadIndexSet);
        }
        self.submatrix(row_idx, col_idx).det_fraction_free()
    }
}

pub(crate) fn valid_index_set(idx: &[usize], bound: usize) -> bool {
    idx.windows(2).all(|w| w[0] < w[1]) && idx.last().is_none_or(|&l| l < bound)
}

/// Bareiss elimination on an integer matrix. Every intermediate division is exact.
pub fn det_integer(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Minor of an integer matrix given by row slices, without re-validating indices.
pub(crate) fn integer_minor(rows: &[Vec<BigInt>], row_idx: &[usize], col_idx: &[usize]) -> BigInt {
    det_integer(
        row_idx
            .iter()
            .map(|&i| col_idx.iter().map(|&j| rows[i][j].clone()).collect())
            .collect(),
    )
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigRational::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * rhs.get(k, j);
                }
            }
            acc
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}
