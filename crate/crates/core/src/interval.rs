use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalar::ExactRational;

/// Closed rational interval `[lo, hi]` with `lo <= hi`.
///
/// As a root enclosure, a degenerate interval is the exact root; otherwise
/// the enclosed root lies strictly between the endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: ExactRational,
    hi: ExactRational,
}

impl RationalInterval {
    /// `None` when `lo > hi`.
    pub fn new(lo: ExactRational, hi: ExactRational) -> Option<Self> {
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn point(x: ExactRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn disjoint_from(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
