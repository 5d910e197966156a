//! Exact machinery for the coordination numbers of the cubic lattices `Z^k`.
//!
//! The crate builds the coordination matrices `S`, `C`, their triangles, the
//! Delannoy matrices and the whole `L^(m)` family as Riordan arrays, and ships
//! the checks used to certify their analytic behaviour: total positivity on
//! finite windows, real-rootedness and interlacing of the row polynomials,
//! log-concavity/log-convexity, asymptotic-normality statistics and
//! Hankel-determinant identities.
//!
//! Everything is exact (`BigInt`/`BigRational`) unless a value is explicitly
//! typed as approximate ([`highprec::HighFloat`] or `f64` report fields).
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analytics;
pub mod error;
pub mod highprec;
pub mod interval;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod positivity;
pub mod riordan;
pub mod scalar;
pub mod series;
pub mod zeros;

pub use error::{Error, Result};
pub use interval::RationalInterval;
pub use matrix::ExactMatrix;
pub use poly::ExactPolynomial;
pub use riordan::RiordanArray;
pub use scalar::{ExactInteger, ExactRational};
pub use series::TruncatedSeries;
