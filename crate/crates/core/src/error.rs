use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor series has a zero constant term")]
    DivisionByNonUnit,
    #[error("inner series of a composition must have zero constant term")]
    CompositionNonNilpotent,
    #[error("series is not reversible (needs f(0) = 0 and f'(0) != 0)")]
    NotReversible,
    #[error("square root is only supported for constant term 1")]
    SqrtUnsupportedConstantTerm,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("index sets must be strictly increasing, of equal length and in bounds")]
    BadIndexSet,
    #[error("need series order {needed}, only {available} available")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("left factor of a Riordan product must be proper")]
    ImproperLeftFactor,
    #[error("operation requires a proper Riordan array")]
    ImproperArray,
    #[error("Jacobi recurrence leading factor vanishes at n = {n}")]
    DegenerateRecurrence { n: usize },
    #[error("independent evaluation routes disagree: {0}")]
    CrossCheckFailed(&'static str),
    #[error("polynomial is not squarefree")]
    NonSquarefree,
    #[error("polynomial shares a root with the boundary polynomial x^2 + 6x + 1")]
    SharedRootWithBoundary,
    #[error("polynomials share a common root")]
    CommonRoot,
    #[error("degree mismatch: left degree {left:?}, right degree {right:?}")]
    DegreeMismatch { left: Option<usize>, right: Option<usize> },
    #[error("constant polynomial has no roots to isolate")]
    ConstantPolynomial,
    #[error("root enclosure still ambiguous after {0} halvings")]
    RefinementExhausted(usize),
    #[error("matrix is not lower triangular")]
    NotLowerTriangular,
    #[error("coefficient {index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("sequence must not be empty")]
    EmptySequence,
}
