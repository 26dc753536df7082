use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode surfaced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not positive semidefinite")]
    NotPsd,
    #[error("value must be positive, got {0}")]
    NonPositive(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("involution has a fixed point ({0})")]
    HasFixedPoint(usize),
    #[error("group order exceeds enumeration bound (aborted after {0} elements)")]
    OrderExceeded(usize),
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("field is not totally imaginary ({0} real roots)")]
    NotTotallyImaginary(usize),
    #[error("root isolation did not converge within {0} bits")]
    PrecisionExhausted(u32),
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("degree {0} is below the required minimum of 4")]
    DegreeTooSmall(usize),
    #[error("Galois data is required for fields of degree {0}")]
    GaloisDataMissing(usize),

    #[error("squares have heterogeneous degrees or variable counts")]
    HeterogeneousDegrees,
    #[error("empty list of squares")]
    EmptySquares,
    #[error("products of the basis are not linearly independent")]
    NotQuadraticallyIndependent,
    #[error("form is not in the span of the pairwise products")]
    NoSolution,
    #[error("Gram points have different spans")]
    SpansDiffer,
    #[error("Gram points are equal")]
    EqualPoints,
    #[error("forms are linearly dependent")]
    LinearlyDependent,
    #[error("Gram points represent different forms")]
    DifferentForms,

    #[error(
        "points do not carry a one-dimensional Cayley-Bacharach relation (kernel dimension {0})"
    )]
    NotCayleyBacharach(usize),
    #[error("points {0} and {1} coincide projectively")]
    DuplicatePoint(usize, usize),
    #[error("form is not the sum of the squares supplied")]
    NotASumOverU,
    #[error("no Gram witness for the form is available")]
    MissingGramWitness,
}
