use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("q-binomial [{n} choose {k}] is out of range")]
    BinomialRange { n: i64, k: i64 },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a polynomial in q alone")]
    NotUnivariate,
    #[error("cannot parse {0:?} as a fraction a/b")]
    ParseRational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("cut point {k} is outside 0..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("matrix has a row or column with more than one 1")]
    NotPartialPermutation,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("{0:?} is not a weakly decreasing list of positive integers")]
    NotAPartition(Vec<usize>),
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("row lengths do not match the shape")]
    ShapeMismatch,
    #[error("entries are not 1..n increasing along rows and columns")]
    NotStandard,
    #[error("P and Q have different shapes")]
    DifferentShapes,
    #[error("invalid tableau JSON: {0}")]
    Json(String),
    #[error("cannot parse tableau {0:?}; expected rows like 1,2|3")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JSetError {
    #[error("set is empty")]
    Empty,
    #[error("difference sequence does not end in 1; not a j2-set candidate")]
    NotJ2Candidate,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot parse {0:?} as a comma-separated set")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("parameter {0} must be positive")]
    NonPositive(String),
    #[error("parameter {0} must lie strictly between 0 and 1")]
    NotInUnitInterval(String),
    #[error("n = {n} is smaller than the pattern size {min}")]
    TooSmall { n: usize, min: usize },
    #[error("{0}")]
    Pattern(String),
}
