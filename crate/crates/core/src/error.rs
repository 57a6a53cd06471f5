use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapelliError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("theta outside allowed domain: {0}")]
    ThetaDomain(String),

    #[error("{0} is not an (m|n) hook partition for m={1}, n={2}")]
    NotHook(String, usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("polynomial is not separately symmetric")]
    NotSeparatelySymmetric,

    #[error("interpolation degenerate at this theta")]
    InterpolationDegenerate,

    #[error("invalid Borel subalgebra: {0}")]
    InvalidBorel(String),

    #[error("Borel subalgebra is not {0}")]
    WrongBorelClass(&'static str),

    #[error("index {0} is not in T_b")]
    NotInT(usize),

    #[error("root is not an odd isotropic root of the form ±(e_i - d_j)")]
    NotIsotropic,

    #[error("matrix is not a member of the requested family: {0}")]
    NotInFamily(String),

    #[error("this operation requires theta = 1/2")]
    ThetaNotHalf,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CapelliError>;
