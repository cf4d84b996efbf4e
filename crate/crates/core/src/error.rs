use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("alphabets are not disjoint (shared letter {0})")]
    OverlappingAlphabets(u32),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid ordered set partition: {0}")]
    InvalidOrderedPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("wrong basis: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("not symmetric: coefficient of {alpha:?} is {alpha_coeff} but {beta:?} has {beta_coeff}")]
    NotSymmetric {
        alpha: Vec<usize>,
        beta: Vec<usize>,
        alpha_coeff: String,
        beta_coeff: String,
    },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error reports a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
