use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("operands use different bases ({0} vs {1}); convert first")]
    MixedBases(char, char),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("expansion has non-integral coefficients")]
    NonIntegralInput,
    #[error("variable count {requested} must be strictly less than {have}")]
    BadArity { have: usize, requested: usize },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("degree {degree} exceeds variable count {nvars}; collection would not be unique")]
    DegreeExceedsVariables { degree: usize, nvars: usize },
    #[error("class function has non-integral multiplicity at {0}")]
    NonIntegralMultiplicity(String),
    #[error("symmetric function is not homogeneous")]
    NotHomogeneous,
    #[error("word is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("problem size {size} exceeds the oracle cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("syntax error at offset {offset}: expected {expected}")]
    SyntaxError { offset: usize, expected: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
