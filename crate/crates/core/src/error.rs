use thiserror::Error;

/// Errors raised by the algebra toolkit.
///
/// `Inconclusive` is kept distinct from every "proven negative" outcome: a search
/// that ran out of budget never masquerades as a certificate of non-existence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("char too small for radical algorithm (char {characteristic}, dim {dim})")]
    CharTooSmall { characteristic: u64, dim: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unsplit semisimple quotient: {0}")]
    Unsplit(String),
    #[error("factorization failure: {0}")]
    FactorizationFailed(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("form is not regular")]
    NotRegular,
    #[error("K not faithful enough: {0}")]
    NotFaithful(String),
    #[error("module is not a generator")]
    NotGenerator,
    #[error("module is not projective")]
    NotProjective,
    #[error("double module is not a double progenerator: {0}")]
    NotProgenerator(String),
    #[error("no symmetric unit found")]
    NoSymmetricUnit,
    #[error("wrong type: {0}")]
    WrongType(String),
    #[error("class group mismatch")]
    GroupMismatch,
    #[error("rank must be positive")]
    ZeroRank,
    #[error("not a perfect square: {0}")]
    NotPerfectSquare(String),
    #[error("not a poset: {0}")]
    NotAPoset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
