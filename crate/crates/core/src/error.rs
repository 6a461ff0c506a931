use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("primitive of zero vector undefined")]
    ZeroVector,
    #[error("columns not independent")]
    DependentColumns,
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("rational function has a pole at q = 1")]
    PoleAtOne,
    #[error("empty point set")]
    EmptyInput,
    #[error("inconsistent dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("edge validation failed: {0}")]
    EdgeValidation(String),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("form not generic on cone generator {0}")]
    NonGenericGenerator(String),
    #[error("integral form is not generic and positive: {0}")]
    NotGenericPositive(String),
    #[error("polytope has denominator {0}; use the constituent pathway")]
    NotLattice(String),
    #[error("oracle box of {volume} candidate points exceeds the cap of {cap}")]
    BoxTooLarge { volume: String, cap: u64 },
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
