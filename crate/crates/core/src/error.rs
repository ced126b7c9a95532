use alloc::string::String;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("objects live over different variable sets")]
    AmbientMismatch,
    #[error("exponent vector has length {got}, ambient ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable set must contain at least one variable")]
    EmptyVariableSet,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("exponent {exponent} of variable {var} exceeds block size {block}")]
    ExceedsBlock { var: usize, exponent: u32, block: u32 },
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("order is not a permutation of the facets")]
    NotAPermutation,
    #[error("invalid prime filtration at step {step}: {reason}")]
    InvalidFiltration { step: usize, reason: &'static str },
    #[error("invalid Stanley decomposition: {0}")]
    InvalidDecomposition(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("boundary maps have mismatched dimensions at position {0}")]
    DimensionMismatch(usize),
    #[error("consecutive boundary maps do not compose to zero at position {0}")]
    NotAComplex(usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
