use thiserror::Error;

/// Errors shared by the structural operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoreError {
    /// The requested computation is not available over the given field or
    /// for the given input class. The message says what to use instead.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An enumeration was refused or aborted because it would visit more
    /// candidates than the configured budget allows.
    #[error("enumeration budget of {budget} visits exceeded")]
    BudgetExceeded { budget: u64 },

    /// A vector had the wrong length for the ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A basis index was out of range or a product was attached to `i >= j`.
    #[error("malformed structure constant entry: {0}")]
    BadTableEntry(String),

    /// A scalar literal could not be parsed in the given field.
    #[error("bad scalar {text:?}: {reason}")]
    BadScalar { text: String, reason: String },

    /// The subspace passed in is required to be an ideal but is not.
    #[error("subspace is not an ideal")]
    NotAnIdeal,

    /// The subspace passed in is required to be closed under the bracket.
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    /// Root-finding over the rationals gave up (coefficients too large to
    /// factor within the fixed effort cap). Exact answers only: we refuse
    /// rather than approximate.
    #[error("rational eigenvalue search exceeded the factoring cap")]
    FactorCap,
}

pub type Result<T> = std::result::Result<T, CoreError>;
