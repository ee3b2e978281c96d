use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: wedge factors of total degree {got} in dimension {dim}")]
    Dimension { got: usize, dim: usize },
    #[error("basis vectors are linearly dependent")]
    SingularBasis,
    #[error("tuple is not generic: vanishing determinant in {0}")]
    Genericity(String),
    #[error("coordinate {0} is not positive")]
    Positivity(String),
    #[error("vertex {0:?} is not mutable (boundary vertex)")]
    NotMutable([usize; 4]),
    #[error("indeterminate sum of opposite infinities")]
    Indeterminate,
    #[error("{0} is not a boundary of the given pants")]
    Topology(String),
    #[error("singular matrix in {0}")]
    Singular(String),
    #[error("empty holonomy word")]
    EmptyWord,
    #[error("crossing word is not alternating/closed: {0}")]
    Structure(String),
    #[error("insufficient precision ({bits} bits): {detail}; retry with {suggested} bits")]
    Precision {
        bits: usize,
        detail: String,
        suggested: usize,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
