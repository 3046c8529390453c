use thiserror::Error;

/// Errors produced by shape construction, expansions and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<u32>),

    #[error("invalid subset: element {element} is outside 1..{n}")]
    InvalidSubset { element: u32, n: u32 },

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("size mismatch: left has {left} boxes, right has {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("size {size} exceeds the configured limit {limit}")]
    ResourceLimit { size: usize, limit: usize },

    #[error("integer overflow while accumulating coefficients")]
    Overflow,

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("{0} is not F-multiplicity-free")]
    NotMultiplicityFree(String),

    #[error("implication violated for pair ({a}, {b}): {arrow}")]
    ImplicationViolation { a: String, b: String, arrow: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
