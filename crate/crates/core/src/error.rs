use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word of faces and degeneracies does not typecheck when read right to left.
    #[error("invalid word: generator {generator} at position {position} cannot act on dimension {dim}")]
    InvalidWord {
        generator: String,
        position: usize,
        dim: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("objects do not compose: {0}")]
    ObjectMismatch(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    /// The operator route only covers injective sequences.
    #[error("degenerate sequence: entry {0} is repeated")]
    DegenerateSequence(usize),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}
