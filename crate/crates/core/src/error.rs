use thiserror::Error;

/// Errors produced by graph construction, the solvers and the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex sets differ in size: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("coloring has {actual} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("{what}: input size {actual} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("standard products need nonempty factors")]
    EmptyFactor,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted; chromatic number lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: u32, upper: u32 },

    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),

    #[error("pattern composition failed: {0}")]
    CompositionFailure(String),

    #[error("pattern target mismatch: {0}")]
    TargetMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
