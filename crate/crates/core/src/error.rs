use thiserror::Error;

/// Errors produced by graph construction, solvers, and file parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices (edge {u}-{v})")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        vertex: usize,
        n: usize,
    },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {n} vertices, capacity is {cap}")]
    CapacityExceeded { n: usize, cap: usize },

    #[error("graph is disconnected; solve each component separately")]
    Disconnected,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("cotree: {0}")]
    Cotree(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
