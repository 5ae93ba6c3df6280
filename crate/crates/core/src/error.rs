use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} is out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{edges} edges on {n} vertices: a tree has exactly n-1, so the graph has a cycle")]
    Cyclic { n: usize, edges: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("DP and brute-force oracle disagree on {param} for tree {code}: {dp} vs {oracle}")]
    OracleDisagreement {
        param: &'static str,
        code: String,
        dp: usize,
        oracle: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
