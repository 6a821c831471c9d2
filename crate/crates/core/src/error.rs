use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} out of range (supported: {1})")]
    VertexCount(usize, &'static str),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is already an edge")]
    EdgeExists(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the errors that signal an exhausted enumeration cap.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
