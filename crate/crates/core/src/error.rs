use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("the graph has no vertices")]
    EmptyGraph,

    #[error("the graph is disconnected")]
    Disconnected,

    #[error("invalid coloring: {0}")]
    Coloring(String),

    #[error("invalid certificate: {0}")]
    Certificate(String),

    #[error("invalid family: {0}")]
    Family(String),

    #[error("{0}")]
    Range(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
