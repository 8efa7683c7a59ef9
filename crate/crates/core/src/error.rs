use thiserror::Error;

/// Errors produced by the graph engines and the Betti oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("{0:?} is not a minimal cut set")]
    NotMinimalCutSet(Vec<usize>),

    #[error("{0:?} does not have the cut point property")]
    NotCutPointSet(Vec<usize>),

    #[error("graph is not a generalized block graph")]
    NotGbg,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
