use thiserror::Error;

/// Errors raised by graph construction, parsing and the generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1} in a simple graph")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed rotation: {0}")]
    Rotation(String),
    #[error("invalid immersion: {0}")]
    Immersion(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("{0}")]
    Reduction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
