use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({u}, {v}) has length {weight} but its endpoints are {geometric} apart")]
    WeightMismatch { u: usize, v: usize, weight: String, geometric: String },

    #[error("negative edge length on ({0}, {1})")]
    NegativeLength(usize, usize),

    #[error("bridges must be vertex-disjoint: {0}")]
    BridgesNotDisjoint(String),

    #[error("instance too large: {0} (pass --force to override)")]
    SizeGuard(String),

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph is not 2-connected: {0}")]
    NotTwoConnected(String),

    #[error("embedding is not planar: {0} crossing edge pair(s)")]
    NonPlanar(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
