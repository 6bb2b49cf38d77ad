use thiserror::Error;

/// Errors raised by the decomposition library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not chordal")]
    NotChordal,

    /// The hypergraph has no join tree. `witness` names a vertex whose
    /// containing hyperedges do not induce a subtree of the candidate tree.
    #[error("hypergraph is not alpha-acyclic (witness vertex `{witness}`)")]
    NotAcyclic { witness: String },

    #[error("input too large: {0}")]
    SizeLimit(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Coarse classification used for exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Input,
    Domain,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::UnknownVertex(_) | Error::InvalidInput(_) | Error::SizeLimit(_) => ErrorKind::Input,
            Error::NotConnected | Error::NotChordal | Error::NotAcyclic { .. } => ErrorKind::Domain,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
