//! Error types shared across the crate.

use thiserror::Error;

/// Coarse classification used by callers that map errors to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A value outside the domain an operation accepts.
    Input,
    /// A structural precondition on the graph was violated.
    Precondition,
    /// Malformed serialized input.
    Format,
    /// A request the library deliberately does not serve.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {vertex} is not allowed in a simple graph")]
    SelfLoop { vertex: usize },

    #[error("{what} requires size >= {min}, got {size}")]
    SizeTooSmall {
        what: &'static str,
        size: usize,
        min: usize,
    },

    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("({u}, {v}) is already an edge of the graph")]
    AlreadyAdjacent { u: usize, v: usize },

    #[error("operation requires a tree")]
    NotATree,

    #[error("{0}")]
    Precondition(String),

    #[error("{0}")]
    Format(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::VertexOutOfRange { .. }
            | Error::SelfLoop { .. }
            | Error::SizeTooSmall { .. } => ErrorKind::Input,
            Error::NotAnEdge { .. }
            | Error::AlreadyAdjacent { .. }
            | Error::NotATree
            | Error::Precondition(_) => ErrorKind::Precondition,
            Error::Format(_) => ErrorKind::Format,
            Error::Unsupported(_) => ErrorKind::Unsupported,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
