use thiserror::Error;

use crate::recognition::ForbiddenWitness;
use crate::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("vertex {vertex} is not in a graph with {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no path between {0} and {1}")]
    NoPath(Vertex, Vertex),

    #[error("input is outside the required graph class: {reason}")]
    WrongClass {
        reason: String,
        witness: Option<Box<ForbiddenWitness>>,
    },

    #[error("graph has {n} vertices; exhaustive search is bounded at {bound}")]
    SizeGuard { n: usize, bound: usize },

    #[error("shortest-path search exceeded {cap} node expansions")]
    ResourceExhausted { cap: u64 },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn wrong_class(reason: impl Into<String>) -> Self {
        Error::WrongClass {
            reason: reason.into(),
            witness: None,
        }
    }

    /// Process exit code for the CLI and the numeric error code for the C API:
    /// 1 parse, 2 wrong class, 3 resource or size guard, 4 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 1,
            Error::WrongClass { .. } => 2,
            Error::SizeGuard { .. } | Error::ResourceExhausted { .. } => 3,
            Error::InvalidVertex { .. }
            | Error::Precondition(_)
            | Error::NoPath(..)
            | Error::Internal(_) => 4,
        }
    }
}
