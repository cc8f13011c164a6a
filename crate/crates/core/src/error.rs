use alloc::string::String;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(VertexId),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeId),
    #[error("graph has {order} vertices, cap is {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("more than {0} cycles")]
    CycleCapExceeded(usize),
    #[error("shore must be a nonempty proper subset of the vertices")]
    InvalidShore,
    #[error("perfect matching set was computed for a different graph")]
    FingerprintMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("fast recognizer and oracle disagree: {0}")]
    Disagreement(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn pre(msg: &str) -> Self {
        Error::Precondition(String::from(msg))
    }

    pub(crate) fn internal(msg: &str) -> Self {
        Error::Internal(String::from(msg))
    }
}
