use thiserror::Error;

use crate::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModfError {
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("sign function covers {found} vertices but the digraph has {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("the empty digraph (n = 0) is not a valid instance")]
    Empty,

    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(usize, usize),

    #[error("arc {0} -> {1} is not present")]
    MissingArc(usize, usize),

    #[error("reversing {0} -> {1} would duplicate the existing arc {1} -> {0}")]
    ArcCollision(usize, usize),

    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sign function is not a majority out-dominating function")]
    NotModf,

    #[error("sign function is not a majority dominating function")]
    NotMajorityDominating,

    #[error("vertex set is not in-dominating")]
    NotInDominating,

    #[error("vertex set has {size} vertices, more than the allowed {limit}")]
    SetTooLarge { size: usize, limit: usize },

    #[error("digraph is not out-regular")]
    NotOutRegular,

    #[error("invalid reduction instance: {0}")]
    InvalidInstance(String),

    #[error("no closed form is known for {0}")]
    NoClosedForm(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, ModfError>;
