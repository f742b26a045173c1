use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    GraphTooLarge(usize),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not series-parallel")]
    NotSeriesParallel,
    #[error("component {0} admits no homomorphism into the target")]
    NoHomomorphism(usize),
    #[error("ground set has {0} vertices; at most {max} are supported", max = crate::polymatroid::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("set function ground size {found} does not match graph order {expected}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("vertex {0} is not in the graph")]
    BadVertex(usize),
    #[error("index {index} out of range 1..={max}")]
    BadIndex { index: usize, max: usize },
    #[error("set function is not a member of the polytope")]
    NotMember,
    #[error("parity precondition failed: {0}")]
    BadParity(String),
    #[error("scope too large: {0}")]
    ScopeTooLarge(String),
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("linear program solver failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
