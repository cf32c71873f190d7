use thiserror::Error;

use crate::diagram::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} appears in more than one block")]
    DuplicateVertex { vertex: Vertex },
    #[error("vertex {vertex} is not covered by any block")]
    MissingVertex { vertex: Vertex },
    #[error("block {index} has {size} distinct vertices, expected 2")]
    BadBlockSize { index: usize, size: usize },
    #[error("vertex {vertex} is out of range for degree {degree}")]
    VertexOutOfRange { vertex: Vertex, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} is too large")]
    DegreeTooLarge(usize),
    #[error("index {index} out of range 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid notation: {0}")]
    InvalidNotation(String),
    #[error("rank {rank} is not admissible for degree {degree}")]
    InvalidRank { rank: usize, degree: usize },
    #[error("twist overflow")]
    TwistOverflow,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("empty product")]
    EmptyChain,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bound {bound} is below generator twist {twist}")]
    BoundTooLow { bound: u64, twist: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
