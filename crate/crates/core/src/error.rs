use thiserror::Error;

use crate::plane_graph::Triangle3;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("inconsistent embedding: {0}")]
    BadEmbedding(String),
    #[error("outer triple {0:?} is not a face of the embedding")]
    BadOuterFace([usize; 3]),
    #[error("graph too small: n = {n}, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex {0} is not an outer vertex")]
    BadRoot(usize),
    #[error("triangle {0} is not an oriented cycle")]
    NotOriented(Triangle3),
    #[error("triangle {0} is not an oriented face")]
    NotOrientedFace(Triangle3),
    #[error("woods have different graphs or root assignments")]
    RootMismatch,
    #[error("invalid Schnyder wood: {}", .0.join("; "))]
    InvalidWood(Vec<String>),
    #[error("not morphable: {0}")]
    NotMorphable(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("triangles {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("non-adjacent triangles {0} and {1} touch")]
    StrayContact(usize, usize),
    #[error("adjacent triangles {0} and {1} do not touch")]
    MissingContact(usize, usize),
    #[error("invalid representation: {}", .0.join("; "))]
    InvalidRepresentation(Vec<String>),
    #[error("wood does not belong to the representation's wood set")]
    WoodMismatch,
    #[error("labeling is not admissible: {}", .0.join("; "))]
    BadLabeling(Vec<String>),
    #[error("outer frame invalid: {0}")]
    BadFrame(String),
    #[error("representations belong to different graphs")]
    GraphMismatch,
    #[error("moving vertex {vertex} to {y} does not respect the order along its diagonal")]
    OrderViolation { vertex: usize, y: String },
    #[error("representation is degenerate")]
    Degenerate,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// True for errors signalling a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInvariant(_))
    }
}
