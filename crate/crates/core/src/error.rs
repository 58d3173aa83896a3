use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("DuplicatePoints: points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },

    #[error("NotHullVertex: vertex {0} is not a convex hull vertex")]
    NotHullVertex(usize),

    #[error("SizeMismatch: colouring covers {colouring} vertices, graph has {graph}")]
    SizeMismatch { graph: usize, colouring: usize },

    #[error("BudgetExceeded: search gave up after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),

    #[error("NotReduced: hull vertex {vertex} sees the triangle {witness:?}")]
    NotReduced { vertex: usize, witness: [usize; 3] },

    #[error("EnumerationOverflow: more than {cap} colourings")]
    EnumerationOverflow { cap: usize },

    #[error("StructuralViolation ({property}): {detail}")]
    StructuralViolation { property: &'static str, detail: String },

    #[error("WitnessNotTricoloured: vertex {vertex} has witness {witness:?}")]
    WitnessNotTricoloured { vertex: usize, witness: [usize; 3] },

    #[error("ParseError: line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("NotThreeSat: clause {clause}: {message}")]
    NotThreeSat { clause: usize, message: String },

    #[error("GeometryDegeneracy: {0}")]
    GeometryDegeneracy(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn structural(property: &'static str, detail: impl Into<String>) -> Self {
        Error::StructuralViolation {
            property,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
