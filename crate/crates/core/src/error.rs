use thiserror::Error;

use crate::lattice::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no direction")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not unimodular (determinant {0})")]
    NotUnimodular(i128),
    #[error("coordinate {0} is outside the supported range")]
    CoordinateRange(i64),
    #[error("not full-dimensional")]
    NotFullDimensional,
    #[error("{0} is not a vertex")]
    NotAVertex(IntVector),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone has no generators")]
    EmptyCone,
    #[error("cone is not simplicial")]
    NotSimplicial,
    #[error("cone is not Q-Gorenstein")]
    NotQGorenstein,
    #[error("normal cone at vertex {0} is not Q-Gorenstein")]
    VertexNotQGorenstein(IntVector),
    #[error("polytope is not smooth; use general matcher")]
    NotSmooth,
    #[error("fan is not smooth")]
    FanNotSmooth,
    #[error("malformed fan: {0}")]
    MalformedFan(String),
    #[error("not a face of the fan: {0:?}")]
    NotAFace(Vec<usize>),
    #[error("dilation factor must be positive")]
    ZeroDilation,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
