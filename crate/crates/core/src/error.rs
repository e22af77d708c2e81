use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular over GF(2)")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("nonzero entry above the block diagonal at row {row}, column {col}")]
    NotBlockTriangular { row: usize, col: usize },
    #[error("binomial upper argument {0} is negative")]
    NegativeUpper(i64),
    #[error("invalid selection: {0}")]
    InvalidSelection(String),
    #[error("difference product is not divisible by the superfactorial (remainder {0})")]
    NonIntegerQuotient(String),
    #[error("position ({i},{j}) lies outside the size-{size} triangle")]
    OutOfTriangle { i: usize, j: usize, size: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("index set has {found} positions, expected {expected}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("index set is not generating")]
    NotGenerating,
    #[error("value vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration size {n} exceeds the bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("{count} positions exceed the rank bound {n}")]
    TooMany { count: usize, n: usize },
    #[error("index sets have different ambient sizes")]
    MixedSizes,
    #[error("duplicate position ({i},{j})")]
    DuplicatePosition { i: usize, j: usize },
    #[error("block structure violated at ({row},{col}): {reason}")]
    StructureViolation {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("order {0} is not one more than a triangular number")]
    NotTriangularOrder(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}
