use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex list is empty")]
    EmptyVertices,
    #[error("vertex {index} has {actual} coordinates, expected {expected}")]
    VertexLength {
        index: usize,
        expected: usize,
        actual: usize,
    },
    #[error("vertex {index} has a non-finite coordinate")]
    NonFiniteVertex { index: usize },
    #[error("direction has {actual} coordinates, expected {expected}")]
    DirectionLength { expected: usize, actual: usize },
    #[error("families live over R^{a} and R^{b}; space dimensions must match")]
    SpaceDimMismatch { a: usize, b: usize },
    #[error("family has no sets")]
    EmptyFamily,
    #[error("space dimension must be at least 1")]
    ZeroSpaceDim,
    #[error("set {index} lives in R^{actual}, but a {kind} over R^{space_dim} needs sets in R^{expected}")]
    SetDimension {
        index: usize,
        kind: &'static str,
        space_dim: usize,
        expected: usize,
        actual: usize,
    },
    #[error("matrix has no entries")]
    EmptyMatrix,
    #[error("matrix row {row} has {actual} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        actual: usize,
    },
    #[error("non-finite matrix entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("conversion would produce {product} sets, above the cap of {cap}")]
    CapExceeded { product: u128, cap: u64 },
    #[error("families do not form a conversion pair: {0}")]
    ConversionPair(String),
    #[error("sampler emits directions in R^{actual}, expected R^{expected}")]
    SamplerDim { expected: usize, actual: usize },
    #[error("unsuitable sampler mode: {0}")]
    SamplerMode(String),
    #[error("uniform-angle sampling is only defined in R^2, got dimension {actual}")]
    UniformAnglesDim { actual: usize },
    #[error("invalid family file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
