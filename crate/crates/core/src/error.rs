use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names are part of the CLI contract: `inttrig transform` prints
/// [`Error::name`] when an operator is inapplicable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("all {k}x{k} minors vanish")]
    RankDeficient { k: usize },
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: String, m: String },
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(String),
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("triangle vertices are collinear")]
    Collinear,
    #[error("simplex or cone is degenerate: {0}")]
    Degenerate(String),
    #[error("cone edges are linearly dependent")]
    DegenerateCone,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("expected a positive rational, got {0}")]
    NonPositive(String),
    #[error("operation undefined on the trivial angle")]
    TrivialAngle,
    #[error("tangent {0} has no odd expansion with positive entries")]
    NonPositiveTangent(String),
    #[error("angle with integer tangent 1 admits no reduction")]
    NoReduction,
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    #[error("cone is not simple")]
    NotSimple,
    #[error("cosine {cos} is not invertible modulo {sin}")]
    CosineNotInvertible { cos: String, sin: String },
    #[error("permutation is not a single cycle of full length")]
    NotACycle,
    #[error("permutation of size {perm} applied to a cone with {edges} edges")]
    SizeMismatch { perm: usize, edges: usize },
    #[error("cosine in position {0} is zero; Euclidean reduction undefined")]
    ZeroCosine(usize),
    #[error("cosine in position {index} is {value}; at least 2 is required")]
    CosineTooSmall { index: usize, value: String },
    #[error("operation requires at least {min} edges, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("simplex edge {0}-{1} has integer length greater than 1")]
    NonUnitEdgeLengths(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotInvertible { .. } => "NotInvertible",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::ZeroVector => "ZeroVector",
            Error::DegenerateSegment => "DegenerateSegment",
            Error::Collinear => "Collinear",
            Error::Degenerate(_) => "Degenerate",
            Error::DegenerateCone => "DegenerateCone",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NonPositive(_) => "NonPositive",
            Error::TrivialAngle => "TrivialAngle",
            Error::NonPositiveTangent(_) => "NonPositiveTangent",
            Error::NoReduction => "NoReduction",
            Error::BranchAmbiguity(_) => "BranchAmbiguity",
            Error::NotSimple => "NotSimple",
            Error::CosineNotInvertible { .. } => "CosineNotInvertible",
            Error::NotACycle => "NotACycle",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::ZeroCosine(_) => "ZeroCosine",
            Error::CosineTooSmall { .. } => "CosineTooSmall",
            Error::TooSmall { .. } => "TooSmall",
            Error::NonUnitEdgeLengths(..) => "NonUnitEdgeLengths",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
