use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("operands live in rings with {left} and {right} variables")]
    NvarsMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("quotient is not Artinian: Hilbert function still nonzero at degree {degree}")]
    NotArtinian { degree: u32 },

    #[error("dmax = {dmax} is too small; homology can be nonzero up to degree {needed}")]
    DmaxTooSmall { dmax: u32, needed: u32 },

    #[error("{subideal}: syzygy space in degree {degree} has dimension {found}, expected 2")]
    HilbertBurchShape {
        subideal: String,
        degree: u32,
        found: usize,
    },

    #[error("{subideal}: 2x2 minor is not a constant multiple of generator {generator}")]
    MinorNotDivisible { subideal: String, generator: usize },

    #[error("extended syzygy s{index} does not annihilate the generators")]
    NotASyzygy { index: usize },

    #[error("negative-curve reduction exceeded {cap} iterations")]
    IterationCap { cap: u64 },

    #[error("unknown configuration {0:?}")]
    UnknownConfig(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
