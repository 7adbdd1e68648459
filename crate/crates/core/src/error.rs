use thiserror::Error;

use crate::basis::MAX_DEGREE;

/// Everything the kernel can reject.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid knot shift alpha={alpha}, beta={beta}: need 0 <= alpha <= beta")]
    InvalidShift { alpha: f64, beta: f64 },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),

    #[error("basis index {k} out of range for degree {n}")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("parameter {t} outside the domain [{lo}, {hi}]")]
    OutOfDomain { t: f64, lo: f64, hi: f64 },

    #[error("de Casteljau step {r} out of range 1..={n}")]
    StepOutOfRange { r: usize, n: usize },

    #[error("need at least two control points per direction, got {0}")]
    TooFewControlPoints(usize),

    #[error("control point {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("control net row {row} has {found} points, expected {expected}")]
    RaggedNet {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("points must have at least one coordinate")]
    EmptyPoint,

    #[error("non-finite coordinate in control point {0}")]
    NonFinite(usize),

    #[error("sample count must be at least 2, got {0}")]
    TooFewSamples(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
