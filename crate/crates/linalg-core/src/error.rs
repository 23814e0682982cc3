use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinAlgError {
    #[error("invalid dimension {0} (must be >= {1})")]
    InvalidDimension(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not orthogonal within tolerance {0}")]
    NotOrthogonal(f64),
    #[error("determinant {0} is not ±1 within tolerance")]
    NotUnimodular(f64),
    #[error("shift-map parameters require a - b > 0, got a = {a}, b = {b}")]
    InvalidShiftParams { a: f64, b: f64 },
    #[error("non-finite entry encountered")]
    NonFinite,
}
