use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} entries in `{what}`, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("smoothness s[{index}] = {value} is not positive")]
    NonPositiveSmoothness { index: usize, value: f64 },
    #[error("fine index q[{index}] = {value} is not positive")]
    InvalidFineIndex { index: usize, value: f64 },
    #[error("the energy target needs min s > 1, got {min}")]
    EnergyNeedsSmoothness { min: f64 },
    #[error("operation needs target {expected}, problem has {got}")]
    WrongTarget {
        expected: &'static str,
        got: &'static str,
    },
}
