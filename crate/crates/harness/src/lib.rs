//! Verification harness: printed tables next to their recomputation, a
//! brute-force oracle for `a_n`, sandwich checks of exact values against the
//! closed-form bounds, and ratio traces for the asymptotic regime.

mod oracle;
mod sandwich;
mod tables;
mod trace;

use hypcross_bounds::BoundsError;
use hypcross_core::CoreError;
use hypcross_count::CountError;
use hypcross_enumerate::EnumerateError;
use hypcross_specfun::SpecfunError;
use thiserror::Error;

pub use oracle::{brute_force_an, ORACLE_MAX_DIM};
pub use sandwich::{
    energy_domination_check, verify_sandwich, SandwichReport, SandwichRow, UpperEntry, Violation, ViolationKind,
};
pub use tables::{reproduce_table, TableId, TableRow, TableSpec};
pub use trace::{
    asymptotic_ratio_trace, counting_ratio_trace, tensor_merge_check, CountRatioPoint, RatioPoint, SequenceRule,
    TensorMergeReport, TensorRow,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("oracle box too small: {0}")]
    BoxTooSmall(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}
