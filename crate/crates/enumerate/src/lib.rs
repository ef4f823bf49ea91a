//! Lazy non-increasing rearrangement of a coordinatewise nonincreasing
//! lattice weight.
//!
//! The frontier walks `ℕ₀^d` best-first. A point's children are `k + e_j`
//! for every `j` up to and including its first nonzero coordinate, so each
//! point has exactly one parent and no visited set is needed. Values come out
//! grouped into plateaus of equal weight.

mod frontier;
mod sequence;

use hypcross_core::{multiplicity, CoreError, WeightFunction};
use thiserror::Error;

pub use frontier::{EnumConfig, Frontier, Member, Plateau};
pub use sequence::{
    jump_sequence, nth_singular_value, optimal_index_set, singular_values, singular_values_with,
    PlateauMark, SingularSequence,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerateError {
    #[error("frontier exceeded its cap of {cap} nodes")]
    BudgetExceeded { cap: usize },
    #[error("exact integer weight overflowed 128 bits")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// A reciprocal weight `σ` on `ℕ₀^d`, nonincreasing in every coordinate.
pub trait LatticeWeight {
    fn dim(&self) -> usize;

    /// `ln σ(k)`, `-∞` for points of weight zero.
    fn log_sigma(&self, k: &[u64]) -> f64;

    /// `1/σ(k)` as an exact integer, when the weight is integer-valued.
    /// Integer-valued weights return `None` only on overflow.
    fn exact_u(&self, _k: &[u64]) -> Option<u128> {
        None
    }

    fn is_integer(&self) -> bool {
        false
    }

    /// Number of lattice points represented by `k`.
    fn multiplicity(&self, k: &[u64]) -> u64 {
        multiplicity(k)
    }
}

impl LatticeWeight for WeightFunction {
    fn dim(&self) -> usize {
        WeightFunction::dim(self)
    }

    fn log_sigma(&self, k: &[u64]) -> f64 {
        WeightFunction::log_sigma(self, k)
    }

    fn exact_u(&self, k: &[u64]) -> Option<u128> {
        WeightFunction::exact_u(self, k)
    }

    fn is_integer(&self) -> bool {
        WeightFunction::is_integer(self)
    }
}
