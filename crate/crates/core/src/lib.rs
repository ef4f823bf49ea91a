//! Problem specification and the two weight families behind the singular
//! numbers of mixed-smoothness Sobolev embeddings on the torus.
//!
//! A problem is a dimension `d`, a smoothness vector `s`, a fine-index vector
//! `q` and a target space. Everything downstream works with the reciprocal
//! weight `σ(k)` on the nonnegative orthant, where each point stands for its
//! `2^{#nonzero}` sign images.

mod error;
mod problem;
mod weight;

pub use error::CoreError;
pub use problem::{make_problem, FineIndex, ProblemSpec, Target};
pub use weight::{
    multiplicity, weight_energy, weight_energy_majorant, weight_u, IntegerFactor, LatticePoint,
    WeightFunction, WeightKind,
};
