//! Special functions and scalar solvers used by the bounds: the Riemann and
//! Hurwitz zeta functions, the sup-constant `A_α`, the one-dimensional
//! factors `B_j`, and the root `β(κ)` of `F(κ, ·)`.

mod beta;
mod factors;
mod zeta;

use thiserror::Error;

pub use beta::{f_kappa_beta, f_kappa_beta_tabulated, optimal_beta, optimal_beta_with, BetaCriterion};
pub use factors::{a_alpha, b_factor, omega_m, sobolev_factor};
pub use zeta::{hurwitz_zeta, zeta, zeta_with, ZetaConfig, ZetaMethod};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("series diverges at argument {t} (needs > 1)")]
    DivergentArgument { t: f64 },
    #[error("alpha = {alpha} must exceed 1")]
    AlphaTooSmall { alpha: f64 },
    #[error("no sign change of F(kappa, .) found for kappa = {kappa}")]
    NoSignChange { kappa: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
