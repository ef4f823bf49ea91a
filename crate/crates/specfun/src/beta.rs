use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::SpecfunError;

/// `F(κ,β) = 2[1 + log₂(2+βκ)] − (β² − 2β)κ / (ln2 · (2+βκ))`.
///
/// Its sign is the sign of `∂γ/∂β` for `γ = (1−2/β)/(1+log₂(2+βκ))`.
pub fn f_kappa_beta(kappa: f64, beta: f64) -> f64 {
    let x = 2.0 + beta * kappa;
    2.0 * (1.0 + x.log2()) - (beta * beta - 2.0 * beta) * kappa / (LN_2 * x)
}

/// Variant of [`f_kappa_beta`] without the factor `κ` in the second term.
/// Its roots are the tabulated values of `β(κ)`; both agree at `κ = 1`.
pub fn f_kappa_beta_tabulated(kappa: f64, beta: f64) -> f64 {
    let x = 2.0 + beta * kappa;
    2.0 * (1.0 + x.log2()) - (beta * beta - 2.0 * beta) / (LN_2 * x)
}

/// Which equation `optimal_beta` solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BetaCriterion {
    /// Root of [`f_kappa_beta_tabulated`]; reproduces the published `β(κ)` list.
    #[default]
    Tabulated,
    /// Root of [`f_kappa_beta`], the exact maximizer of `γ(·)` in `β`.
    Stationary,
}

impl BetaCriterion {
    pub fn eval(self, kappa: f64, beta: f64) -> f64 {
        match self {
            BetaCriterion::Tabulated => f_kappa_beta_tabulated(kappa, beta),
            BetaCriterion::Stationary => f_kappa_beta(kappa, beta),
        }
    }
}

/// Smallest root `β* > 2` of the tabulated criterion.
pub fn optimal_beta(kappa: f64) -> Result<f64, SpecfunError> {
    optimal_beta_with(kappa, BetaCriterion::Tabulated)
}

/// Smallest root `β* > 2` of `criterion`: scan geometrically from 2 for the
/// first sign change, then bisect.
pub fn optimal_beta_with(kappa: f64, criterion: BetaCriterion) -> Result<f64, SpecfunError> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(SpecfunError::InvalidArgument(format!("kappa = {kappa} must be positive")));
    }
    let f = |b: f64| criterion.eval(kappa, b);
    let mut lo = 2.0;
    let mut hi = lo * 1.01;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 1.01;
        if hi > 1e15 {
            return Err(SpecfunError::NoSignChange { kappa });
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
