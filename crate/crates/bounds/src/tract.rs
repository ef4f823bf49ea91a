use std::f64::consts::LN_2;

use hypcross_specfun::zeta;
use serde::{Deserialize, Serialize};

use crate::BoundsError;

/// How the smoothness `s_j` grows with the coordinate index `j ≥ 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum GrowthRule {
    /// `s_j = s`.
    Constant { s: f64 },
    /// `s_j = s_1 (1 + β log₂ j)`.
    LogGrowth { s1: f64, beta: f64 },
    /// Explicit values `s_1, s_2, …`; no analytic tail.
    Explicit(Vec<f64>),
}

impl GrowthRule {
    pub fn s(&self, j: usize) -> f64 {
        match self {
            GrowthRule::Constant { s } => *s,
            GrowthRule::LogGrowth { s1, beta } => s1 * (1.0 + beta * (j as f64).log2()),
            GrowthRule::Explicit(v) => v[j - 1],
        }
    }
}

/// Strong polynomial tractability check for `q = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TractabilityReport {
    pub tau: f64,
    pub d_max: usize,
    /// `Π_{j≤d_max} (2ζ(2τ s_j) − 1)`; `None` when some `2τ s_j ≤ 1`.
    pub partial_product: Option<f64>,
    /// `Σ_{j≤d_max} 2^{−2τ s_j}`.
    pub partial_sum: f64,
    /// `min_j 2τ s_j ≤ 1`, so the product diverges termwise.
    pub flagged: bool,
    /// `limsup ln j / s_j`, when the rule determines it.
    pub limsup: Option<f64>,
    /// `Σ_j 2^{−2τ s_j} < ∞`, when the rule determines it.
    pub verdict: Option<bool>,
}

/// Partial product and sum for `j ≤ d_max` plus the tail verdict of the rule.
///
/// For logarithmic growth the terms are `2^{−2τ s_1} j^{−2τ s_1 β}`, so the
/// series converges iff `2τ s_1 β > 1`. Constant smoothness never converges.
pub fn tractability_verdict(rule: &GrowthRule, tau: f64, d_max: usize) -> Result<TractabilityReport, BoundsError> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(BoundsError::InvalidArgument(format!("tau = {tau} must be positive")));
    }
    if d_max == 0 {
        return Err(BoundsError::InvalidArgument("d_max must be at least 1".into()));
    }
    if let GrowthRule::Explicit(v) = rule {
        if v.len() < d_max {
            return Err(BoundsError::InvalidArgument(format!(
                "explicit rule has {} values, d_max = {d_max}",
                v.len()
            )));
        }
    }
    let mut product = Some(1.0);
    let mut sum = 0.0;
    let mut flagged = false;
    for j in 1..=d_max {
        let x = 2.0 * tau * rule.s(j);
        sum += 2f64.powf(-x);
        if x <= 1.0 {
            flagged = true;
            product = None;
        } else if let Some(p) = product {
            product = Some(p * (2.0 * zeta(x)? - 1.0));
        }
    }
    let (limsup, verdict) = match *rule {
        GrowthRule::Constant { .. } => (Some(f64::INFINITY), Some(false)),
        GrowthRule::LogGrowth { s1, beta } => {
            let limsup = if beta > 0.0 { LN_2 / (s1 * beta) } else { f64::INFINITY };
            (Some(limsup), Some(2.0 * tau * s1 * beta > 1.0))
        }
        GrowthRule::Explicit(_) => (None, None),
    };
    Ok(TractabilityReport {
        tau,
        d_max,
        partial_product: product,
        partial_sum: sum,
        flagged,
        limsup,
        verdict,
    })
}
