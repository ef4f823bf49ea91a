use serde::{Deserialize, Serialize};

use crate::SpecfunError;

/// Arguments this close to 1 are treated as the pole.
const POLE_GAP: f64 = 1e-9;

/// `B_2, B_4, …, B_30`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZetaMethod {
    /// Direct partial sum, integral of the tail, and Bernoulli corrections.
    EulerMaclaurin,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaConfig {
    /// Target relative accuracy, in `(0, 1e-6]`.
    pub tolerance: f64,
    pub method: ZetaMethod,
}

impl Default for ZetaConfig {
    fn default() -> Self {
        ZetaConfig {
            tolerance: 1e-12,
            method: ZetaMethod::EulerMaclaurin,
        }
    }
}

/// Riemann zeta `ζ(t) = Σ_{j≥1} j^{-t}` for `t > 1`.
pub fn zeta(t: f64) -> Result<f64, SpecfunError> {
    hurwitz_zeta(t, 1.0)
}

pub fn zeta_with(t: f64, config: &ZetaConfig) -> Result<f64, SpecfunError> {
    hurwitz_with(t, 1.0, config)
}

/// Hurwitz zeta `ζ(t, a) = Σ_{k≥0} (k+a)^{-t}` for `t > 1`, `a > 0`.
pub fn hurwitz_zeta(t: f64, a: f64) -> Result<f64, SpecfunError> {
    hurwitz_with(t, a, &ZetaConfig::default())
}

fn hurwitz_with(t: f64, a: f64, config: &ZetaConfig) -> Result<f64, SpecfunError> {
    if !(t > 1.0 + POLE_GAP) || t.is_nan() {
        return Err(SpecfunError::DivergentArgument { t });
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(SpecfunError::InvalidArgument(format!("Hurwitz shift a = {a}")));
    }
    if !(config.tolerance > 0.0 && config.tolerance <= 1e-6) {
        return Err(SpecfunError::InvalidArgument(format!(
            "zeta tolerance {} outside (0, 1e-6]",
            config.tolerance
        )));
    }
    if t.is_infinite() {
        return Ok(if a == 1.0 { 1.0 } else if a < 1.0 { f64::INFINITY } else { 0.0 });
    }
    let ZetaMethod::EulerMaclaurin = config.method;
    // Shift far enough that the Bernoulli corrections shrink geometrically.
    let shift = (t.ceil() + 12.0 - a).max(0.0) as u64;
    let mut head = 0.0;
    for k in (0..shift).rev() {
        head += (a + k as f64).powf(-t);
    }
    let x = a + shift as f64;
    let xt = x.powf(-t);
    let mut sum = head + x * xt / (t - 1.0) + 0.5 * xt;
    // term_j = B_{2j}/(2j)! · t(t+1)…(t+2j-2) · x^{-t-2j+1}
    let mut rising = t;
    let mut fact = 2.0;
    let mut power = xt / x;
    let eps = config.tolerance * 1e-4;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = b / fact * rising * power;
        sum += term;
        if term.abs() <= eps * sum.abs() {
            break;
        }
        let m = 2.0 * (j as f64 + 1.0);
        rising *= (t + m - 1.0) * (t + m);
        fact *= (m + 1.0) * (m + 2.0);
        power /= x * x;
    }
    Ok(sum)
}
