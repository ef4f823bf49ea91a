use hypcross_core::ProblemSpec;
use hypcross_specfun::{b_factor, sobolev_factor};
use serde::{Deserialize, Serialize};

use crate::BoundsError;

/// Norm family behind the one-dimensional factors of the asymptotic constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum NormFamily {
    /// `(1+|k|^q)^{s/q}` weights: `B_j = 1 + 2Σ_m (1+m^{q_j})^{−s_j/(s_1 q_j)}`.
    #[default]
    Fractional,
    /// Integer Sobolev weights `(1+k²+…+k^{2m})^{1/2}` with `s = m ∈ ℕ^d`.
    SobolevInteger,
}

/// `lim n^{s_1} a_n / (ln n)^{(ν−1)s_1} = [2^ν/(ν−1)! · Π_{j>ν} B_j]^{s_1}`.
pub fn asymptotic_constant(spec: &ProblemSpec, family: NormFamily) -> Result<f64, BoundsError> {
    let nu = spec.nu;
    let s1 = spec.s1();
    let factorial: f64 = (1..nu).map(|i| i as f64).product();
    let mut base = 2f64.powi(nu as i32) / factorial;
    match family {
        NormFamily::Fractional => {
            for (&sj, &qj) in spec.s[nu..].iter().zip(&spec.q[nu..]) {
                base *= b_factor(sj, s1, qj.as_f64())?;
            }
        }
        NormFamily::SobolevInteger => {
            let to_int = |v: f64| {
                if v.fract() == 0.0 && v >= 1.0 && v <= u32::MAX as f64 {
                    Ok(v as u32)
                } else {
                    Err(BoundsError::InvalidArgument(format!(
                        "integer Sobolev smoothness must be a positive integer, got {v}"
                    )))
                }
            };
            let m1 = to_int(s1)?;
            for &sj in &spec.s[nu..] {
                base *= sobolev_factor(to_int(sj)?, m1)?;
            }
        }
    }
    Ok(base.powf(s1))
}
