use serde::{Deserialize, Serialize};

/// Rounded-up `16(ζ(3) − 1)` as printed in `2ζ(u) − 1 < 1 + 3.2326·2^{−u}`.
pub const WN2B_CONSTANT: f64 = 3.2326;

/// `C(d) = [1 + (1 + 2/log₂(d−1))/(d−1)]^{d−1}` for `d ≥ 3`.
pub fn c_d(d: usize) -> f64 {
    let m = d as f64 - 1.0;
    (1.0 + (1.0 + 2.0 / m.log2()) / m).powf(m)
}

/// `δ(d)` with `(C(d)/e^{d−1})^{1/(1+log₂(d−1))} = e^{−δ(d)(d−1)}`.
pub fn delta_d(d: usize) -> f64 {
    let m = d as f64 - 1.0;
    (m - c_d(d).ln()) / (m * (1.0 + m.log2()))
}

/// `C(t,d) = exp(3.2326 / (2^t (d−1)^{t−1}))`.
pub fn c_t_d(t: f64, d: usize) -> f64 {
    let m = d as f64 - 1.0;
    (WN2B_CONSTANT / (2f64.powf(t) * m.powf(t - 1.0))).exp()
}

/// `e(2.154 + 3/d)`, the constant of the energy bound with the `√d` prefactor.
pub fn energy_c_d(d: usize) -> f64 {
    std::f64::consts::E * (2.154 + 3.0 / d as f64)
}

/// `γ(n,β,d) = (1 − 2/β) / (1 + log₂(2 + β(d−1)/ln n))`.
pub fn gamma_rate(n: f64, beta: f64, d: usize) -> f64 {
    (1.0 - 2.0 / beta) / (1.0 + (2.0 + beta * (d as f64 - 1.0) / n.ln()).log2())
}

/// `γ*`: [`gamma_rate`] at `β = (4κ+1)^{11/8}` with `κ = (d−1)/ln n`.
pub fn gamma_star(n: f64, d: usize) -> f64 {
    let kappa = (d as f64 - 1.0) / n.ln();
    gamma_rate(n, (4.0 * kappa + 1.0).powf(11.0 / 8.0), d)
}

/// `γ(n,d) = log₂(1 + 2d/log₃ n)` of the lower bound.
pub fn gamma_krieg(n: f64, d: usize) -> f64 {
    (1.0 + 2.0 * d as f64 / (n.ln() / 3f64.ln())).log2()
}

/// Bound `constant · n^{−γ s}` for constant smoothness `s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub gamma: f64,
    pub constant: f64,
    pub form: String,
}

/// Rate of the constant-smoothness `q = 1` bound at `n`: `γ(n,β,d)` for a
/// given `β`, otherwise the fitted `γ*`.
pub fn rate_report(n: f64, d: usize, beta: Option<f64>) -> RateReport {
    let (gamma, form) = match beta {
        Some(b) => (gamma_rate(n, b, d), format!("n^(-gamma(n, {b}, {d})*s)")),
        None => (gamma_star(n, d), format!("n^(-gamma*(n, {d})*s)")),
    };
    RateReport {
        gamma,
        constant: 1.0,
        form,
    }
}

/// Interval of `ln n` on which `γ* > 1/(1+log₂(d−1))` is guaranteed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImprovementRegion {
    pub d: usize,
    pub ln_n_lower: f64,
    pub ln_n_upper: f64,
    pub nonempty: bool,
}

/// `[4(d−1)^{3/5}, 2(d−1)/7]`; stated for `d ≥ 7`.
pub fn improvement_region_check(d: usize) -> ImprovementRegion {
    let m = d as f64 - 1.0;
    let ln_n_lower = 4.0 * m.powf(0.6);
    let ln_n_upper = 2.0 * m / 7.0;
    ImprovementRegion {
        d,
        ln_n_lower,
        ln_n_upper,
        nonempty: ln_n_lower <= ln_n_upper,
    }
}
