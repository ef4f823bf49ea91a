use crate::zeta::{hurwitz_zeta, zeta};
use crate::SpecfunError;

/// `A_α = sup_{r≥1} (2⌊r⌋ − 1) / r^α` for `α > 1`.
///
/// The sup sits at an integer `m` because the numerator is constant on `[m, m+1)`.
/// `x ↦ (2x−1)x^{−α}` increases up to `x* = α/(2(α−1))` and decreases after, so
/// only `1`, `⌊x*⌋` and `⌈x*⌉` can be the maximizer.
pub fn a_alpha(alpha: f64) -> Result<f64, SpecfunError> {
    if !(alpha > 1.0) {
        return Err(SpecfunError::AlphaTooSmall { alpha });
    }
    if alpha >= 3f64.log2() {
        return Ok(1.0);
    }
    let f = |m: f64| (2.0 * m - 1.0) * m.powf(-alpha);
    let peak = alpha / (2.0 * (alpha - 1.0));
    Ok([1.0, peak.floor().max(1.0), peak.ceil().max(1.0)]
        .into_iter()
        .map(f)
        .fold(f64::NEG_INFINITY, f64::max))
}

/// `ω_m(ℓ) = (Σ_{n=0}^m ℓ^{2n})^{1/2}`, so `ω_m(0) = 1`.
pub fn omega_m(m: u32, ell: i64) -> f64 {
    let x = (ell as f64) * (ell as f64);
    let mut sum = 0.0;
    let mut p = 1.0;
    for _ in 0..=m {
        sum += p;
        p *= x;
    }
    sum.sqrt()
}

/// Number of terms summed directly before switching to a zeta expansion.
fn direct_cutoff(q: f64) -> u64 {
    // The expansion variable m^{-q} must be at most 1/4 for quick convergence.
    4f64.powf(1.0 / q).ceil().clamp(16.0, 2e6) as u64
}

/// `B_j = 1 + 2 Σ_{m≥1} (1 + m^{q})^{−s_j/(s_1 q)}`, or `1 + 2ζ(s_j/s_1)` when `q = ∞`.
///
/// `q` is passed as `f64`; use `f64::INFINITY` for the `max(1,|k|)` weights.
pub fn b_factor(s_j: f64, s_1: f64, q: f64) -> Result<f64, SpecfunError> {
    if !(s_1 > 0.0) || !(s_j > 0.0) || !(q > 0.0) {
        return Err(SpecfunError::InvalidArgument(format!(
            "b_factor needs positive inputs, got s_j={s_j}, s_1={s_1}, q={q}"
        )));
    }
    let rho = s_j / s_1;
    if !(rho > 1.0 + 1e-9) {
        return Err(SpecfunError::DivergentArgument { t: rho });
    }
    if q.is_infinite() {
        return Ok(1.0 + 2.0 * zeta(rho)?);
    }
    let g = rho / q;
    let cutoff = direct_cutoff(q);
    let mut head = 0.0;
    for m in (1..=cutoff).rev() {
        head += (-g * (m as f64).powf(q).ln_1p()).exp();
    }
    // m^{-ρ}(1 + m^{-q})^{-g} = Σ_i binom(-g, i) m^{-ρ-qi}
    let a = cutoff as f64 + 1.0;
    let mut tail = 0.0;
    let mut binom = 1.0;
    for i in 0..2000 {
        let term = binom * hurwitz_zeta(rho + q * i as f64, a)?;
        tail += term;
        if term.abs() <= 1e-17 * (head + tail).abs() {
            break;
        }
        binom *= -(g + i as f64) / (i as f64 + 1.0);
    }
    Ok(1.0 + 2.0 * (head + tail))
}

/// `1 + 2 Σ_{ℓ≥1} (1 + ℓ² + … + ℓ^{2 m_j})^{−1/(2 m_1)}`, the integer-smoothness
/// counterpart of [`b_factor`].
pub fn sobolev_factor(m_j: u32, m_1: u32) -> Result<f64, SpecfunError> {
    if m_1 == 0 || m_j == 0 {
        return Err(SpecfunError::InvalidArgument(
            "integer smoothness must be at least 1".into(),
        ));
    }
    let rho = m_j as f64 / m_1 as f64;
    if m_j <= m_1 {
        return Err(SpecfunError::DivergentArgument { t: rho });
    }
    let g = 1.0 / (2.0 * m_1 as f64);
    // (1 + ℓ² + … + ℓ^{2m})^{-g} = ℓ^{-ρ} P(ℓ^{-2})^{-g} with P(x) = 1 + x + … + x^m
    let log_p = |x: f64| {
        let mut sum = 0.0;
        let mut p = 1.0;
        for _ in 0..=m_j {
            sum += p;
            p *= x;
        }
        sum.ln()
    };
    let cutoff = 16u64;
    let mut head = 0.0;
    for l in (1..=cutoff).rev() {
        let l = l as f64;
        head += (-rho * l.ln() - g * log_p(1.0 / (l * l))).exp();
    }
    // P(x)^{-g} = Σ_n c_n x^n by the power recurrence for a series with unit coefficients.
    let power = -g;
    let mut coeffs: Vec<f64> = vec![1.0];
    let a = cutoff as f64 + 1.0;
    let mut tail = 0.0;
    for n in 0..400usize {
        if n > 0 {
            let mut c = 0.0;
            for k in 1..=n.min(m_j as usize) {
                c += ((power + 1.0) * k as f64 - n as f64) * coeffs[n - k];
            }
            coeffs.push(c / n as f64);
        }
        let term = coeffs[n] * hurwitz_zeta(rho + 2.0 * n as f64, a)?;
        tail += term;
        if n > m_j as usize && term.abs() <= 1e-17 * (head + tail).abs() {
            break;
        }
    }
    Ok(1.0 + 2.0 * (head + tail))
}
