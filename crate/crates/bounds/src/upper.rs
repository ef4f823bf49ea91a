use std::f64::consts::{E, PI};

use hypcross_core::{FineIndex, ProblemSpec, Target};
use hypcross_specfun::{a_alpha, zeta};

use crate::constants::{c_d, c_t_d, energy_c_d, gamma_krieg, gamma_rate, gamma_star, WN2B_CONSTANT};
use crate::{BoundParams, BoundResult, BoundsError, ConstantMode, DdPart, TheoremId};

/// Constant printed for the large-`ν` jump bound.
pub const JUMP_PRINTED_CONSTANT: f64 = 38.02;

/// `e^{3.2326/2} · e^{3.2326}`, the product of the two factors in the derivation
/// of the large-`ν` jump bound.
pub fn jump_safe_constant() -> f64 {
    (1.5 * WN2B_CONSTANT).exp()
}

/// Relative slack for hypotheses that are equalities at the boundary.
const HYP_TOL: f64 = 1e-12;

/// Collects the hypotheses of one bound and which of them fail.
struct Hypotheses {
    required: Vec<String>,
    violated: Vec<String>,
}

impl Hypotheses {
    fn new() -> Self {
        Hypotheses {
            required: Vec::new(),
            violated: Vec::new(),
        }
    }

    fn need(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.violated.push(what.clone());
        }
        self.required.push(what);
    }

    fn finish(self, id: TheoremId, value: f64, mode: ConstantMode, extra: Option<String>) -> BoundResult {
        let mut note = format!("requires {}", self.required.join(", "));
        if let Some(extra) = extra {
            note.push_str("; ");
            note.push_str(&extra);
        }
        if !self.violated.is_empty() {
            note.push_str(&format!("; violated: {}", self.violated.join(", ")));
        }
        BoundResult {
            value,
            theorem_id: id,
            applicable: self.violated.is_empty() && value.is_finite() && value > 0.0,
            validity_note: note,
            constant_mode: mode,
        }
    }
}

fn le(a: f64, b: f64) -> bool {
    a <= b * (1.0 + HYP_TOL)
}

fn is_q_one(spec: &ProblemSpec) -> bool {
    spec.constant_q() == Some(FineIndex::Finite(1.0))
}

/// Common finite `q ≥ 1`, if any.
fn constant_q_at_least_one(spec: &ProblemSpec) -> Option<f64> {
    spec.constant_q().and_then(FineIndex::finite).filter(|&q| q >= 1.0)
}

/// `q` used inside formulas: the common value, else the first coordinate's.
fn formula_q(spec: &ProblemSpec) -> f64 {
    spec.constant_q().unwrap_or(spec.q[0]).as_f64()
}

fn require_param(value: Option<f64>, theorem: TheoremId, name: &'static str) -> Result<f64, BoundsError> {
    value.ok_or(BoundsError::MissingParameter { theorem, name })
}

/// Upper bound for `a_n` of the problem under theorem `id`.
///
/// Hypotheses are checked against the canonical problem; when any fails, the
/// formula is still evaluated and the result is marked inapplicable.
pub fn upper_bound(
    spec: &ProblemSpec,
    n: f64,
    id: TheoremId,
    params: &BoundParams,
    mode: ConstantMode,
) -> Result<BoundResult, BoundsError> {
    if !(n >= 1.0) || !n.is_finite() {
        return Err(BoundsError::InvalidArgument(format!("n = {n} must be a finite number at least 1")));
    }
    let d = spec.d;
    let df = d as f64;
    let s1 = spec.s1();
    let ln_n = n.ln();
    let mut h = Hypotheses::new();
    if id.is_energy() {
        h.need(spec.target == Target::H1, "target h1");
    } else {
        h.need(spec.target == Target::L2, "target l2");
    }
    let mut extra = None;

    let value = match id {
        TheoremId::Small => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(is_q_one(spec), "q = 1");
            h.need(d >= 2, "d ≥ 2");
            h.need(n >= 6.0, "n ≥ 6");
            (16.0 / (3.0 * n)).powf(s1 / (1.0 + df.log2()))
        }
        TheoremId::SmallBbb => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(is_q_one(spec), "q = 1");
            h.need(d >= 3, "d ≥ 3");
            h.need(n >= 2.0, "n ≥ 2");
            (c_d(d) / n).powf(s1 / (1.0 + (df - 1.0).log2()))
        }
        TheoremId::SmallB => {
            let beta = require_param(params.beta, id, "beta")?;
            h.need(beta > 2.0, "β > 2");
            h.need(spec.is_constant_s(), "constant s");
            h.need(is_q_one(spec), "q = 1");
            h.need(d >= 2, "d ≥ 2");
            h.need(n >= 2.0 && le(ln_n, df - 1.0), "2 ≤ n ≤ e^(d−1)");
            extra = Some(format!(
                "proof range n ≤ e^(β(d−1)/2) = e^{}",
                beta * (df - 1.0) / 2.0
            ));
            n.powf(-gamma_rate(n, beta, d) * s1)
        }
        TheoremId::SmallBcb => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(is_q_one(spec), "q = 1");
            h.need(d >= 7, "d ≥ 7");
            h.need(n >= 2.0 && le(ln_n, df - 1.0), "2 ≤ n ≤ e^(d−1)");
            n.powf(-gamma_star(n, d) * s1)
        }
        TheoremId::SmallDdQ => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(constant_q_at_least_one(spec).is_some(), "constant finite q ≥ 1");
            let q = formula_q(spec);
            match params.part.unwrap_or_default() {
                DdPart::I => {
                    h.need(d >= 3, "d ≥ 3");
                    h.need(n >= 2.0, "n ≥ 2");
                    (c_d(d) / n).powf(s1 / (q * (1.0 + (df - 1.0).log2())))
                }
                DdPart::II => {
                    h.need(d >= 7, "d ≥ 7");
                    h.need(n >= 2.0 && le(ln_n, df - 1.0), "2 ≤ n ≤ e^(d−1)");
                    n.powf(-gamma_star(n, d) * s1 / q)
                }
            }
        }
        TheoremId::JumpBigNu => {
            let nu = spec.nu;
            h.need((5..d).contains(&nu), "5 ≤ ν < d");
            let t = jump_ratio(spec);
            let needed = (df - nu as f64).log2() / (1.0 + (nu as f64 - 1.0).log2());
            h.need(le(needed, t), format!("s_(ν+1)/s_1 ≥ log₂(d−ν)/(1+log₂(ν−1)) = {needed}"));
            h.need(constant_q_at_least_one(spec).is_some(), "constant finite q ≥ 1");
            let q = formula_q(spec);
            let k = jump_constant(mode);
            (k / n).powf(s1 / (q * (1.0 + (nu as f64 - 1.0).log2())))
        }
        TheoremId::JumpSmallNu => {
            let nu = spec.nu;
            h.need(nu >= 1 && nu < d.min(5), "1 ≤ ν < min(5, d)");
            let t = jump_ratio(spec);
            let needed = 1.5f64.max((df - nu as f64).log2() / 2.0);
            h.need(le(needed, t), format!("s_(ν+1)/s_1 ≥ max(3/2, log₂(d−ν)/2) = {needed}"));
            h.need(constant_q_at_least_one(spec).is_some(), "constant finite q ≥ 1");
            let q = formula_q(spec);
            let c = E.powi(4) * (PI * PI / 3.0 - 1.0).powi(nu as i32 - 1);
            (c / n).powf(s1 / (2.0 * q))
        }
        TheoremId::JumpNu1 => {
            h.need(d >= 5, "d ≥ 5");
            h.need(spec.nu == 1, "s_1 < s_2");
            h.need(constant_q_at_least_one(spec).is_some(), "constant finite q ≥ 1");
            let q = formula_q(spec);
            let t = jump_ratio(spec);
            (c_t_d(t, d) / n).powf(s1 / (q * (1.0 + (df - 1.0).log2())))
        }
        TheoremId::JumpReordered => {
            let all_above_one = spec.q.iter().all(|q| q.finite().is_some_and(|v| v > 1.0));
            h.need(all_above_one, "every q_j finite and > 1");
            let mut r: Vec<f64> = spec.s.iter().zip(&spec.q).map(|(&s, &q)| s / q.as_f64()).collect();
            r.sort_by(f64::total_cmp);
            let r1 = r[0];
            let mu = r.iter().take_while(|&&v| v <= r1 * (1.0 + HYP_TOL)).count();
            h.need((5..d).contains(&mu), "5 ≤ μ < d");
            let t = r.get(mu).map_or(f64::NAN, |&v| v / r1);
            let needed = (df - mu as f64).log2() / (1.0 + (mu as f64 - 1.0).log2());
            h.need(le(needed, t), format!("r_(μ+1)/r_1 ≥ log₂(d−μ)/(1+log₂(μ−1)) = {needed}"));
            extra = Some("exponent r_1/(1+log₂(μ−1)); r_1 already carries the division by q".into());
            let k = jump_constant(mode);
            (k / n).powf(r1 / (1.0 + (mu as f64 - 1.0).log2()))
        }
        TheoremId::LogGrowth => {
            let beta = require_param(params.beta, id, "beta")?;
            let alpha = require_param(params.alpha, id, "alpha")?;
            h.need(beta > 0.0, "β > 0");
            h.need(alpha * beta > 1.0, "α > 1/β");
            h.need(alpha > 1.0, "α > 1");
            let grows = spec
                .s
                .iter()
                .enumerate()
                .all(|(i, &sj)| le((1.0 + beta * ((i + 1) as f64).log2()) * s1, sj));
            h.need(grows, "s_j ≥ (1 + β log₂ j) s_1");
            h.need(constant_q_at_least_one(spec).is_some(), "constant finite q ≥ 1");
            let q = formula_q(spec);
            let a = a_alpha(alpha).unwrap_or(f64::INFINITY);
            let c = zeta(alpha * beta).map_or(f64::INFINITY, |z| 6.0 / 2f64.powf(1.0 / beta) * (z - 1.0));
            (a * c.exp() / n).powf(s1 / (alpha * q))
        }
        TheoremId::EnergyMain0 => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(d >= 3, "d ≥ 3");
            h.need(n >= 2.0, "n ≥ 2");
            (c_d(d) / n).powf((s1 - 1.0) / (2.0 * (1.0 + (df - 1.0).log2())))
        }
        TheoremId::EnergyMain1 => {
            h.need(spec.is_constant_s(), "constant s");
            h.need(d >= 4, "d ≥ 4");
            h.need(n >= 8.0, "n ≥ 8");
            (E * E / n).powf((s1 - 1.0) / (2.0 * df.log2()))
        }
        TheoremId::EnergyMain2 => {
            h.need(spec.is_constant_s(), "constant s");
            let needed = 1.0 + 2f64.powf(s1 - 1.0).max(2f64.powf(1.0 / (s1 - 1.0)));
            h.need(le(needed, df), format!("d ≥ 1 + max(2^(s−1), 2^(1/(s−1))) = {needed}"));
            df.sqrt() * (energy_c_d(d) / n).powf(s1 / (2.0 * (1.0 + (df - 1.0).log2())))
        }
        TheoremId::KriegLower => {
            return Err(BoundsError::InvalidArgument(
                "KRIEG_LOWER is a lower bound; use lower_bound_krieg".into(),
            ))
        }
    };
    Ok(h.finish(id, value, mode, extra))
}

/// Constant of the large-`ν` jump bounds.
pub fn jump_constant(mode: ConstantMode) -> f64 {
    match mode {
        ConstantMode::AsPrinted => JUMP_PRINTED_CONSTANT,
        ConstantMode::DerivationSafe => jump_safe_constant(),
    }
}

/// `s_(ν+1)/s_1`, NaN for constant smoothness.
fn jump_ratio(spec: &ProblemSpec) -> f64 {
    spec.s.get(spec.nu).map_or(f64::NAN, |&v| v / spec.s1())
}

/// `2^{−s/q} n^{−s/(q γ(n,d))}` with `γ(n,d) = log₂(1 + 2d/log₃ n)`, a lower
/// bound for constant smoothness `s` and constant finite `q ≥ 1`.
pub fn lower_bound_krieg(d: usize, s: f64, q: FineIndex, n: f64) -> Result<BoundResult, BoundsError> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(BoundsError::InvalidArgument(format!("s = {s} must be positive")));
    }
    if !(n >= 1.0) || !n.is_finite() {
        return Err(BoundsError::InvalidArgument(format!("n = {n} must be a finite number at least 1")));
    }
    let mut h = Hypotheses::new();
    h.need(d >= 2, "d ≥ 2");
    let qv = q.as_f64();
    h.need(q.finite().is_some_and(|v| v >= 1.0), "finite q ≥ 1");
    let ln_top = d as f64 * 3f64.ln();
    if q == FineIndex::Finite(1.0) {
        h.need(n >= 3.0 && le(n.ln(), ln_top), "3 ≤ n ≤ 3^d");
    } else {
        h.need(n > 2.0 && le(n.ln(), ln_top), "2 < n ≤ 3^d");
    }
    let value = 2f64.powf(-s / qv) * n.powf(-s / (qv * gamma_krieg(n, d)));
    Ok(h.finish(TheoremId::KriegLower, value, ConstantMode::AsPrinted, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypcross_core::ProblemSpec;

    #[test]
    fn safe_constant_value() {
        assert!((jump_safe_constant() - 127.60).abs() < 0.01);
    }

    #[test]
    fn lower_bound_rejects_bad_input() {
        assert!(lower_bound_krieg(2, 0.0, FineIndex::Finite(1.0), 9.0).is_err());
        let spec = ProblemSpec::constant(3, 1.0, FineIndex::Finite(1.0)).unwrap();
        assert!(upper_bound(&spec, 0.5, TheoremId::Small, &BoundParams::default(), ConstantMode::AsPrinted).is_err());
    }
}
