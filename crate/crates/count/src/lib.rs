//! The counting function `C(r) = #{k ∈ ℤ^d : u_{s,q}(k) ≤ r}` and its
//! zeta-product upper bound.
//!
//! Counts recurse over the coordinate with the largest smoothness: for each
//! admissible `|k_d| = m` the remaining coordinates must satisfy
//! `u' ≤ r / u_d(m)`. Integer-valued weights use exact `u128` thresholds with
//! floor division; other weights work with `ln r`.

use std::collections::HashMap;

use hypcross_core::{make_problem, CoreError, FineIndex, IntegerFactor, ProblemSpec, Target, WeightFunction};
use hypcross_specfun::{a_alpha, zeta, SpecfunError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative inward snap applied to every threshold.
pub const SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CountError {
    #[error("radius r = {r} must be a finite number at least 1")]
    InvalidRadius { r: f64 },
    #[error("count recursion exceeded its cap of {cap} nodes")]
    BudgetExceeded { cap: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bound not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

/// Exact lattice count at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    /// Count at `r(1 + 1e-12)`.
    pub value: u64,
    /// The count at `r(1 − 1e-12)` differs (the lower radius is clamped at 1).
    pub tie_sensitive: bool,
    pub r: f64,
}

/// Recursion limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    /// Maximum number of recursion nodes per count.
    pub node_cap: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            node_cap: 100_000_000,
        }
    }
}

fn check_radius(r: f64) -> Result<(), CountError> {
    if r >= 1.0 && r.is_finite() {
        Ok(())
    } else {
        Err(CountError::InvalidRadius { r })
    }
}

/// One-dimensional count `#{k ∈ ℤ : u_{s,q}(k) ≤ r}`.
pub fn count_1d(s: f64, q: FineIndex, r: f64) -> Result<CountResult, CountError> {
    let spec = make_problem(1, &[s], &[q], Target::L2)?;
    count_exact(&spec, r)
}

/// Exact count `C(r, s, q)` for an `L2` problem.
pub fn count_exact(spec: &ProblemSpec, r: f64) -> Result<CountResult, CountError> {
    count_exact_with(spec, r, &CountConfig::default())
}

pub fn count_exact_with(
    spec: &ProblemSpec,
    r: f64,
    config: &CountConfig,
) -> Result<CountResult, CountError> {
    check_radius(r)?;
    let weight = WeightFunction::tensor(spec)?;
    let hi = r * (1.0 + SNAP);
    let lo = (r * (1.0 - SNAP)).max(1.0);
    let (value, lower) = match weight.integer_factors() {
        // u128 thresholds need r well inside the representable range
        Some(factors) if hi < 2f64.powi(120) => {
            let mut counter = IntCounter::new(factors, config.node_cap);
            let r_hi = hi.floor() as u128;
            let r_lo = lo.floor() as u128;
            let value = counter.count(factors.len(), r_hi)?;
            let lower = if r_lo == r_hi { value } else { counter.count(factors.len(), r_lo)? };
            (value, lower)
        }
        _ => {
            let mut counter = LogCounter::new(&weight, config.node_cap);
            let t = hi.ln();
            counter.gap = t - lo.ln();
            counter.count(spec.d, t)?
        }
    };
    Ok(CountResult {
        value,
        tie_sensitive: value != lower,
        r,
    })
}

struct IntCounter<'a> {
    factors: &'a [IntegerFactor],
    memo: HashMap<(usize, u128), u64>,
    nodes: u64,
    cap: u64,
}

impl<'a> IntCounter<'a> {
    fn new(factors: &'a [IntegerFactor], cap: u64) -> Self {
        IntCounter {
            factors,
            memo: HashMap::new(),
            nodes: 0,
            cap,
        }
    }

    /// Largest `m` with `f(m) ≤ bound`, for `bound ≥ 1`.
    fn max_index(f: IntegerFactor, bound: u128) -> u64 {
        let fits = |m: u64| f.eval(m).is_some_and(|v| v <= bound);
        let b = bound as f64;
        let guess = match f {
            IntegerFactor::Poly { q, p } => (b.powf(1.0 / p as f64) - 1.0).max(0.0).powf(1.0 / q as f64),
            IntegerFactor::Max { s } => b.powf(1.0 / s as f64),
        };
        let mut m = guess.clamp(0.0, 1e18) as u64;
        while m > 0 && !fits(m) {
            m -= 1;
        }
        while fits(m + 1) {
            m += 1;
        }
        m
    }

    /// Points of `ℤ^level` with product weight `≤ bound`.
    fn count(&mut self, level: usize, bound: u128) -> Result<u64, CountError> {
        if bound == 0 {
            return Ok(0);
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(CountError::BudgetExceeded { cap: self.cap });
        }
        let f = self.factors[level - 1];
        if level == 1 {
            return Ok(2 * Self::max_index(f, bound) + 1);
        }
        if let Some(&v) = self.memo.get(&(level, bound)) {
            return Ok(v);
        }
        let top = Self::max_index(f, bound);
        let mut total = 0u64;
        for m in 0..=top {
            let fm = f.eval(m).expect("bounded by max_index");
            let sub = self.count(level - 1, bound / fm)?;
            total += if m == 0 { sub } else { 2 * sub };
        }
        self.memo.insert((level, bound), total);
        Ok(total)
    }
}

struct LogCounter<'a> {
    weight: &'a WeightFunction,
    memo: HashMap<(usize, i64), (u64, u64)>,
    nodes: u64,
    cap: u64,
    /// Distance in `ln r` between the upper and lower thresholds.
    gap: f64,
}

impl<'a> LogCounter<'a> {
    fn new(weight: &'a WeightFunction, cap: u64) -> Self {
        LogCounter {
            weight,
            memo: HashMap::new(),
            nodes: 0,
            cap,
            gap: 0.0,
        }
    }

    /// Largest `m` with `ln u_j(m) ≤ t`, for `t ≥ 0`.
    fn max_index(&self, j: usize, t: f64) -> u64 {
        let spec = self.weight.spec();
        let s = spec.s[j];
        let guess = match spec.q[j] {
            FineIndex::Finite(q) => (t * q / s).exp_m1().powf(1.0 / q),
            FineIndex::Infinite => (t / s).exp(),
        };
        let fits = |m: u64| self.weight.log_u_coord(j, m) <= t;
        let mut m = if guess.is_finite() { guess.clamp(0.0, 1e18) as u64 } else { 1_000_000_000_000_000_000 };
        while m > 0 && !fits(m) {
            m -= 1;
        }
        while fits(m + 1) {
            m += 1;
        }
        m
    }

    /// Counts of points of `ℤ^level` with `ln u ≤ t` and with `ln u ≤ t − gap`.
    fn count(&mut self, level: usize, t: f64) -> Result<(u64, u64), CountError> {
        if t < 0.0 {
            return Ok((0, 0));
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(CountError::BudgetExceeded { cap: self.cap });
        }
        let j = level - 1;
        let t_lo = t - self.gap;
        if level == 1 {
            let hi = 2 * self.max_index(j, t) + 1;
            let lo = if t_lo < 0.0 { 0 } else { 2 * self.max_index(j, t_lo) + 1 };
            return Ok((hi, lo));
        }
        let key = (level, (t * 2f64.powi(48)).round() as i64);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let top = self.max_index(j, t);
        let (mut hi, mut lo) = (0u64, 0u64);
        for m in 0..=top {
            let (h, l) = self.count(level - 1, t - self.weight.log_u_coord(j, m))?;
            let mult = if m == 0 { 1 } else { 2 };
            hi += mult * h;
            lo += mult * l;
        }
        self.memo.insert(key, (hi, lo));
        Ok((hi, lo))
    }
}

/// `A_α Π_{j≥2} (2ζ(α s_j) − 1) r^α`, an upper bound for the count of
/// `Π_j (1+|k_j|)^{s_j} ≤ r` when `s` is nondecreasing with `s_1 = 1`.
pub fn count_upper_clever(s: &[f64], r: f64, alpha: f64) -> Result<f64, CountError> {
    check_radius(r)?;
    if s.is_empty() {
        return Err(CountError::InvalidArgument("empty smoothness vector".into()));
    }
    if (s[0] - 1.0).abs() > 1e-12 {
        return Err(CountError::InvalidArgument(format!(
            "smoothness must be normalized to s_1 = 1, got s_1 = {}",
            s[0]
        )));
    }
    if s.windows(2).any(|w| !(w[1] >= w[0])) {
        return Err(CountError::InvalidArgument("smoothness must be nondecreasing".into()));
    }
    let mut value = a_alpha(alpha)? * r.powf(alpha);
    for &sj in &s[1..] {
        value *= 2.0 * zeta(alpha * sj)? - 1.0;
    }
    Ok(value)
}

/// [`count_upper_clever`] for a problem with every `q_j ≥ 1` finite.
///
/// `(1+m^q)^{s/q} ≥ (1+m)^{s/q}`, so the count is dominated by the `q = 1`
/// count with exponents `t = s/q`. Dividing by `t_1` gives the normalized form
/// at radius `r^{1/t_1}`.
pub fn clever_bound(spec: &ProblemSpec, r: f64, alpha: f64) -> Result<f64, CountError> {
    let mut t = Vec::with_capacity(spec.d);
    for (&s, &q) in spec.s.iter().zip(&spec.q) {
        match q {
            FineIndex::Finite(q) if q >= 1.0 => t.push(s / q),
            other => {
                return Err(CountError::NotApplicable(format!(
                    "needs finite q ≥ 1 in every coordinate, got q = {other}"
                )))
            }
        }
    }
    t.sort_by(f64::total_cmp);
    let t1 = t[0];
    let normalized: Vec<f64> = t.iter().map(|v| v / t1).collect();
    count_upper_clever(&normalized, r.powf(1.0 / t1), alpha)
}
