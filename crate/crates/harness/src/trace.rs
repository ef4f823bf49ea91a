use hypcross_core::{ProblemSpec, Target, WeightFunction};
use hypcross_count::count_exact;
use hypcross_enumerate::{singular_values, LatticeWeight};
use hypcross_specfun::zeta;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioPoint {
    pub n: u64,
    pub a_n: f64,
    /// `n^{s_1} a_n / (ln n)^{(ν−1)s_1}`
    pub ratio: f64,
}

/// `R(n) = n^{s_1} a_n / (ln n)^{(ν−1) s_1}` at increasing checkpoints `n ≥ 3`.
pub fn asymptotic_ratio_trace(spec: &ProblemSpec, checkpoints: &[u64]) -> Result<Vec<RatioPoint>, HarnessError> {
    if checkpoints.iter().any(|&n| n < 3) || checkpoints.windows(2).any(|w| w[1] <= w[0]) {
        return Err(HarnessError::InvalidArgument(
            "checkpoints must be increasing and at least 3".into(),
        ));
    }
    let Some(&n_max) = checkpoints.last() else {
        return Ok(Vec::new());
    };
    let seq = singular_values(&WeightFunction::new(spec), n_max)?;
    let s1 = spec.s1();
    let power = (spec.nu as f64 - 1.0) * s1;
    Ok(checkpoints
        .iter()
        .map(|&n| {
            let a_n = seq.values.get(n as usize - 1).copied().unwrap_or(0.0);
            let nf = n as f64;
            RatioPoint {
                n,
                a_n,
                ratio: nf.powf(s1) * a_n / nf.ln().powf(power),
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CountRatioPoint {
    pub r: f64,
    pub count: u64,
    /// `C(r) / (r^{1/s_1} (ln C(r))^{ν−1})`
    pub ratio: f64,
}

/// Counting form of the ratio trace: `C(r)/(r^{1/s_1} (ln C(r))^{ν−1})`, which
/// for `s = 1` is `C(r)/(r (ln C(r))^{d−1})`.
pub fn counting_ratio_trace(spec: &ProblemSpec, radii: &[f64]) -> Result<Vec<CountRatioPoint>, HarnessError> {
    if spec.target != Target::L2 {
        return Err(HarnessError::InvalidArgument("counting applies to l2 problems".into()));
    }
    let s1 = spec.s1();
    radii
        .iter()
        .map(|&r| {
            let count = count_exact(spec, r)?.value;
            let c = count as f64;
            Ok(CountRatioPoint {
                r,
                count,
                ratio: c / (r.powf(1.0 / s1) * c.ln().powi(spec.nu as i32 - 1)),
            })
        })
        .collect()
}

/// Positive nonincreasing sequence indexed from 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceRule {
    /// `k^{−p}`
    Power { p: f64 },
    /// `base^{−k}`
    Geometric { base: f64 },
    /// `1` at `k = 1`, zero afterwards.
    Single,
}

impl SequenceRule {
    fn validate(self) -> Result<(), HarnessError> {
        let ok = match self {
            SequenceRule::Power { p } => p > 0.0 && p.is_finite(),
            SequenceRule::Geometric { base } => base > 1.0 && base.is_finite(),
            SequenceRule::Single => true,
        };
        if ok {
            Ok(())
        } else {
            Err(HarnessError::InvalidArgument(format!("{self:?} is not a positive null sequence")))
        }
    }

    /// `ln x_k` for `k ≥ 1`.
    pub fn log_value(self, k: u64) -> f64 {
        match self {
            SequenceRule::Power { p } => -p * (k as f64).ln(),
            SequenceRule::Geometric { base } => -(k as f64) * base.ln(),
            SequenceRule::Single if k == 1 => 0.0,
            SequenceRule::Single => f64::NEG_INFINITY,
        }
    }

    /// `Σ_k x_k^{1/β}`.
    pub fn root_sum(self, beta: f64) -> Result<f64, HarnessError> {
        Ok(match self {
            SequenceRule::Power { p } => zeta(p / beta)?,
            SequenceRule::Geometric { base } => 1.0 / (base.powf(1.0 / beta) - 1.0),
            SequenceRule::Single => 1.0,
        })
    }
}

/// Products `a_j b_k` on `ℕ²`, indices shifted so `k = 0` is the first term.
struct TensorPair {
    a: SequenceRule,
    b: SequenceRule,
}

impl LatticeWeight for TensorPair {
    fn dim(&self) -> usize {
        2
    }

    fn log_sigma(&self, k: &[u64]) -> f64 {
        self.a.log_value(k[0] + 1) + self.b.log_value(k[1] + 1)
    }

    fn multiplicity(&self, _k: &[u64]) -> u64 {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TensorRow {
    pub n: u64,
    pub c_n: f64,
    /// `n^β c_n / (ln n)^α`
    pub trace: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TensorMergeReport {
    /// `λ (Σ_k b_k^{1/β})^β`
    pub target: f64,
    pub rows: Vec<TensorRow>,
}

/// Non-increasing rearrangement `c_n` of `(a_j b_k)` traced as
/// `n^β c_n / (ln n)^α` against `λ (Σ_k b_k^{1/β})^β`, the limit when
/// `n^β a_n / (ln n)^α → λ`.
///
/// Rows are reported at `n = 1, 2, 5, 10, 20, 50, …` up to `n_max`, and at `n_max`.
pub fn tensor_merge_check(
    a: SequenceRule,
    b: SequenceRule,
    n_max: u64,
    alpha: f64,
    beta: f64,
    lambda: f64,
) -> Result<TensorMergeReport, HarnessError> {
    a.validate()?;
    b.validate()?;
    if !(beta > 0.0) {
        return Err(HarnessError::InvalidArgument(format!("beta = {beta} must be positive")));
    }
    let seq = singular_values(&TensorPair { a, b }, n_max)?;
    let mut grid = Vec::new();
    let mut decade = 1u64;
    'outer: loop {
        for m in [1, 2, 5] {
            let n = decade * m;
            if n >= n_max {
                break 'outer;
            }
            grid.push(n);
        }
        decade *= 10;
    }
    grid.push(n_max);
    let rows = grid
        .into_iter()
        .filter_map(|n| {
            let c_n = *seq.values.get(n as usize - 1)?;
            let nf = n as f64;
            let log = if alpha == 0.0 { 1.0 } else { nf.ln().powf(alpha) };
            Some(TensorRow {
                n,
                c_n,
                trace: nf.powf(beta) * c_n / log,
            })
        })
        .collect();
    Ok(TensorMergeReport {
        target: lambda * b.root_sum(beta)?.powf(beta),
        rows,
    })
}
