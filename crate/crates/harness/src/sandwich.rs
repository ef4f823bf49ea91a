use hypcross_bounds::{lower_bound_krieg, upper_bound, BoundParams, ConstantMode, TheoremId};
use hypcross_core::{FineIndex, ProblemSpec, Target, WeightFunction};
use hypcross_enumerate::singular_values;
use hypcross_specfun::optimal_beta;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// Relative slack of every sandwich comparison.
const REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UpperEntry {
    pub theorem_id: TheoremId,
    pub value: f64,
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SandwichRow {
    pub n: u64,
    pub exact: f64,
    /// Applicable lower bound, if any.
    pub lower: Option<f64>,
    pub uppers: Vec<UpperEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    LowerAboveExact,
    ExactAboveUpper,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub n: u64,
    pub theorem_id: TheoremId,
    pub kind: ViolationKind,
    pub exact: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SandwichReport {
    pub spec: ProblemSpec,
    pub n_grid: Vec<u64>,
    pub constant_mode: ConstantMode,
    pub rows: Vec<SandwichRow>,
    pub violations: Vec<Violation>,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Recomputes `violations` from `rows`.
    pub fn recheck(&mut self) {
        self.violations = self.rows.iter().flat_map(row_violations).collect();
    }
}

fn row_violations(row: &SandwichRow) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Some(lower) = row.lower {
        if lower > row.exact * (1.0 + REL_TOL) {
            out.push(Violation {
                n: row.n,
                theorem_id: TheoremId::KriegLower,
                kind: ViolationKind::LowerAboveExact,
                exact: row.exact,
                bound: lower,
            });
        }
    }
    for u in row.uppers.iter().filter(|u| u.applicable) {
        if row.exact > u.value * (1.0 + REL_TOL) {
            out.push(Violation {
                n: row.n,
                theorem_id: u.theorem_id,
                kind: ViolationKind::ExactAboveUpper,
                exact: row.exact,
                bound: u.value,
            });
        }
    }
    out
}

/// Compares exact `a_n` with the lower bound and every listed upper bound on `n_grid`.
///
/// Inapplicable bounds are recorded but never produce violations. SMALLB
/// without an explicit `β` uses `β(κ)` with `κ = (d−1)/ln n` at each `n`.
pub fn verify_sandwich(
    spec: &ProblemSpec,
    n_grid: &[u64],
    theorem_ids: &[TheoremId],
    mode: ConstantMode,
    params: &BoundParams,
) -> Result<SandwichReport, HarnessError> {
    let Some(&n_max) = n_grid.iter().max() else {
        return Err(HarnessError::InvalidArgument("empty n grid".into()));
    };
    if n_grid.contains(&0) {
        return Err(HarnessError::InvalidArgument("n must be at least 1".into()));
    }
    if theorem_ids.contains(&TheoremId::KriegLower) {
        return Err(HarnessError::InvalidArgument(
            "KRIEG_LOWER is always included as the lower bound".into(),
        ));
    }
    let seq = singular_values(&WeightFunction::new(spec), n_max)?;
    let q_lower = spec.constant_q().filter(|q| q.finite().is_some_and(|v| v >= 1.0));
    let mut rows = Vec::with_capacity(n_grid.len());
    for &n in n_grid {
        let exact = seq.values.get(n as usize - 1).copied().unwrap_or(0.0);
        let nf = n as f64;
        let lower = match (spec.target, spec.is_constant_s(), q_lower) {
            (Target::L2, true, Some(q)) => {
                let r = lower_bound_krieg(spec.d, spec.s1(), q, nf)?;
                r.applicable.then_some(r.value)
            }
            _ => None,
        };
        let mut uppers = Vec::with_capacity(theorem_ids.len());
        for &id in theorem_ids {
            let mut p = *params;
            if id == TheoremId::SmallB && p.beta.is_none() {
                let kappa = (spec.d as f64 - 1.0) / nf.ln();
                if !(kappa > 0.0 && kappa.is_finite()) {
                    continue;
                }
                p.beta = Some(optimal_beta(kappa)?);
            }
            let r = upper_bound(spec, nf, id, &p, mode)?;
            uppers.push(UpperEntry {
                theorem_id: id,
                value: r.value,
                applicable: r.applicable,
            });
        }
        rows.push(SandwichRow {
            n,
            exact,
            lower,
            uppers,
        });
    }
    let mut report = SandwichReport {
        spec: spec.clone(),
        n_grid: n_grid.to_vec(),
        constant_mode: mode,
        rows,
        violations: Vec::new(),
    };
    report.recheck();
    Ok(report)
}

/// Indices `n ≤ n_max` at which the energy `a_n` exceeds the `L2` value for
/// smoothness `s − 1` and `q = 2`, which dominates it pointwise.
pub fn energy_domination_check(spec: &ProblemSpec, n_max: u64) -> Result<Vec<u64>, HarnessError> {
    if spec.target != Target::H1 {
        return Err(HarnessError::InvalidArgument("needs an h1 problem".into()));
    }
    let reduced: Vec<f64> = spec.s.iter().map(|s| s - 1.0).collect();
    let mixed = hypcross_core::make_problem(spec.d, &reduced, &vec![FineIndex::Finite(2.0); spec.d], Target::L2)?;
    let energy = singular_values(&WeightFunction::energy(spec)?, n_max)?;
    let l2 = singular_values(&WeightFunction::tensor(&mixed)?, n_max)?;
    Ok(energy
        .values
        .iter()
        .zip(&l2.values)
        .enumerate()
        .filter(|(_, (e, m))| **e > **m * (1.0 + REL_TOL))
        .map(|(i, _)| i as u64 + 1)
        .collect())
}
