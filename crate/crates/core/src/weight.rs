use serde::{Deserialize, Serialize};

use crate::{CoreError, FineIndex, ProblemSpec, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightKind {
    TensorL2,
    EnergyH1,
}

/// One coordinate of an integer-valued tensor weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerFactor {
    /// `(1 + m^q)^p`
    Poly { q: u32, p: u32 },
    /// `max(1, m)^s`
    Max { s: u32 },
}

impl IntegerFactor {
    fn detect(s: f64, q: FineIndex) -> Option<Self> {
        let is_small_int = |x: f64, max: f64| x >= 1.0 && x <= max && x.fract() == 0.0;
        match q {
            FineIndex::Finite(qv) => {
                let p = s / qv;
                (is_small_int(qv, 64.0) && is_small_int(p, 128.0)).then_some(IntegerFactor::Poly {
                    q: qv as u32,
                    p: p as u32,
                })
            }
            FineIndex::Infinite => {
                is_small_int(s, 128.0).then_some(IntegerFactor::Max { s: s as u32 })
            }
        }
    }

    /// Exact factor value, `None` on overflow.
    pub fn eval(self, m: u64) -> Option<u128> {
        let m = m as u128;
        match self {
            IntegerFactor::Poly { q, p } => m.checked_pow(q)?.checked_add(1)?.checked_pow(p),
            IntegerFactor::Max { s } => m.max(1).checked_pow(s),
        }
    }
}

/// Orthant representative together with the number of sign images it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub k: Vec<u64>,
    pub multiplicity: u64,
}

impl LatticePoint {
    pub fn new(k: Vec<u64>) -> Self {
        let multiplicity = multiplicity(&k);
        LatticePoint { k, multiplicity }
    }

    /// All points of `ℤ^d` with these absolute values. `+` comes before `-`
    /// and the first coordinate varies slowest.
    pub fn sign_images(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::with_capacity(self.k.len())];
        for &c in &self.k {
            let c = c as i64;
            if c == 0 {
                out.iter_mut().for_each(|v| v.push(0));
            } else {
                out = out
                    .into_iter()
                    .flat_map(|v| {
                        let mut neg = v.clone();
                        let mut pos = v;
                        pos.push(c);
                        neg.push(-c);
                        [pos, neg]
                    })
                    .collect();
            }
        }
        out
    }
}

/// `2^{#nonzero}`.
pub fn multiplicity(k: &[u64]) -> u64 {
    1u64 << k.iter().filter(|&&c| c != 0).count()
}

/// Reciprocal weight `σ` on `ℕ₀^d` for a canonical problem.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction {
    kind: WeightKind,
    spec: ProblemSpec,
    integer: Option<Vec<IntegerFactor>>,
}

impl WeightFunction {
    /// Weight matching the problem's target.
    pub fn new(spec: &ProblemSpec) -> Self {
        match spec.target {
            Target::L2 => Self::build(WeightKind::TensorL2, spec),
            Target::H1 => Self::build(WeightKind::EnergyH1, spec),
        }
    }

    pub fn tensor(spec: &ProblemSpec) -> Result<Self, CoreError> {
        spec.require(Target::L2)?;
        Ok(Self::build(WeightKind::TensorL2, spec))
    }

    pub fn energy(spec: &ProblemSpec) -> Result<Self, CoreError> {
        spec.require(Target::H1)?;
        Ok(Self::build(WeightKind::EnergyH1, spec))
    }

    fn build(kind: WeightKind, spec: &ProblemSpec) -> Self {
        let integer = match kind {
            WeightKind::TensorL2 => spec
                .s
                .iter()
                .zip(&spec.q)
                .map(|(&s, &q)| IntegerFactor::detect(s, q))
                .collect::<Option<Vec<_>>>(),
            WeightKind::EnergyH1 => None,
        };
        WeightFunction {
            kind,
            spec: spec.clone(),
            integer,
        }
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.d
    }

    /// True when every reciprocal weight is an integer computed exactly.
    pub fn is_integer(&self) -> bool {
        self.integer.is_some()
    }

    pub fn integer_factors(&self) -> Option<&[IntegerFactor]> {
        self.integer.as_deref()
    }

    /// `ln u_j(m)` for one coordinate of the tensor weight.
    pub fn log_u_coord(&self, j: usize, m: u64) -> f64 {
        log_u_1d(self.spec.s[j], self.spec.q[j], m)
    }

    /// `ln σ(k)`; always `≤ 0`.
    pub fn log_sigma(&self, k: &[u64]) -> f64 {
        match self.kind {
            WeightKind::TensorL2 => -(0..k.len()).map(|j| self.log_u_coord(j, k[j])).sum::<f64>(),
            WeightKind::EnergyH1 => {
                let norm: f64 = k.iter().map(|&c| (c as f64) * (c as f64)).sum();
                let mixed: f64 = k
                    .iter()
                    .zip(&self.spec.s)
                    .map(|(&c, &s)| 0.5 * s * ((c as f64) * (c as f64)).ln_1p())
                    .sum();
                0.5 * norm.ln_1p() - mixed
            }
        }
    }

    /// Exact `u(k) = 1/σ(k)` in integer mode. `None` outside integer mode or on overflow.
    pub fn exact_u(&self, k: &[u64]) -> Option<u128> {
        let factors = self.integer.as_ref()?;
        factors
            .iter()
            .zip(k)
            .try_fold(1u128, |acc, (f, &m)| acc.checked_mul(f.eval(m)?))
    }

    pub fn sigma(&self, k: &[u64]) -> f64 {
        match self.exact_u(k) {
            Some(u) => 1.0 / u as f64,
            None => self.log_sigma(k).exp(),
        }
    }
}

/// `ln (1+m^q)^{s/q}`, or `s ln max(1,m)` for `q = ∞`.
pub(crate) fn log_u_1d(s: f64, q: FineIndex, m: u64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let lm = (m as f64).ln();
    match q {
        FineIndex::Infinite => s * lm,
        FineIndex::Finite(q) => {
            let ql = q * lm;
            if ql > 30.0 {
                s * lm + (s / q) * (-ql).exp().ln_1p()
            } else {
                (s / q) * ql.exp().ln_1p()
            }
        }
    }
}

fn abs_point(k: &[i64]) -> Vec<u64> {
    k.iter().map(|c| c.unsigned_abs()).collect()
}

fn check_len(spec: &ProblemSpec, k: &[i64]) -> Result<(), CoreError> {
    if k.len() == spec.d {
        Ok(())
    } else {
        Err(CoreError::DimensionMismatch {
            what: "k",
            expected: spec.d,
            got: k.len(),
        })
    }
}

/// `u_{s,q}(k) = Π_j (1+|k_j|^{q_j})^{s_j/q_j}` with the `max(1,|k_j|)^{s_j}` branch for `q_j = ∞`.
pub fn weight_u(spec: &ProblemSpec, k: &[i64]) -> Result<f64, CoreError> {
    spec.require(Target::L2)?;
    check_len(spec, k)?;
    let w = WeightFunction::build(WeightKind::TensorL2, spec);
    let a = abs_point(k);
    Ok(match w.exact_u(&a) {
        Some(u) => u as f64,
        None => (-w.log_sigma(&a)).exp(),
    })
}

/// `(1+|k|²)^{1/2} / Π_j (1+k_j²)^{s_j/2}`.
pub fn weight_energy(spec: &ProblemSpec, k: &[i64]) -> Result<f64, CoreError> {
    spec.require(Target::H1)?;
    check_len(spec, k)?;
    Ok(WeightFunction::build(WeightKind::EnergyH1, spec)
        .log_sigma(&abs_point(k))
        .exp())
}

/// `Π_j (1+k_j²)^{-(s_j-1)/2}`, a pointwise upper bound of [`weight_energy`].
pub fn weight_energy_majorant(spec: &ProblemSpec, k: &[i64]) -> Result<f64, CoreError> {
    spec.require(Target::H1)?;
    check_len(spec, k)?;
    let log: f64 = k
        .iter()
        .zip(&spec.s)
        .map(|(&c, &s)| -0.5 * (s - 1.0) * ((c as f64) * (c as f64)).ln_1p())
        .sum();
    Ok(log.exp())
}
