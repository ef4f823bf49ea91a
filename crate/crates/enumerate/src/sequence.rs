use hypcross_core::{LatticePoint, ProblemSpec, WeightFunction};
use serde::{Deserialize, Serialize};

use crate::{EnumConfig, EnumerateError, Frontier, LatticeWeight};

/// Jump point of the step function `n ↦ a_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateauMark {
    /// Reciprocal weight of the plateau.
    pub theta: f64,
    /// Cumulative count: `a_n = 1/θ` exactly for `n` in `(previous n, n]`.
    pub n: u64,
}

/// First entries of the non-increasing rearrangement, with plateau metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularSequence {
    pub values: Vec<f64>,
    /// Every plateau touched, including the one containing the last value.
    pub plateaus: Vec<PlateauMark>,
    /// Float ties were resolved by tolerance somewhere in the emitted range.
    pub tie_sensitive: bool,
    /// Weights were compared as exact integers.
    pub exact: bool,
}

fn check_n(n: u64) -> Result<(), EnumerateError> {
    if n == 0 {
        Err(EnumerateError::InvalidArgument("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `a_1, …, a_{n_max}` for a lattice weight.
pub fn singular_values<W: LatticeWeight + ?Sized>(
    weight: &W,
    n_max: u64,
) -> Result<SingularSequence, EnumerateError> {
    singular_values_with(weight, n_max, EnumConfig::default())
}

pub fn singular_values_with<W: LatticeWeight + ?Sized>(
    weight: &W,
    n_max: u64,
    config: EnumConfig,
) -> Result<SingularSequence, EnumerateError> {
    check_n(n_max)?;
    let mut frontier = Frontier::new(weight, config);
    let mut out = SingularSequence {
        values: Vec::with_capacity(n_max.min(1 << 24) as usize),
        plateaus: Vec::new(),
        tie_sensitive: false,
        exact: weight.is_integer(),
    };
    while (out.values.len() as u64) < n_max {
        let Some(p) = frontier.next_plateau()? else {
            break;
        };
        out.tie_sensitive |= p.tie_sensitive;
        out.plateaus.push(PlateauMark {
            theta: p.theta,
            n: p.n_end,
        });
        let room = (n_max - out.values.len() as u64) as usize;
        let mut vals: Vec<f64> = Vec::new();
        for m in &p.members {
            if vals.len() >= room && !p.tie_sensitive {
                break;
            }
            vals.extend(std::iter::repeat_n(m.sigma, m.multiplicity as usize));
        }
        if p.tie_sensitive {
            vals.sort_by(|a, b| b.total_cmp(a));
        }
        out.values.extend(vals.into_iter().take(room));
    }
    Ok(out)
}

/// `a_n`; zero when the weight has fewer than `n` nonzero points.
pub fn nth_singular_value<W: LatticeWeight + ?Sized>(
    weight: &W,
    n: u64,
) -> Result<f64, EnumerateError> {
    let seq = singular_values(weight, n)?;
    Ok(seq.values.get(n as usize - 1).copied().unwrap_or(0.0))
}

/// The `m_max` smallest distinct reciprocal weights `θ_m` with cumulative counts `n_m`.
pub fn jump_sequence<W: LatticeWeight + ?Sized>(
    weight: &W,
    m_max: usize,
) -> Result<Vec<PlateauMark>, EnumerateError> {
    if m_max == 0 {
        return Err(EnumerateError::InvalidArgument("m_max must be at least 1".into()));
    }
    let mut frontier = Frontier::new(weight, EnumConfig::default());
    let mut out = Vec::with_capacity(m_max);
    while out.len() < m_max {
        let Some(p) = frontier.next_plateau()? else {
            break;
        };
        out.push(PlateauMark {
            theta: p.theta,
            n: p.n_end,
        });
    }
    Ok(out)
}

/// `n − 1` frequencies of largest weight. Ties on the last plateau are broken
/// lexicographically on the orthant representative, then by sign pattern.
pub fn optimal_index_set(spec: &ProblemSpec, n: u64) -> Result<Vec<Vec<i64>>, EnumerateError> {
    check_n(n)?;
    let weight = WeightFunction::tensor(spec)?;
    let want = (n - 1) as usize;
    let mut out = Vec::with_capacity(want);
    let mut frontier = Frontier::new(&weight, EnumConfig::default());
    'outer: while out.len() < want {
        let Some(p) = frontier.next_plateau()? else {
            break;
        };
        for m in p.members {
            for k in LatticePoint::new(m.k).sign_images() {
                if out.len() == want {
                    break 'outer;
                }
                out.push(k);
            }
        }
    }
    Ok(out)
}
