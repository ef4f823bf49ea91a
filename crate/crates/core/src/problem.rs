use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CoreError;

/// Fine index of one coordinate: a finite positive real or `∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FineIndex {
    Finite(f64),
    Infinite,
}

impl FineIndex {
    pub fn is_infinite(self) -> bool {
        matches!(self, FineIndex::Infinite)
    }

    /// Finite value, or `None` for `∞`.
    pub fn finite(self) -> Option<f64> {
        match self {
            FineIndex::Finite(q) => Some(q),
            FineIndex::Infinite => None,
        }
    }

    /// Value as `f64`, with `∞` mapped to `f64::INFINITY`.
    pub fn as_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl From<f64> for FineIndex {
    fn from(q: f64) -> Self {
        if q.is_infinite() && q > 0.0 {
            FineIndex::Infinite
        } else {
            FineIndex::Finite(q)
        }
    }
}

impl fmt::Display for FineIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FineIndex::Finite(q) => write!(f, "{q}"),
            FineIndex::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for FineIndex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(FineIndex::Infinite),
            _ => t
                .parse::<f64>()
                .map(FineIndex::from)
                .map_err(|e| format!("invalid fine index `{t}`: {e}")),
        }
    }
}

/// Serialized as a number, or the string `"inf"`.
impl Serialize for FineIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FineIndex::Finite(q) => s.serialize_f64(*q),
            FineIndex::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for FineIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = FineIndex;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive number or \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<FineIndex, E> {
                Ok(FineIndex::from(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<FineIndex, E> {
                Ok(FineIndex::Finite(v as f64))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<FineIndex, E> {
                Ok(FineIndex::Finite(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<FineIndex, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    L2,
    H1,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::L2 => "L2",
            Target::H1 => "H1",
        }
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l2" => Ok(Target::L2),
            "h1" => Ok(Target::H1),
            other => Err(format!("unknown target `{other}` (expected l2 or h1)")),
        }
    }
}

/// Canonical problem: `s` nondecreasing with `q` permuted alongside it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub d: usize,
    pub s: Vec<f64>,
    pub q: Vec<FineIndex>,
    pub target: Target,
    /// Multiplicity of the minimal smoothness; `nu == d` for constant `s`.
    pub nu: usize,
    /// `perm[i]` is the user-order index of canonical coordinate `i`.
    pub perm: Vec<usize>,
}

/// Validates and canonicalizes a problem.
pub fn make_problem(
    d: usize,
    s: &[f64],
    q: &[FineIndex],
    target: Target,
) -> Result<ProblemSpec, CoreError> {
    if d == 0 {
        return Err(CoreError::ZeroDimension);
    }
    if s.len() != d {
        return Err(CoreError::DimensionMismatch {
            what: "s",
            expected: d,
            got: s.len(),
        });
    }
    if q.len() != d {
        return Err(CoreError::DimensionMismatch {
            what: "q",
            expected: d,
            got: q.len(),
        });
    }
    for (index, &value) in s.iter().enumerate() {
        if !(value > 0.0) || !value.is_finite() {
            return Err(CoreError::NonPositiveSmoothness { index, value });
        }
    }
    for (index, qi) in q.iter().enumerate() {
        if let FineIndex::Finite(value) = *qi {
            if !(value > 0.0) || !value.is_finite() {
                return Err(CoreError::InvalidFineIndex { index, value });
            }
        }
    }
    let min = s.iter().copied().fold(f64::INFINITY, f64::min);
    if target == Target::H1 && min <= 1.0 {
        return Err(CoreError::EnergyNeedsSmoothness { min });
    }

    let mut perm: Vec<usize> = (0..d).collect();
    perm.sort_by(|&a, &b| s[a].total_cmp(&s[b]));
    let s_sorted: Vec<f64> = perm.iter().map(|&i| s[i]).collect();
    let q_sorted: Vec<FineIndex> = perm.iter().map(|&i| q[i]).collect();
    let nu = s_sorted.iter().take_while(|&&v| v == s_sorted[0]).count();

    Ok(ProblemSpec {
        d,
        s: s_sorted,
        q: q_sorted,
        target,
        nu,
        perm,
    })
}

impl ProblemSpec {
    /// Shorthand for an `L2` problem with constant `s` and `q`.
    pub fn constant(d: usize, s: f64, q: FineIndex) -> Result<Self, CoreError> {
        make_problem(d, &vec![s; d], &vec![q; d], Target::L2)
    }

    pub fn s1(&self) -> f64 {
        self.s[0]
    }

    pub fn is_constant_s(&self) -> bool {
        self.nu == self.d
    }

    /// Common fine index when all coordinates share it.
    pub fn constant_q(&self) -> Option<FineIndex> {
        let first = self.q[0];
        self.q.iter().all(|&x| x == first).then_some(first)
    }

    /// Same problem with every smoothness multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Result<Self, CoreError> {
        let s: Vec<f64> = self.s.iter().map(|v| v * lambda).collect();
        make_problem(self.d, &s, &self.q, self.target).map(|p| self.compose(p))
    }

    /// Same smoothness and fine index with a different target.
    pub fn with_target(&self, target: Target) -> Result<Self, CoreError> {
        make_problem(self.d, &self.s, &self.q, target).map(|p| self.compose(p))
    }

    /// Keeps `perm` pointing at the original user order after re-canonicalizing.
    fn compose(&self, mut next: ProblemSpec) -> ProblemSpec {
        next.perm = next.perm.iter().map(|&i| self.perm[i]).collect();
        next
    }

    pub(crate) fn require(&self, target: Target) -> Result<(), CoreError> {
        if self.target == target {
            Ok(())
        } else {
            Err(CoreError::WrongTarget {
                expected: target.name(),
                got: self.target.name(),
            })
        }
    }
}
