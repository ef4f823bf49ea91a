//! Closed-form bounds for the approximation numbers `a_n`: preasymptotic
//! upper bounds with explicit constants, the matching lower bound, the
//! exponents `γ` they are built from, the asymptotic constant of the
//! logarithmic-rate limit, and a strong-tractability check.

mod asymptotic;
mod constants;
mod tract;
mod upper;

use std::fmt;
use std::str::FromStr;

use hypcross_core::CoreError;
use hypcross_specfun::SpecfunError;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use asymptotic::{asymptotic_constant, NormFamily};
pub use constants::{
    c_d, c_t_d, delta_d, energy_c_d, gamma_krieg, gamma_rate, gamma_star, improvement_region_check,
    rate_report, ImprovementRegion, RateReport, WN2B_CONSTANT,
};
pub use tract::{tractability_verdict, GrowthRule, TractabilityReport};
pub use upper::{jump_constant, jump_safe_constant, lower_bound_krieg, upper_bound, JUMP_PRINTED_CONSTANT};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{theorem} needs parameter `{name}`")]
    MissingParameter { theorem: TheoremId, name: &'static str },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}

/// Stable identifiers of the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Small,
    SmallBbb,
    SmallB,
    SmallBcb,
    SmallDdQ,
    JumpBigNu,
    JumpSmallNu,
    JumpNu1,
    JumpReordered,
    LogGrowth,
    EnergyMain0,
    EnergyMain1,
    EnergyMain2,
    /// The lower bound of [`lower_bound_krieg`].
    KriegLower,
}

impl TheoremId {
    /// Every upper-bound identifier, in a fixed order.
    pub const UPPER: [TheoremId; 13] = [
        TheoremId::Small,
        TheoremId::SmallBbb,
        TheoremId::SmallB,
        TheoremId::SmallBcb,
        TheoremId::SmallDdQ,
        TheoremId::JumpBigNu,
        TheoremId::JumpSmallNu,
        TheoremId::JumpNu1,
        TheoremId::JumpReordered,
        TheoremId::LogGrowth,
        TheoremId::EnergyMain0,
        TheoremId::EnergyMain1,
        TheoremId::EnergyMain2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Small => "SMALL",
            TheoremId::SmallBbb => "SMALLBBB",
            TheoremId::SmallB => "SMALLB",
            TheoremId::SmallBcb => "SMALLBCB",
            TheoremId::SmallDdQ => "SMALLDD_Q",
            TheoremId::JumpBigNu => "JUMP_BIG_NU",
            TheoremId::JumpSmallNu => "JUMP_SMALL_NU",
            TheoremId::JumpNu1 => "JUMP_NU1",
            TheoremId::JumpReordered => "JUMP_REORDERED",
            TheoremId::LogGrowth => "LOGGROWTH",
            TheoremId::EnergyMain0 => "ENERGY_MAIN0",
            TheoremId::EnergyMain1 => "ENERGY_MAIN1",
            TheoremId::EnergyMain2 => "ENERGY_MAIN2",
            TheoremId::KriegLower => "KRIEG_LOWER",
        }
    }

    /// Bounds for the energy-space target.
    pub fn is_energy(self) -> bool {
        matches!(self, TheoremId::EnergyMain0 | TheoremId::EnergyMain1 | TheoremId::EnergyMain2)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::UPPER
            .iter()
            .chain(std::iter::once(&TheoremId::KriegLower))
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .copied()
            .ok_or_else(|| BoundsError::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which constant to use where the printed one does not follow from its derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ConstantMode {
    #[default]
    AsPrinted,
    DerivationSafe,
}

/// Part of the general-`q` constant-smoothness bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DdPart {
    /// `(C(d)/n)^{s/(q(1+log₂(d−1)))}`
    #[default]
    I,
    /// `n^{−γ* s/q}`
    II,
}

/// Free parameters of individual bounds.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BoundParams {
    /// `β` of SMALLB and LOGGROWTH.
    pub beta: Option<f64>,
    /// `α` of LOGGROWTH.
    pub alpha: Option<f64>,
    /// Part selector of SMALLDD_Q.
    pub part: Option<DdPart>,
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub value: f64,
    pub theorem_id: TheoremId,
    /// All hypotheses hold; otherwise `value` is still the formula's value.
    pub applicable: bool,
    pub validity_note: String,
    pub constant_mode: ConstantMode,
}
