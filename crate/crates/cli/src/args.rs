use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypcross_bounds::{ConstantMode, DdPart, TheoremId};
use hypcross_core::{FineIndex, Target};
use hypcross_harness::{SequenceRule, TableId};

#[derive(Debug, Parser)]
#[command(name = "hypcross", version, about = "Approximation numbers of mixed-smoothness embeddings on the torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximation number a_N, or a_1..a_N with --all.
    An(AnArgs),
    /// Lattice count C(r) and optionally its zeta-product upper bound.
    Count(CountArgs),
    /// Evaluate one closed-form bound.
    Bound(BoundArgs),
    /// Constant of the logarithmic-rate limit.
    Asymptotic(AsymptoticArgs),
    /// Recompute a printed table.
    Table(TableArgs),
    /// Verification runs; exit status 3 on any violation.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Strong tractability check for logarithmically growing smoothness.
    Tract(TractArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Dimension.
    #[arg(long)]
    pub d: usize,
    /// Smoothness per coordinate; a single value applies to all.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub s: Vec<f64>,
    /// Fine index per coordinate (`inf` for ∞); a single value applies to all.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "1")]
    pub q: Vec<FineIndex>,
    /// Target space: l2 or h1.
    #[arg(long)]
    pub target: Option<Target>,
}

#[derive(Debug, Args)]
pub struct AnArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub n: u64,
    /// Emit every a_n for n = 1..N.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub r: f64,
    /// Also report the zeta-product upper bound.
    #[arg(long, requires = "alpha")]
    pub upper: bool,
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Printed,
    Safe,
}

impl From<ModeArg> for ConstantMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Printed => ConstantMode::AsPrinted,
            ModeArg::Safe => ConstantMode::DerivationSafe,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    I,
    Ii,
}

impl From<PartArg> for DdPart {
    fn from(p: PartArg) -> Self {
        match p {
            PartArg::I => DdPart::I,
            PartArg::Ii => DdPart::II,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TheoremParams {
    /// β of SMALLB and LOGGROWTH.
    #[arg(long)]
    pub beta: Option<f64>,
    /// α of LOGGROWTH.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Part of SMALLDD_Q.
    #[arg(long, value_enum)]
    pub part: Option<PartArg>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub theorem: TheoremId,
    #[arg(long)]
    pub n: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Printed)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[command(flatten)]
    pub params: TheoremParams,
}

#[derive(Debug, Args)]
pub struct AsymptoticArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Use the integer-order Sobolev norm family.
    #[arg(long)]
    pub sobolev_integer: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// cd, delta-d or beta-kappa.
    #[arg(long)]
    pub id: TableId,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Exact a_n against the lower bound and the upper bounds.
    Sandwich(SandwichArgs),
    /// Frontier enumeration against the brute-force oracle.
    Oracle(OracleArgs),
    /// Asymptotic ratio trace, or its counting form with --radii.
    Ratio(RatioArgs),
    /// Rearranged tensor product of two sequences against its limit.
    Tensor(TensorArgs),
}

#[derive(Debug, Args)]
pub struct SandwichArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 2)]
    pub n_min: u64,
    #[arg(long)]
    pub n_max: u64,
    /// Upper bounds to check; defaults to every bound for the target.
    #[arg(long, value_delimiter = ',')]
    pub theorems: Vec<TheoremId>,
    #[arg(long, value_enum, default_value_t = ModeArg::Safe)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub params: TheoremParams,
    /// Negative control: multiply every upper bound by this factor before checking.
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub scale_upper: f64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub n: u64,
    /// Cap on every |k_j|; automatic when absent.
    #[arg(long)]
    pub box_radius: Option<u64>,
}

#[derive(Debug, Args)]
pub struct RatioArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Increasing n values, each at least 3.
    #[arg(long, value_delimiter = ',', required_unless_present = "radii", conflicts_with = "radii")]
    pub checkpoints: Vec<u64>,
    /// Radii for the counting form.
    #[arg(long, value_delimiter = ',')]
    pub radii: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    /// First sequence: power:P, geometric:B or single.
    #[arg(long, value_parser = parse_rule)]
    pub a: SequenceRule,
    /// Second sequence, same syntax.
    #[arg(long, value_parser = parse_rule)]
    pub b: SequenceRule,
    #[arg(long)]
    pub n_max: u64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
pub struct TractArgs {
    #[arg(long)]
    pub s1: f64,
    /// Growth rate; 0 means constant smoothness.
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub tau: f64,
    #[arg(long)]
    pub dmax: usize,
}

fn parse_rule(s: &str) -> Result<SequenceRule, String> {
    let (kind, value) = match s.split_once(':') {
        Some((k, v)) => (k, Some(v)),
        None => (s, None),
    };
    let number = || -> Result<f64, String> {
        value
            .ok_or_else(|| format!("`{kind}` needs a value, as in {kind}:2"))?
            .parse::<f64>()
            .map_err(|e| e.to_string())
    };
    match kind.to_ascii_lowercase().as_str() {
        "power" => Ok(SequenceRule::Power { p: number()? }),
        "geometric" => Ok(SequenceRule::Geometric { base: number()? }),
        "single" if value.is_none() => Ok(SequenceRule::Single),
        _ => Err(format!("unknown sequence `{s}` (expected power:P, geometric:B or single)")),
    }
}
