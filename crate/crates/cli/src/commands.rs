use hypcross_bounds::{
    asymptotic_constant, lower_bound_krieg, tractability_verdict, upper_bound, BoundParams, ConstantMode, GrowthRule,
    NormFamily, TheoremId,
};
use hypcross_core::{make_problem, ProblemSpec, Target, WeightFunction};
use hypcross_count::{clever_bound, count_exact};
use hypcross_enumerate::singular_values;
use hypcross_harness::{
    asymptotic_ratio_trace, brute_force_an, counting_ratio_trace, reproduce_table, tensor_merge_check,
    verify_sandwich,
};
use serde_json::json;

use crate::args::{
    AnArgs, AsymptoticArgs, BoundArgs, Command, CountArgs, OracleArgs, ProblemArgs, RatioArgs, SandwichArgs,
    TableArgs, TensorArgs, TheoremParams, TractArgs, VerifyCommand,
};
use crate::output::OutputRecord;
use crate::CliError;

/// Result of one command: the record and whether a verification failed.
pub struct Outcome {
    pub record: OutputRecord,
    pub violated: bool,
}

impl From<OutputRecord> for Outcome {
    fn from(record: OutputRecord) -> Self {
        Outcome {
            record,
            violated: false,
        }
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::An(a) => an(a).map(Into::into),
        Command::Count(a) => count(a).map(Into::into),
        Command::Bound(a) => bound(a).map(Into::into),
        Command::Asymptotic(a) => asymptotic(a).map(Into::into),
        Command::Table(a) => table(a),
        Command::Verify(VerifyCommand::Sandwich(a)) => sandwich(a),
        Command::Verify(VerifyCommand::Oracle(a)) => oracle(a),
        Command::Verify(VerifyCommand::Ratio(a)) => ratio(a).map(Into::into),
        Command::Verify(VerifyCommand::Tensor(a)) => tensor(a).map(Into::into),
        Command::Tract(a) => tract(a).map(Into::into),
    }
}

/// Expands one-element lists to length `d`.
fn broadcast<T: Clone>(name: &str, values: &[T], d: usize) -> Result<Vec<T>, CliError> {
    match values.len() {
        1 => Ok(vec![values[0].clone(); d]),
        n if n == d => Ok(values.to_vec()),
        n => Err(CliError::Usage(format!("--{name} has {n} values, expected 1 or d = {d}"))),
    }
}

/// Builds the problem and echoes it into `params` in the user's coordinate order.
fn problem(args: &ProblemArgs, default_target: Target, rec: &mut OutputRecord) -> Result<ProblemSpec, CliError> {
    let s = broadcast("s", &args.s, args.d)?;
    let q = broadcast("q", &args.q, args.d)?;
    let target = args.target.unwrap_or(default_target);
    rec.param("d", args.d);
    rec.param("s", &s);
    rec.param("q", &q);
    rec.param("target", target.name().to_ascii_lowercase());
    Ok(make_problem(args.d, &s, &q, target)?)
}

fn theorem_params(p: &TheoremParams, rec: &mut OutputRecord) -> BoundParams {
    if let Some(b) = p.beta {
        rec.param("beta", b);
    }
    if let Some(a) = p.alpha {
        rec.param("alpha", a);
    }
    if let Some(part) = p.part {
        rec.param("part", format!("{part:?}").to_ascii_uppercase());
    }
    BoundParams {
        beta: p.beta,
        alpha: p.alpha,
        part: p.part.map(Into::into),
    }
}

fn mode_name(mode: ConstantMode) -> &'static str {
    match mode {
        ConstantMode::AsPrinted => "printed",
        ConstantMode::DerivationSafe => "safe",
    }
}

fn an(a: &AnArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("an");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    rec.param("n", a.n);
    rec.param("all", a.all);
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let seq = singular_values(&WeightFunction::new(&spec), a.n)?;
    let first = if a.all { 1 } else { a.n };
    for n in first..=a.n {
        let value = seq.values.get(n as usize - 1).copied().unwrap_or(0.0);
        rec.row(json!({ "n": n, "a_n": value }));
    }
    if seq.tie_sensitive {
        rec.warn("tie-sensitive: weights within 1e-10 in log were merged or nearly equal plateaus are adjacent");
    }
    Ok(rec)
}

fn count(a: &CountArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("count");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    rec.param("r", a.r);
    let c = count_exact(&spec, a.r)?;
    let mut row = json!({ "r": a.r, "count": c.value, "tie_sensitive": c.tie_sensitive });
    if a.upper {
        let alpha = a.alpha.expect("clap requires --alpha with --upper");
        rec.param("alpha", alpha);
        row["upper"] = json!(clever_bound(&spec, a.r, alpha)?);
    }
    if c.tie_sensitive {
        rec.warn("tie-sensitive: a lattice point lies on the boundary u(k) = r");
    }
    rec.row(row);
    Ok(rec)
}

fn bound(a: &BoundArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("bound");
    rec.param("theorem", a.theorem);
    rec.param("n", a.n);
    let mode: ConstantMode = a.mode.into();
    rec.param("mode", mode_name(mode));
    let default_target = if a.theorem.is_energy() { Target::H1 } else { Target::L2 };
    let spec = problem(&a.problem, default_target, &mut rec)?;
    let params = theorem_params(&a.params, &mut rec);
    let result = if a.theorem == TheoremId::KriegLower {
        let (Some(q), true) = (spec.constant_q(), spec.is_constant_s()) else {
            return Err(CliError::Usage("KRIEG_LOWER needs constant s and q".into()));
        };
        lower_bound_krieg(spec.d, spec.s1(), q, a.n)?
    } else {
        upper_bound(&spec, a.n, a.theorem, &params, mode)?
    };
    if !result.applicable {
        rec.warn(format!("{} not applicable: {}", result.theorem_id, result.validity_note));
    }
    rec.row(json!({
        "theorem_id": result.theorem_id,
        "n": a.n,
        "value": result.value,
        "applicable": result.applicable,
        "constant_mode": mode_name(result.constant_mode),
        "validity_note": result.validity_note,
    }));
    Ok(rec)
}

fn asymptotic(a: &AsymptoticArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("asymptotic");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    let family = if a.sobolev_integer { NormFamily::SobolevInteger } else { NormFamily::Fractional };
    let name = if a.sobolev_integer { "sobolev_integer" } else { "fractional" };
    rec.param("family", name);
    let c = asymptotic_constant(&spec, family)?;
    rec.row(json!({ "nu": spec.nu, "s1": spec.s1(), "constant": c }));
    Ok(rec)
}

fn table(a: &TableArgs) -> Result<Outcome, CliError> {
    let mut rec = OutputRecord::new("table");
    rec.param("id", a.id);
    let t = reproduce_table(a.id)?;
    for row in &t.rows {
        rec.row(row);
    }
    let violated = !t.all_within_tolerance();
    if violated {
        rec.warn("some rows differ from the printed values beyond the printed precision");
    }
    Ok(Outcome { record: rec, violated })
}

fn sandwich(a: &SandwichArgs) -> Result<Outcome, CliError> {
    let mut rec = OutputRecord::new("verify sandwich");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    if a.n_min == 0 || a.n_min > a.n_max {
        return Err(CliError::Usage("need 1 ≤ --n-min ≤ --n-max".into()));
    }
    rec.param("n_min", a.n_min);
    rec.param("n_max", a.n_max);
    let mode: ConstantMode = a.mode.into();
    rec.param("mode", mode_name(mode));
    let ids: Vec<TheoremId> = if a.theorems.is_empty() {
        TheoremId::UPPER
            .into_iter()
            .filter(|id| id.is_energy() == (spec.target == Target::H1) && *id != TheoremId::LogGrowth)
            .collect()
    } else {
        a.theorems.clone()
    };
    rec.param("theorems", &ids);
    let params = theorem_params(&a.params, &mut rec);
    let grid: Vec<u64> = (a.n_min..=a.n_max).collect();
    let mut report = verify_sandwich(&spec, &grid, &ids, mode, &params)?;
    if a.scale_upper != 1.0 {
        rec.param("scale_upper", a.scale_upper);
        for row in &mut report.rows {
            for u in &mut row.uppers {
                u.value *= a.scale_upper;
            }
        }
        report.recheck();
    }
    for row in &report.rows {
        if let Some(lower) = row.lower {
            rec.row(json!({
                "n": row.n, "exact": row.exact, "bound": TheoremId::KriegLower,
                "value": lower, "applicable": true, "kind": "lower",
            }));
        }
        for u in &row.uppers {
            rec.row(json!({
                "n": row.n, "exact": row.exact, "bound": u.theorem_id,
                "value": u.value, "applicable": u.applicable, "kind": "upper",
            }));
        }
    }
    for v in &report.violations {
        rec.warn(format!(
            "violation at n = {}: {} bound {} vs exact {} ({:?})",
            v.n, v.theorem_id, v.bound, v.exact, v.kind
        ));
    }
    Ok(Outcome {
        violated: !report.passed(),
        record: rec,
    })
}

fn oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    let mut rec = OutputRecord::new("verify oracle");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    rec.param("n", a.n);
    if let Some(r) = a.box_radius {
        rec.param("box_radius", r);
    }
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let seq = singular_values(&WeightFunction::new(&spec), a.n)?;
    let brute = brute_force_an(&spec, a.n, a.box_radius)?;
    let mut mismatches = 0;
    for (i, (e, b)) in seq.values.iter().zip(&brute).enumerate() {
        let rel = ((e - b) / b).abs();
        let ok = if seq.exact { e == b } else { rel <= 1e-12 };
        mismatches += usize::from(!ok);
        rec.row(json!({ "n": i + 1, "enumerate": e, "oracle": b, "rel_error": rel, "match": ok }));
    }
    if seq.values.len() != brute.len() {
        mismatches += 1;
        rec.warn(format!("lengths differ: {} vs {}", seq.values.len(), brute.len()));
    }
    if mismatches > 0 {
        rec.warn(format!("{mismatches} values differ from the oracle"));
    }
    Ok(Outcome {
        record: rec,
        violated: mismatches > 0,
    })
}

fn ratio(a: &RatioArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("verify ratio");
    let spec = problem(&a.problem, Target::L2, &mut rec)?;
    if a.radii.is_empty() {
        rec.param("checkpoints", &a.checkpoints);
        for p in asymptotic_ratio_trace(&spec, &a.checkpoints)? {
            rec.row(p);
        }
    } else {
        rec.param("radii", &a.radii);
        for p in counting_ratio_trace(&spec, &a.radii)? {
            rec.row(p);
        }
    }
    Ok(rec)
}

fn tensor(a: &TensorArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("verify tensor");
    rec.param("a", a.a);
    rec.param("b", a.b);
    rec.param("n_max", a.n_max);
    rec.param("alpha", a.alpha);
    rec.param("beta", a.beta);
    rec.param("lambda", a.lambda);
    if a.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let report = tensor_merge_check(a.a, a.b, a.n_max, a.alpha, a.beta, a.lambda)?;
    for row in &report.rows {
        rec.row(json!({ "n": row.n, "c_n": row.c_n, "trace": row.trace, "target": report.target }));
    }
    Ok(rec)
}

fn tract(a: &TractArgs) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new("tract");
    rec.param("s1", a.s1);
    rec.param("beta", a.beta);
    rec.param("tau", a.tau);
    rec.param("dmax", a.dmax);
    let rule = if a.beta == 0.0 {
        GrowthRule::Constant { s: a.s1 }
    } else {
        GrowthRule::LogGrowth { s1: a.s1, beta: a.beta }
    };
    let r = tractability_verdict(&rule, a.tau, a.dmax)?;
    if r.flagged {
        rec.warn("some 2τs_j ≤ 1: the zeta product diverges termwise");
    }
    rec.row(r);
    Ok(rec)
}
