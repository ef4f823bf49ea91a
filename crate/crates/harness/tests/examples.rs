use std::f64::consts::PI;

use approx::assert_relative_eq;
use hypcross_bounds::{BoundParams, ConstantMode, TheoremId};
use hypcross_core::{make_problem, FineIndex, ProblemSpec, Target, WeightFunction};
use hypcross_enumerate::singular_values;
use hypcross_harness::{
    asymptotic_ratio_trace, brute_force_an, counting_ratio_trace, reproduce_table, tensor_merge_check,
    verify_sandwich, HarnessError, SequenceRule, TableId, ViolationKind,
};

fn fin(q: f64) -> FineIndex {
    FineIndex::Finite(q)
}

fn l2(s: &[f64], q: FineIndex) -> ProblemSpec {
    make_problem(s.len(), s, &vec![q; s.len()], Target::L2).unwrap()
}

fn enumerate(spec: &ProblemSpec, n: u64) -> Vec<f64> {
    singular_values(&WeightFunction::new(spec), n).unwrap().values
}

#[test]
fn oracle_examples() {
    let spec = l2(&[1.0, 1.0], fin(1.0));
    let a = brute_force_an(&spec, 17, None).unwrap();
    assert_eq!(a, enumerate(&spec, 17));
    assert_eq!(a[16], 0.25);

    let spec = l2(&[1.0], FineIndex::Infinite);
    assert_eq!(brute_force_an(&spec, 3, None).unwrap(), vec![1.0, 1.0, 1.0]);

    let spec = l2(&[1.0; 3], fin(2.0));
    let a = brute_force_an(&spec, 100, None).unwrap();
    for (x, y) in a.iter().zip(enumerate(&spec, 100)) {
        assert_relative_eq!(*x, y, max_relative = 1e-12);
    }
}

#[test]
fn oracle_energy_and_rejections() {
    let spec = make_problem(3, &[2.0; 3], &[fin(1.0); 3], Target::H1).unwrap();
    let a = brute_force_an(&spec, 500, None).unwrap();
    for (x, y) in a.iter().zip(enumerate(&spec, 500)) {
        assert_relative_eq!(*x, y, max_relative = 1e-12);
    }
    let spec = l2(&[1.0; 5], fin(1.0));
    assert!(matches!(brute_force_an(&spec, 10, None), Err(HarnessError::InvalidArgument(_))));
    let spec = l2(&[1.0; 2], fin(1.0));
    assert!(matches!(brute_force_an(&spec, 100, Some(2)), Err(HarnessError::BoxTooSmall(_))));
}

#[test]
fn table_examples() {
    let cd = reproduce_table(TableId::Cd).unwrap();
    assert_eq!(cd.rows.len(), 24);
    let row = cd.rows.iter().find(|r| r.input == 10.0).unwrap();
    assert!((row.computed - 4.4767).abs() < 1e-4 && row.paper_value == 4.476);

    let delta = reproduce_table(TableId::DeltaD).unwrap();
    let row = delta.rows.iter().find(|r| r.input == 9.0).unwrap();
    assert!((row.computed - 0.2027).abs() < 1e-4 && row.paper_value == 0.203);

    let beta = reproduce_table(TableId::BetaKappa).unwrap();
    let row = beta.rows.iter().find(|r| r.input == 5.0).unwrap();
    assert!((row.computed / 67.60 - 1.0).abs() < 5e-3);

    for id in TableId::ALL {
        assert!(reproduce_table(id).unwrap().all_within_tolerance(), "{id}");
        assert_eq!(id.short_name().parse::<TableId>().unwrap(), id);
    }
}

#[test]
fn sandwich_examples() {
    let spec = l2(&[1.0; 3], fin(1.0));
    let grid: Vec<u64> = (2..=500).collect();
    let ids = [TheoremId::SmallBbb, TheoremId::Small];
    let report = verify_sandwich(&spec, &grid, &ids, ConstantMode::DerivationSafe, &BoundParams::default()).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert!(report.rows.iter().any(|r| r.lower.is_some()));

    let spec = make_problem(4, &[2.0; 4], &[fin(1.0); 4], Target::H1).unwrap();
    let grid: Vec<u64> = (8..=2000).collect();
    let ids = [TheoremId::EnergyMain1, TheoremId::EnergyMain2, TheoremId::EnergyMain0];
    let report = verify_sandwich(&spec, &grid, &ids, ConstantMode::DerivationSafe, &BoundParams::default()).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
}

#[test]
fn sandwich_negative_control() {
    let spec = l2(&[1.0; 3], fin(1.0));
    let grid: Vec<u64> = (2..=200).collect();
    let mut report = verify_sandwich(
        &spec,
        &grid,
        &[TheoremId::SmallBbb],
        ConstantMode::DerivationSafe,
        &BoundParams::default(),
    )
    .unwrap();
    assert!(report.passed());
    // shrink the bound's constant C(d) → C(d)/4 (exponent 1/(1+log₂ 2) = 1/2)
    for row in &mut report.rows {
        for u in &mut row.uppers {
            u.value *= 0.5;
        }
    }
    report.recheck();
    assert!(!report.passed());
    assert!(report.violations.iter().all(|v| v.kind == ViolationKind::ExactAboveUpper));

    let mut report = verify_sandwich(&spec, &grid, &[], ConstantMode::DerivationSafe, &BoundParams::default()).unwrap();
    for row in &mut report.rows {
        row.lower = Some(row.exact * 2.0);
    }
    report.recheck();
    assert!(report.violations.iter().any(|v| v.kind == ViolationKind::LowerAboveExact));
}

#[test]
fn ratio_trace_one_dimensional() {
    // a_{2m+1} = 1/m, so R(2m+1) = (2m+1)/m
    let spec = l2(&[1.0], FineIndex::Infinite);
    let pts = asymptotic_ratio_trace(&spec, &[3, 11, 101, 1001]).unwrap();
    for p in &pts {
        let m = (p.n - 1) / 2;
        assert_relative_eq!(p.ratio, p.n as f64 / m as f64, max_relative = 1e-14);
    }
    assert!((pts[3].ratio - 2.0).abs() <= 2.5e-3);
    assert!(asymptotic_ratio_trace(&spec, &[2, 10]).is_err());
    assert!(asymptotic_ratio_trace(&spec, &[10, 5]).is_err());
}

#[test]
fn counting_ratio_approaches_limit() {
    let spec = l2(&[1.0, 1.0], FineIndex::Infinite);
    let pts = counting_ratio_trace(&spec, &[1e2, 1e3, 1e4]).unwrap();
    let errs: Vec<f64> = pts.iter().map(|p| (p.ratio - 4.0).abs()).collect();
    assert!(errs[0] > errs[1] && errs[1] > errs[2]);
}

#[test]
fn ratio_trace_drifts_to_constant() {
    // trend only: logarithmic convergence toward 2(π²/3 − 1) ≈ 4.5797
    let spec = l2(&[1.0, 2.0], fin(1.0));
    let target = 2.0 * (PI * PI / 3.0 - 1.0);
    let pts = asymptotic_ratio_trace(&spec, &[100, 10_000, 1_000_000]).unwrap();
    let errs: Vec<f64> = pts.iter().map(|p| (p.ratio - target).abs()).collect();
    assert!(errs[2] < errs[0], "{pts:?}");
}

#[test]
fn tensor_merge_examples() {
    let r = tensor_merge_check(
        SequenceRule::Power { p: 1.0 },
        SequenceRule::Geometric { base: 2.0 },
        100_000,
        0.0,
        1.0,
        1.0,
    )
    .unwrap();
    assert_relative_eq!(r.target, 1.0, max_relative = 1e-14);
    // #{(j,k) : 1/(j 2^k) ≥ t} ≤ Σ_k 1/(t 2^k) = 1/t, so n c_n ≤ 1
    assert!(r.rows.iter().all(|row| row.trace <= r.target * (1.0 + 1e-12)));
    let last = r.rows.last().unwrap();
    assert!(r.target - last.trace < 1e-3, "{last:?}");
    assert!(r.target - r.rows[2].trace > r.target - last.trace);

    let r = tensor_merge_check(SequenceRule::Power { p: 1.0 }, SequenceRule::Single, 1000, 0.0, 1.0, 1.0).unwrap();
    for row in &r.rows {
        assert_relative_eq!(row.c_n, 1.0 / row.n as f64, max_relative = 1e-14);
    }

    let r = tensor_merge_check(
        SequenceRule::Power { p: 2.0 },
        SequenceRule::Power { p: 4.0 },
        100_000,
        0.0,
        2.0,
        1.0,
    )
    .unwrap();
    assert_relative_eq!(r.target, (PI * PI / 6.0).powi(2), max_relative = 1e-12);
    let first = (r.rows[1].trace - r.target).abs();
    let last = (r.rows.last().unwrap().trace - r.target).abs();
    assert!(last < first, "{:?}", r.rows);
}
