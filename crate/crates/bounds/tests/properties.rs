use approx::assert_relative_eq;
use hypcross_bounds::*;
use hypcross_core::{make_problem, FineIndex, ProblemSpec, Target};
use proptest::prelude::*;

fn ub(spec: &ProblemSpec, n: f64, id: TheoremId, params: &BoundParams) -> BoundResult {
    upper_bound(spec, n, id, params, ConstantMode::AsPrinted).unwrap()
}

#[test]
fn smallbbb_beats_small_from_d5() {
    for d in 5..=26 {
        let spec = ProblemSpec::constant(d, 1.0, FineIndex::Finite(1.0)).unwrap();
        for n in [10.0, 100.0, 1000.0] {
            let bbb = ub(&spec, n, TheoremId::SmallBbb, &BoundParams::default());
            let small = ub(&spec, n, TheoremId::Small, &BoundParams::default());
            assert!(bbb.value <= small.value, "d={d} n={n}");
        }
    }
}

#[test]
fn energy_main0_is_smalldd_with_shifted_smoothness() {
    for d in 3..=12 {
        for &s in &[1.5, 2.0, 3.0] {
            let energy = make_problem(d, &vec![s; d], &vec![FineIndex::Finite(2.0); d], Target::H1).unwrap();
            let shifted = ProblemSpec::constant(d, s - 1.0, FineIndex::Finite(2.0)).unwrap();
            for n in [2.0, 17.0, 1e3, 1e6] {
                let a = ub(&energy, n, TheoremId::EnergyMain0, &BoundParams::default());
                let b = ub(&shifted, n, TheoremId::SmallDdQ, &BoundParams::default());
                assert_relative_eq!(a.value, b.value, max_relative = 1e-14);
                assert!(a.applicable && b.applicable);
            }
        }
    }
}

#[test]
fn asymptotic_constant_increases_with_dimension() {
    for nu in 1..=4 {
        let mut prev = 0.0;
        for d in nu..=nu + 10 {
            let s: Vec<f64> = (0..d).map(|j| if j < nu { 1.0 } else { 2.0 }).collect();
            let spec = make_problem(d, &s, &vec![FineIndex::Finite(1.0); d], Target::L2).unwrap();
            let c = asymptotic_constant(&spec, NormFamily::Fractional).unwrap();
            assert!(c > prev, "nu={nu} d={d}");
            prev = c;
        }
    }
}

proptest! {
    #[test]
    fn pure_power_bounds_scale(d in 3usize..20, s in 0.3f64..3.0, lambda in 0.2f64..4.0, n in 2.0f64..1e6) {
        let base = ProblemSpec::constant(d, s, FineIndex::Finite(1.0)).unwrap();
        let scaled = base.scaled(lambda).unwrap();
        for id in [TheoremId::Small, TheoremId::SmallBbb] {
            let a = ub(&base, n, id, &BoundParams::default()).value;
            let b = ub(&scaled, n, id, &BoundParams::default()).value;
            prop_assert!((b - a.powf(lambda)).abs() <= 1e-12 * b.abs().max(1e-300));
        }
        let log_s: Vec<f64> = (1..=d).map(|j| s * (1.0 + 1.5 * (j as f64).log2())).collect();
        let base = make_problem(d, &log_s, &vec![FineIndex::Finite(1.0); d], Target::L2).unwrap();
        let scaled = base.scaled(lambda).unwrap();
        let p = BoundParams { beta: Some(1.5), alpha: Some(1.2), part: None };
        let a = ub(&base, n, TheoremId::LogGrowth, &p);
        let b = ub(&scaled, n, TheoremId::LogGrowth, &p);
        prop_assert!(a.applicable && b.applicable);
        prop_assert!((b.value - a.value.powf(lambda)).abs() <= 1e-12 * b.value);
    }

    #[test]
    fn applicable_values_are_positive(d in 2usize..12, s in 0.5f64..3.0, n in 1.0f64..1e5, q in prop_oneof![Just(1.0), Just(2.0)]) {
        let spec = ProblemSpec::constant(d, s, FineIndex::Finite(q)).unwrap();
        let p = BoundParams { beta: Some(5.0), alpha: Some(2.0), part: None };
        for id in TheoremId::UPPER {
            let r = ub(&spec, n, id, &p);
            if r.applicable {
                prop_assert!(r.value > 0.0 && r.value.is_finite());
            }
        }
    }
}
