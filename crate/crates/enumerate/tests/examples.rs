mod support;

use hypcross_core::{FineIndex, WeightFunction};
use hypcross_enumerate::{
    jump_sequence, nth_singular_value, optimal_index_set, singular_values, singular_values_with,
    EnumConfig, EnumerateError, PlateauMark,
};
use support::*;

const INF: FineIndex = FineIndex::Infinite;

#[test]
fn one_dimensional_q_inf_plateau() {
    let w = WeightFunction::new(&l2(&[5.0], &[INF]));
    let seq = singular_values(&w, 4).unwrap();
    assert_eq!(seq.values, vec![1.0, 1.0, 1.0, 2f64.powi(-5)]);
    assert!(seq.exact);
}

#[test]
fn first_value_is_one() {
    for spec in [l2(&[0.3, 2.0], &[fin(0.5), INF]), l2(&[1.0; 3], &[fin(2.0); 3])] {
        assert_eq!(nth_singular_value(&WeightFunction::new(&spec), 1).unwrap(), 1.0);
    }
    let e = WeightFunction::new(&h1(3, 1.5));
    assert_eq!(nth_singular_value(&e, 1).unwrap(), 1.0);
}

#[test]
fn two_dimensional_hyperbolic_cross() {
    let w = WeightFunction::new(&l2(&[1.0, 1.0], &[fin(1.0); 2]));
    let seq = singular_values(&w, 17).unwrap();
    let mut expect = vec![1.0];
    expect.extend([0.5; 4]);
    expect.extend([1.0 / 3.0; 4]);
    expect.extend([0.25; 8]);
    assert_eq!(seq.values, expect);
    assert_eq!(seq.values[9], 0.25);
    assert_eq!(nth_singular_value(&w, 17).unwrap(), 0.25);
    let marks: Vec<(f64, u64)> = seq.plateaus.iter().map(|p| (p.theta, p.n)).collect();
    assert_eq!(marks, vec![(1.0, 1), (2.0, 5), (3.0, 9), (4.0, 17)]);
}

#[test]
fn squared_smoothness_squares_values() {
    let w = WeightFunction::new(&l2(&[2.0, 2.0], &[fin(1.0); 2]));
    assert_eq!(nth_singular_value(&w, 10).unwrap(), 1.0 / 16.0);
}

#[test]
fn energy_second_value() {
    let w = WeightFunction::new(&h1(2, 2.0));
    let a2 = nth_singular_value(&w, 2).unwrap();
    assert!((a2 - 2f64.sqrt() / 2.0).abs() <= 1e-15);
    let oracle = box_sorted(2, 64, &energy_sigma(2.0));
    let seq = singular_values(&w, 200).unwrap();
    for (a, b) in seq.values.iter().zip(&oracle) {
        assert!((a - b).abs() <= 1e-12 * b);
    }
}

#[test]
fn jump_sequences() {
    let one_d = WeightFunction::new(&l2(&[1.0], &[fin(1.0)]));
    let marks = jump_sequence(&one_d, 4).unwrap();
    assert_eq!(
        marks,
        vec![
            PlateauMark { theta: 1.0, n: 1 },
            PlateauMark { theta: 2.0, n: 3 },
            PlateauMark { theta: 3.0, n: 5 },
            PlateauMark { theta: 4.0, n: 7 },
        ]
    );
    let w = WeightFunction::new(&l2(&[1.0, 1.0], &[fin(1.0); 2]));
    let ns: Vec<u64> = jump_sequence(&w, 4).unwrap().iter().map(|p| p.n).collect();
    assert_eq!(ns, vec![1, 5, 9, 17]);
    let inf = WeightFunction::new(&l2(&[1.0, 1.0], &[INF; 2]));
    let marks = jump_sequence(&inf, 2).unwrap();
    assert_eq!(marks[0], PlateauMark { theta: 1.0, n: 9 });
    // u = 2 adds (±2, 0), (±2, ±1) and their transposes
    assert_eq!(marks[1], PlateauMark { theta: 2.0, n: 21 });
    let spec = l2(&[1.0, 1.0], &[INF; 2]);
    let brute = box_sorted(2, 4, &tensor_sigma(&spec)).iter().filter(|&&v| v >= 0.5).count();
    assert_eq!(brute, 21);
}

#[test]
fn optimal_index_sets() {
    let spec = l2(&[1.0], &[fin(1.0)]);
    assert!(optimal_index_set(&spec, 1).unwrap().is_empty());
    assert_eq!(optimal_index_set(&spec, 4).unwrap(), vec![vec![0], vec![1], vec![-1]]);
    let spec2 = l2(&[1.0, 1.0], &[fin(1.0); 2]);
    let set = optimal_index_set(&spec2, 6).unwrap();
    assert_eq!(set, vec![vec![0, 0], vec![0, 1], vec![0, -1], vec![1, 0], vec![-1, 0]]);
}

#[test]
fn optimal_index_set_is_a_superlevel_set() {
    let spec = l2(&[1.0, 1.5, 2.0], &[fin(1.0), fin(2.0), INF]);
    let sigma = tensor_sigma(&spec);
    for n in [2u64, 10, 37, 200] {
        let set = optimal_index_set(&spec, n).unwrap();
        assert_eq!(set.len() as u64, n - 1);
        let worst_in = set.iter().map(|k| sigma(k)).fold(f64::INFINITY, f64::min);
        let r = 12;
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    let k = vec![a, b, c];
                    if !set.contains(&k) {
                        assert!(sigma(&k) <= worst_in * (1.0 + 1e-12));
                    }
                }
            }
        }
    }
}

#[test]
fn budget_cap_is_enforced() {
    let w = WeightFunction::new(&l2(&[1.0; 6], &[fin(1.0); 6]));
    let cfg = EnumConfig { frontier_cap: 10, ..EnumConfig::default() };
    assert!(matches!(
        singular_values_with(&w, 10_000, cfg),
        Err(EnumerateError::BudgetExceeded { cap: 10 })
    ));
    assert!(singular_values(&w, 0).is_err());
}

#[test]
fn energy_target_is_rejected_for_index_sets() {
    assert!(optimal_index_set(&h1(2, 2.0), 3).is_err());
}
