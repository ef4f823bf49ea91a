use hypcross_core::{make_problem, FineIndex, ProblemSpec, Target, WeightFunction};
use hypcross_count::{clever_bound, count_exact};
use hypcross_enumerate::jump_sequence;
use proptest::prelude::*;

/// Lattice points with `Π_j (1+|k_j|^{q_j})^{s_j/q_j} ≤ r`, by nested loops in
/// user order with the partial product pruning the search.
fn brute_count(s: &[f64], q: &[FineIndex], r: f64) -> u64 {
    fn factor(s: f64, q: FineIndex, m: u64) -> f64 {
        let m = m as f64;
        match q {
            FineIndex::Finite(q) => (1.0 + m.powf(q)).powf(s / q),
            FineIndex::Infinite => m.max(1.0).powf(s),
        }
    }
    fn walk(s: &[f64], q: &[FineIndex], j: usize, acc: f64, r: f64) -> u64 {
        if j == s.len() {
            return 1;
        }
        let mut total = 0;
        let mut m = 0u64;
        loop {
            let v = acc * factor(s[j], q[j], m);
            if v > r {
                break;
            }
            total += if m == 0 { 1 } else { 2 } * walk(s, q, j + 1, v, r);
            m += 1;
        }
        total
    }
    walk(s, q, 0, 1.0, r * (1.0 + 1e-12))
}

fn fine_index() -> impl Strategy<Value = FineIndex> {
    prop_oneof![
        Just(FineIndex::Finite(1.0)),
        Just(FineIndex::Finite(2.0)),
        Just(FineIndex::Infinite),
        (0.5f64..3.0).prop_map(FineIndex::Finite),
    ]
}

fn smoothness() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), Just(2.0), Just(3.0), 0.5f64..3.0]
}

fn problem() -> impl Strategy<Value = ProblemSpec> {
    (1usize..=4)
        .prop_flat_map(|d| (prop::collection::vec(smoothness(), d), prop::collection::vec(fine_index(), d)))
        .prop_map(|(s, q)| make_problem(s.len(), &s, &q, Target::L2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn matches_brute_force(spec in problem(), r in 1.0f64..100.0, whole in any::<bool>()) {
        let r = if whole { r.round() } else { r };
        let c = count_exact(&spec, r).unwrap();
        let user_s: Vec<f64> = (0..spec.d).map(|i| spec.s[spec.perm.iter().position(|&p| p == i).unwrap()]).collect();
        let user_q: Vec<FineIndex> = (0..spec.d).map(|i| spec.q[spec.perm.iter().position(|&p| p == i).unwrap()]).collect();
        let brute = brute_count(&user_s, &user_q, r);
        if WeightFunction::tensor(&spec).unwrap().is_integer() || !c.tie_sensitive {
            prop_assert_eq!(c.value, brute);
        }
        prop_assert!(c.value >= 1);
    }

    #[test]
    fn monotone_in_radius(spec in problem(), r1 in 1.0f64..60.0, dr in 0.0f64..40.0) {
        let a = count_exact(&spec, r1).unwrap().value;
        let b = count_exact(&spec, r1 + dr).unwrap().value;
        prop_assert!(a <= b);
    }

    #[test]
    fn dominated_by_zeta_bound(
        d in 1usize..=4,
        s in prop::collection::vec(smoothness(), 4),
        q in prop::collection::vec(prop_oneof![Just(1.0), Just(2.0), 1.0f64..3.0], 4),
        r in 1.0f64..100.0,
    ) {
        let q: Vec<FineIndex> = q[..d].iter().map(|&v| FineIndex::Finite(v)).collect();
        let spec = make_problem(d, &s[..d], &q, Target::L2).unwrap();
        let exact = count_exact(&spec, r).unwrap().value as f64;
        let mut alphas = vec![1.5, 2.0];
        if d >= 3 {
            alphas.push(1.0 + ((d - 1) as f64).log2());
        }
        for alpha in alphas {
            let bound = clever_bound(&spec, r, alpha).unwrap();
            prop_assert!(exact <= bound, "alpha {}: {} > {}", alpha, exact, bound);
        }
    }
}

#[test]
fn plateau_counts_match_jump_sequence() {
    let cases = [
        (vec![1.0, 1.0], vec![FineIndex::Finite(1.0); 2]),
        (vec![1.0, 2.0, 3.0], vec![FineIndex::Finite(1.0); 3]),
        (vec![1.0, 1.0], vec![FineIndex::Infinite; 2]),
        (vec![2.0, 2.0, 2.0], vec![FineIndex::Finite(2.0); 3]),
        (vec![0.7, 1.3], vec![FineIndex::Finite(1.5), FineIndex::Finite(0.8)]),
    ];
    for (s, q) in cases {
        let spec = make_problem(s.len(), &s, &q, Target::L2).unwrap();
        let w = WeightFunction::tensor(&spec).unwrap();
        for mark in jump_sequence(&w, 60).unwrap() {
            let c = count_exact(&spec, mark.theta).unwrap();
            assert_eq!(c.value, mark.n, "s={s:?} theta={}", mark.theta);
        }
    }
}
