mod support;

use hypcross_core::{FineIndex, WeightFunction};
use hypcross_enumerate::{singular_values, Frontier, EnumConfig, LatticeWeight};
use proptest::prelude::*;
use support::*;

fn q_strategy() -> impl Strategy<Value = FineIndex> {
    prop_oneof![
        Just(fin(1.0)),
        Just(fin(2.0)),
        (0.5f64..4.0).prop_map(fin),
        Just(FineIndex::Infinite),
    ]
}

fn problem(max_d: usize) -> impl Strategy<Value = (Vec<f64>, Vec<FineIndex>)> {
    (1..=max_d).prop_flat_map(|d| {
        (prop::collection::vec(0.3f64..3.0, d), prop::collection::vec(q_strategy(), d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matches_brute_force((s, q) in problem(3), n in 1u64..400) {
        let spec = l2(&s, &q);
        let w = WeightFunction::new(&spec);
        let seq = singular_values(&w, n).unwrap();
        // 1-D weight at radius R is at least (1+R)^{s_min·min(1, 1/q)}-ish; take R generous.
        let oracle = box_sorted(spec.d, 30, &tensor_sigma(&spec));
        let boundary = (0..spec.d)
            .map(|j| { let mut k = vec![0i64; spec.d]; k[j] = 31; tensor_sigma(&spec)(&k) })
            .fold(0.0, f64::max);
        let last = *seq.values.last().unwrap();
        // margin: a point just outside the box may round to the same value as `last`
        prop_assume!(boundary < last * (1.0 - 1e-9));
        for (a, b) in seq.values.iter().zip(&oracle) {
            prop_assert!((a - b).abs() <= 1e-12 * b, "{a} vs {b}");
        }
    }

    #[test]
    fn scaling_law((s, q) in problem(3), lambda in prop_oneof![Just(0.5), Just(2.0), Just(3.0)]) {
        let spec = l2(&s, &q);
        let base = singular_values(&WeightFunction::new(&spec), 300).unwrap();
        let scaled = singular_values(&WeightFunction::new(&spec.scaled(lambda).unwrap()), 300).unwrap();
        for (a, b) in base.values.iter().zip(&scaled.values) {
            let expect = a.powf(lambda);
            prop_assert!((b - expect).abs() <= 1e-12 * expect);
        }
    }

    #[test]
    fn permutation_invariance((s, q) in problem(4), seed in any::<u64>()) {
        let d = s.len();
        let mut idx: Vec<usize> = (0..d).collect();
        let mut x = seed;
        for i in (1..d).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            idx.swap(i, (x >> 33) as usize % (i + 1));
        }
        let s2: Vec<f64> = idx.iter().map(|&i| s[i]).collect();
        let q2: Vec<FineIndex> = idx.iter().map(|&i| q[i]).collect();
        let a = singular_values(&WeightFunction::new(&l2(&s, &q)), 500).unwrap();
        let b = singular_values(&WeightFunction::new(&l2(&s2, &q2)), 500).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            prop_assert!((x - y).abs() <= 1e-12 * x);
        }
    }

    #[test]
    fn monotone_in_fine_index(d in 1usize..=4, s in 0.3f64..3.0, qv in 1.0f64..6.0) {
        let n = 400;
        let at = |q: FineIndex| singular_values(&WeightFunction::new(&l2(&vec![s; d], &vec![q; d])), n).unwrap().values;
        let a1 = at(fin(1.0));
        let aq = at(fin(qv));
        let ainf = at(FineIndex::Infinite);
        for i in 0..n as usize {
            prop_assert!(a1[i] <= aq[i] * (1.0 + 1e-12));
            prop_assert!(aq[i] <= ainf[i] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn energy_below_shifted_tensor(d in 1usize..=4, s in 1.05f64..3.0) {
        let n = 500;
        let e = singular_values(&WeightFunction::new(&h1(d, s)), n).unwrap().values;
        let t = singular_values(&WeightFunction::new(&l2(&vec![s - 1.0; d], &vec![fin(2.0); d])), n).unwrap().values;
        for i in 0..n as usize {
            prop_assert!(e[i] <= t[i] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn plateaus_strictly_ordered((s, q) in problem(4)) {
        let w = WeightFunction::new(&l2(&s, &q));
        let mut f = Frontier::new(&w, EnumConfig::default());
        let mut last_theta = 0.0;
        let mut last_n = 0;
        for _ in 0..60 {
            let p = f.next_plateau().unwrap().unwrap();
            prop_assert!(p.theta > last_theta);
            prop_assert!(p.n_end > last_n);
            prop_assert_eq!(p.size, p.members.iter().map(|m| m.multiplicity).sum::<u64>());
            prop_assert!(p.members.windows(2).all(|m| m[0].k < m[1].k));
            for m in &p.members {
                prop_assert_eq!(m.multiplicity, w.multiplicity(&m.k));
            }
            last_theta = p.theta;
            last_n = p.n_end;
        }
    }
}
