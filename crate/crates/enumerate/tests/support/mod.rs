//! Brute-force reference used by several test files.
#![allow(dead_code)]

use hypcross_core::{make_problem, FineIndex, ProblemSpec, Target};

pub fn fin(v: f64) -> FineIndex {
    FineIndex::Finite(v)
}

pub fn l2(s: &[f64], q: &[FineIndex]) -> ProblemSpec {
    make_problem(s.len(), s, q, Target::L2).unwrap()
}

pub fn h1(d: usize, s: f64) -> ProblemSpec {
    make_problem(d, &vec![s; d], &vec![fin(2.0); d], Target::H1).unwrap()
}

/// Every `σ(k)` for `k ∈ {-r..r}^d`, sorted descending. `sigma` takes the full signed point.
pub fn box_sorted(d: usize, r: i64, sigma: &dyn Fn(&[i64]) -> f64) -> Vec<f64> {
    let side = (2 * r + 1) as usize;
    let total = side.pow(d as u32);
    let mut out = Vec::with_capacity(total);
    let mut k = vec![0i64; d];
    for idx in 0..total {
        let mut rem = idx;
        for c in k.iter_mut() {
            *c = (rem % side) as i64 - r;
            rem /= side;
        }
        out.push(sigma(&k));
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Direct tensor weight on a signed point, in the problem's canonical order.
pub fn tensor_sigma(spec: &ProblemSpec) -> impl Fn(&[i64]) -> f64 + '_ {
    move |k: &[i64]| {
        let u: f64 = spec
            .s
            .iter()
            .zip(&spec.q)
            .zip(k)
            .map(|((&s, &q), &c)| {
                let c = c.unsigned_abs() as f64;
                match q {
                    FineIndex::Finite(q) => (1.0 + c.powf(q)).powf(s / q),
                    FineIndex::Infinite => c.max(1.0).powf(s),
                }
            })
            .product();
        1.0 / u
    }
}

pub fn energy_sigma(s: f64) -> impl Fn(&[i64]) -> f64 {
    move |k: &[i64]| {
        let norm: f64 = k.iter().map(|&c| (c * c) as f64).sum();
        let prod: f64 = k.iter().map(|&c| (1.0 + (c * c) as f64).powf(s / 2.0)).product();
        (1.0 + norm).sqrt() / prod
    }
}
