//! Brute-force `a_n`: every lattice point of `ℤ^d` below a threshold, listed
//! with signs and sorted. Shares nothing with the frontier walk and evaluates
//! the weights from their defining formulas.

use hypcross_core::{FineIndex, ProblemSpec, Target};

use crate::HarnessError;

/// Largest dimension the oracle accepts.
pub const ORACLE_MAX_DIM: usize = 4;

/// Points collected in one pass before the oracle gives up.
const POINT_CAP: usize = 20_000_000;

/// `a_1, …, a_{n_max}` by listing lattice points.
///
/// The threshold `V` on `u(k)` doubles until at least `n_max` points satisfy
/// `u(k) ≤ V`. Each factor of `u` is at least 1, so those points lie in the
/// box `|k_j| ≤ R_j(V)` and partial products above `V` prune the scan. With
/// `box_radius` every `|k_j|` is additionally capped, and the result must be
/// certified by the weights just outside the box. The energy weight is
/// handled the same way through its product majorant.
pub fn brute_force_an(spec: &ProblemSpec, n_max: u64, box_radius: Option<u64>) -> Result<Vec<f64>, HarnessError> {
    if spec.d > ORACLE_MAX_DIM {
        return Err(HarnessError::InvalidArgument(format!(
            "brute force supports d ≤ {ORACLE_MAX_DIM}, got d = {}",
            spec.d
        )));
    }
    if n_max == 0 {
        return Err(HarnessError::InvalidArgument("n_max must be at least 1".into()));
    }
    match spec.target {
        Target::L2 => match integer_exponents(spec) {
            Some(exps) => tensor_integer(&exps, n_max as usize, box_radius),
            None => tensor_float(spec, n_max as usize, box_radius),
        },
        Target::H1 => energy(spec, n_max as usize, box_radius),
    }
}

#[derive(Clone, Copy)]
enum IntExp {
    /// `(1+m^q)^p`
    Poly { q: u32, p: u32 },
    /// `max(1,m)^s`
    Max { s: u32 },
}

fn as_small_int(x: f64) -> Option<u32> {
    ((1.0..=128.0).contains(&x) && x.fract() == 0.0).then_some(x as u32)
}

fn integer_exponents(spec: &ProblemSpec) -> Option<Vec<IntExp>> {
    spec.s
        .iter()
        .zip(&spec.q)
        .map(|(&s, &q)| match q {
            FineIndex::Infinite => as_small_int(s).map(|s| IntExp::Max { s }),
            FineIndex::Finite(q) => Some(IntExp::Poly {
                q: as_small_int(q)?,
                p: as_small_int(s / q)?,
            }),
        })
        .collect()
}

fn int_factor(e: IntExp, m: u64) -> Option<u128> {
    let m = m as u128;
    match e {
        IntExp::Poly { q, p } => m.checked_pow(q)?.checked_add(1)?.checked_pow(p),
        IntExp::Max { s } => m.max(1).checked_pow(s),
    }
}

fn float_factor(s: f64, q: FineIndex, m: u64) -> f64 {
    let m = m as f64;
    match q {
        FineIndex::Infinite => m.max(1.0).powf(s),
        FineIndex::Finite(q) => (1.0 + m.powf(q)).powf(s / q),
    }
}

/// Factor values `f(0), f(1), …` up to the last one `≤ limit`, or up to the cap.
/// Also returns `f(len)`, the first value left out.
fn table<T: Copy + PartialOrd>(f: impl Fn(u64) -> Option<T>, limit: T, cap: Option<u64>) -> (Vec<T>, Option<T>) {
    let mut out = Vec::new();
    let mut m = 0u64;
    loop {
        let v = f(m);
        let inside = cap.is_none_or(|c| m <= c);
        match v {
            Some(v) if inside && v <= limit => out.push(v),
            _ => return (out, v),
        }
        m += 1;
    }
}

/// Products over all signed points with every partial product `≤ limit`.
fn scan<T: Copy + PartialOrd>(
    tables: &[Vec<T>],
    limit: T,
    mul: &impl Fn(T, T) -> Option<T>,
    acc: T,
    out: &mut Vec<T>,
) -> Result<(), HarnessError> {
    let Some((first, rest)) = tables.split_first() else {
        out.push(acc);
        return if out.len() > POINT_CAP {
            Err(HarnessError::BoxTooSmall(format!("more than {POINT_CAP} points below the threshold")))
        } else {
            Ok(())
        };
    };
    let r = first.len() as i64 - 1;
    for k in -r..=r {
        match mul(acc, first[k.unsigned_abs() as usize]) {
            Some(p) if p <= limit => scan(rest, limit, mul, p, out)?,
            _ => {}
        }
    }
    Ok(())
}

/// Sorted values `u ≤ limit` and whether every such point of `ℤ^d` was reached,
/// plus the smallest factor just outside the capped box.
struct Pass<T> {
    values: Vec<T>,
    outside: Option<T>,
    complete: bool,
}

fn pass<T: Copy + PartialOrd>(
    factors: &[Box<dyn Fn(u64) -> Option<T> + '_>],
    limit: T,
    one: T,
    cap: Option<u64>,
    mul: impl Fn(T, T) -> Option<T>,
) -> Result<Pass<T>, HarnessError> {
    let mut tables = Vec::with_capacity(factors.len());
    let mut outside: Option<T> = None;
    let mut complete = true;
    for f in factors {
        let (t, next) = table(f, limit, cap);
        if t.is_empty() {
            return Err(HarnessError::InvalidArgument("weight factor at k = 0 exceeds the threshold".into()));
        }
        if let (Some(c), Some(next)) = (cap, next) {
            if t.len() as u64 == c + 1 {
                if next <= limit {
                    complete = false;
                }
                outside = Some(match outside {
                    Some(o) if o <= next => o,
                    _ => next,
                });
            }
        }
        tables.push(t);
    }
    let mut values = Vec::new();
    scan(&tables, limit, &mul, one, &mut values)?;
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite weights"));
    Ok(Pass {
        values,
        outside,
        complete,
    })
}

/// Runs passes with a doubling threshold until `n` values are certified.
fn drive<T: Copy + PartialOrd>(
    n: usize,
    cap: Option<u64>,
    mut limit: f64,
    run: impl Fn(f64) -> Result<Pass<T>, HarnessError>,
    to_f64: impl Fn(T) -> f64,
) -> Result<Vec<T>, HarnessError> {
    loop {
        let p = run(limit)?;
        if p.values.len() >= n {
            let v = p.values[n - 1];
            if !p.complete {
                // only points inside the box were listed; the weights just
                // outside must not undercut the n-th value
                match p.outside {
                    Some(o) if o >= v => {}
                    _ => {
                        return Err(HarnessError::BoxTooSmall(format!(
                            "radius {} does not certify a_{n}",
                            cap.unwrap_or(0)
                        )))
                    }
                }
            }
            let mut values = p.values;
            values.truncate(n);
            return Ok(values);
        }
        if !p.complete {
            return Err(HarnessError::BoxTooSmall(format!(
                "radius {} holds only {} points",
                cap.unwrap_or(0),
                p.values.len()
            )));
        }
        limit *= 2.0;
        if !limit.is_finite() || p.values.last().is_some_and(|&v| !to_f64(v).is_finite()) {
            return Err(HarnessError::BoxTooSmall("threshold overflow".into()));
        }
    }
}

fn tensor_integer(exps: &[IntExp], n: usize, cap: Option<u64>) -> Result<Vec<f64>, HarnessError> {
    let factors: Vec<Box<dyn Fn(u64) -> Option<u128>>> = exps
        .iter()
        .map(|&e| Box::new(move |m| int_factor(e, m)) as Box<dyn Fn(u64) -> Option<u128>>)
        .collect();
    let run = |limit: f64| {
        if limit >= 2f64.powi(120) {
            return Err(HarnessError::BoxTooSmall("threshold beyond 2^120".into()));
        }
        pass(&factors, limit as u128, 1u128, cap, |a: u128, b| a.checked_mul(b))
    };
    let u = drive(n, cap, 2.0, run, |u| u as f64)?;
    Ok(u.into_iter().map(|u| 1.0 / u as f64).collect())
}

fn tensor_float(spec: &ProblemSpec, n: usize, cap: Option<u64>) -> Result<Vec<f64>, HarnessError> {
    let factors: Vec<Box<dyn Fn(u64) -> Option<f64>>> = spec
        .s
        .iter()
        .zip(&spec.q)
        .map(|(&s, &q)| Box::new(move |m| Some(float_factor(s, q, m))) as Box<dyn Fn(u64) -> Option<f64>>)
        .collect();
    let run = |limit: f64| pass(&factors, limit, 1.0, cap, |a: f64, b| Some(a * b));
    let u = drive(n, cap, 2.0, run, |u| u)?;
    Ok(u.into_iter().map(|u| 1.0 / u).collect())
}

/// Energy weight `(1+|k|²)^{1/2} / Π(1+k_j²)^{s_j/2}`, at most
/// `1/Π(1+k_j²)^{(s_j−1)/2}`. Points with majorant product `≤ V` contain every
/// point with weight `≥ 1/V`.
fn energy(spec: &ProblemSpec, n: usize, cap: Option<u64>) -> Result<Vec<f64>, HarnessError> {
    if spec.s.iter().any(|&s| !(s > 1.0)) {
        return Err(HarnessError::InvalidArgument(
            "energy oracle needs every s_j > 1".into(),
        ));
    }
    let s = &spec.s;
    let mut limit = 2.0;
    loop {
        let mut tables = Vec::with_capacity(spec.d);
        let mut complete = true;
        let mut outside = f64::INFINITY;
        for &sj in s {
            let g = |m: u64| (1.0 + (m as f64).powi(2)).powf((sj - 1.0) / 2.0);
            let (t, next) = table(|m| Some(g(m)), limit, cap);
            if let (Some(c), Some(next)) = (cap, next) {
                if t.len() as u64 == c + 1 {
                    complete &= next > limit;
                    outside = outside.min(next);
                }
            }
            tables.push(t);
        }
        let mut points = Vec::new();
        collect_points(&tables, limit, 1.0, &mut Vec::with_capacity(spec.d), &mut points)?;
        let mut sigma: Vec<f64> = points
            .iter()
            .map(|k| {
                let norm: f64 = k.iter().map(|&c| (c as f64).powi(2)).sum();
                let mixed: f64 = k.iter().zip(s).map(|(&c, &sj)| (1.0 + (c as f64).powi(2)).powf(sj / 2.0)).product();
                (1.0 + norm).sqrt() / mixed
            })
            .collect();
        sigma.sort_by(|a, b| b.total_cmp(a));
        // weights ≥ 1/V are complete; smaller ones may be missing
        let floor = if complete { 1.0 / limit } else { 1.0 / outside.min(limit) };
        let certified = sigma.iter().take_while(|&&v| v >= floor).count();
        if certified >= n {
            sigma.truncate(n);
            return Ok(sigma);
        }
        if !complete {
            return Err(HarnessError::BoxTooSmall(format!(
                "radius {} certifies only {certified} values",
                cap.unwrap_or(0)
            )));
        }
        limit *= 2.0;
        if !limit.is_finite() {
            return Err(HarnessError::BoxTooSmall("threshold overflow".into()));
        }
    }
}

fn collect_points(
    tables: &[Vec<f64>],
    limit: f64,
    acc: f64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) -> Result<(), HarnessError> {
    let j = prefix.len();
    if j == tables.len() {
        out.push(prefix.clone());
        return if out.len() > POINT_CAP {
            Err(HarnessError::BoxTooSmall(format!("more than {POINT_CAP} points below the threshold")))
        } else {
            Ok(())
        };
    }
    let r = tables[j].len() as i64 - 1;
    for k in -r..=r {
        let p = acc * tables[j][k.unsigned_abs() as usize];
        if p <= limit {
            prefix.push(k);
            collect_points(tables, limit, p, prefix, out)?;
            prefix.pop();
        }
    }
    Ok(())
}
