use hypcross_core::{make_problem, CoreError, FineIndex, ProblemSpec, Target};

const INF: FineIndex = FineIndex::Infinite;

fn fin(v: f64) -> FineIndex {
    FineIndex::Finite(v)
}

#[test]
fn sorts_smoothness_and_permutes_q() {
    let p = make_problem(3, &[2.0, 1.0, 3.0], &[fin(1.0), fin(2.0), INF], Target::L2).unwrap();
    assert_eq!(p.s, vec![1.0, 2.0, 3.0]);
    assert_eq!(p.q, vec![fin(2.0), fin(1.0), INF]);
    assert_eq!(p.nu, 1);
    assert_eq!(p.perm, vec![1, 0, 2]);
}

#[test]
fn two_dimensional_sorting_example() {
    let p = make_problem(2, &[2.0, 1.0], &[fin(1.0), fin(1.0)], Target::L2).unwrap();
    assert_eq!(p.s, vec![1.0, 2.0]);
    assert_eq!(p.nu, 1);
}

#[test]
fn constant_vector_has_full_multiplicity() {
    let p = make_problem(3, &[1.0; 3], &[INF; 3], Target::L2).unwrap();
    assert_eq!(p.nu, 3);
    assert!(p.is_constant_s());
    assert_eq!(p.constant_q(), Some(INF));
}

#[test]
fn rejects_bad_inputs() {
    assert!(matches!(
        make_problem(2, &[1.0, 1.0], &[fin(2.0), fin(2.0)], Target::H1),
        Err(CoreError::EnergyNeedsSmoothness { .. })
    ));
    assert!(matches!(
        make_problem(2, &[1.0, 0.0], &[fin(1.0), fin(1.0)], Target::L2),
        Err(CoreError::NonPositiveSmoothness { index: 1, .. })
    ));
    assert!(matches!(
        make_problem(1, &[1.0], &[fin(-1.0)], Target::L2),
        Err(CoreError::InvalidFineIndex { index: 0, .. })
    ));
    assert!(matches!(
        make_problem(2, &[1.0], &[fin(1.0)], Target::L2),
        Err(CoreError::DimensionMismatch { what: "s", .. })
    ));
    assert_eq!(make_problem(0, &[], &[], Target::L2), Err(CoreError::ZeroDimension));
}

#[test]
fn fine_index_parsing_and_serde() {
    assert_eq!("inf".parse::<FineIndex>().unwrap(), INF);
    assert_eq!("2.5".parse::<FineIndex>().unwrap(), fin(2.5));
    assert!("x".parse::<FineIndex>().is_err());
    let p = make_problem(2, &[1.0, 2.0], &[INF, fin(2.0)], Target::L2).unwrap();
    let json = serde_json::to_string(&p).unwrap();
    assert!(json.contains(r#""q":["inf",2.0]"#), "{json}");
    let back: ProblemSpec = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
}

#[test]
fn scaling_keeps_user_order() {
    let p = make_problem(2, &[2.0, 1.0], &[fin(1.0), fin(1.0)], Target::L2).unwrap();
    let scaled = p.scaled(3.0).unwrap();
    assert_eq!(scaled.s, vec![3.0, 6.0]);
    assert_eq!(scaled.perm, p.perm);
}
