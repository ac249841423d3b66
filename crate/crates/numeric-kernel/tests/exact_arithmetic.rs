//! Exact-arithmetic contract tests: total ordering, quadratic-field closure,
//! linear solves, and quadratic-equation roots.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;
use numeric_kernel::{
    eval_poly, refine_sign_change, solve_linear_system, solve_quadratic, ExactScalar,
    LinearSolution, NumericError,
};

fn rat(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn rational_basics_and_normalization() {
    assert_eq!(rat(2, 4), rat(1, 2));
    assert_eq!(rat(-3, -6), rat(1, 2));
    assert_eq!((&rat(1, 3) + &rat(1, 6)).exact_string(), "1/2");
    assert_eq!((&rat(1, 2) * &rat(2, 3)).exact_string(), "1/3");
    assert!(rat(-1, 7) < rat(0, 1));
    assert_eq!(rat(5, 1).exact_string(), "5");
}

#[test]
fn quadratic_sign_and_order_agree_with_reals() {
    // √2 − 1 > 0, 1 − √2 < 0, 7/5 < √2 < 3/2.
    let sqrt2 = ExactScalar::sqrt_rational(&big(2, 1)).unwrap();
    assert_eq!((&sqrt2 - &rat(1, 1)).signum(), 1);
    assert_eq!((&rat(1, 1) - &sqrt2).signum(), -1);
    assert!(rat(7, 5) < sqrt2);
    assert!(sqrt2 < rat(3, 2));
    // (−319 + √245569)/224 lies in (0, 1).
    let p = ExactScalar::quadratic(big(-319, 224), big(1, 224), BigInt::from(245569))
        .unwrap();
    assert!(p > rat(0, 1));
    assert!(p < rat(1, 1));
}

#[test]
fn quadratic_field_closed_under_arithmetic() {
    let sqrt2 = ExactScalar::sqrt_rational(&big(2, 1)).unwrap();
    // (1+√2)(3−√2) = 3 − √2 + 3√2 − 2 = 1 + 2√2.
    let x = &rat(1, 1) + &sqrt2;
    let y = &rat(3, 1) - &sqrt2;
    let prod = &x * &y;
    let expected =
        ExactScalar::quadratic(big(1, 1), big(2, 1), BigInt::from(2)).unwrap();
    assert_eq!(prod, expected);
    // Division returns to the same field: (1+2√2)/(1+√2) = 3 − √2.
    assert_eq!(&prod / &x, y);
    // Irrational part may cancel: (1+√2) + (1−√2) = 2.
    let z = &rat(1, 1) - &sqrt2;
    assert_eq!(&x + &z, rat(2, 1));
}

#[test]
fn mixing_distinct_radicands_is_an_error() {
    let sqrt2 = ExactScalar::sqrt_rational(&big(2, 1)).unwrap();
    let sqrt3 = ExactScalar::sqrt_rational(&big(3, 1)).unwrap();
    match sqrt2.try_add(&sqrt3) {
        Err(NumericError::MixedRadicands(_, _)) => {}
        other => panic!("expected MixedRadicands, got {other:?}"),
    }
    match sqrt2.try_mul(&sqrt3) {
        Err(NumericError::MixedRadicands(_, _)) => {}
        other => panic!("expected MixedRadicands, got {other:?}"),
    }
}

#[test]
fn square_part_extraction_normalizes_radicands() {
    // √8 = 2√2 and √(9/4) = 3/2.
    let sqrt8 = ExactScalar::sqrt_rational(&big(8, 1)).unwrap();
    let expected = ExactScalar::quadratic(big(0, 1), big(2, 1), BigInt::from(2)).unwrap();
    assert_eq!(sqrt8, expected);
    assert_eq!(ExactScalar::sqrt_rational(&big(9, 4)).unwrap(), rat(3, 2));
}

#[test]
fn comparison_is_antisymmetric_and_transitive() {
    // Deterministic pseudo-random triples over a mixed pool of scalars.
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let pool: Vec<ExactScalar> = (0..24)
        .map(|_| {
            let n = (next() % 41) as i64 - 20;
            let d = (next() % 9) as i64 + 1;
            if next() % 3 == 0 {
                let rad = [2i64, 3, 5, 7, 245569][(next() % 5) as usize];
                ExactScalar::quadratic(big(n, d), big((next() % 7) as i64 - 3, d), BigInt::from(rad))
                    .unwrap()
            } else {
                rat(n, d)
            }
        })
        .collect();
    for _ in 0..200 {
        let x = &pool[(next() % pool.len() as u64) as usize];
        let y = &pool[(next() % pool.len() as u64) as usize];
        let z = &pool[(next() % pool.len() as u64) as usize];
        assert_eq!(x.cmp(y), y.cmp(x).reverse());
        if x <= y && y <= z {
            assert!(x <= z);
        }
    }
}

#[test]
fn linear_system_identity_and_singular_cases() {
    let id = vec![
        vec![rat(1, 1), rat(0, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(0, 1), rat(1, 1)],
    ];
    let rhs = vec![rat(1, 1), rat(2, 1), rat(3, 1)];
    match solve_linear_system(&id, &rhs).unwrap() {
        LinearSolution::Unique(x) => assert_eq!(x, rhs),
        LinearSolution::Singular => panic!("identity must be nonsingular"),
    }

    let rank_deficient = vec![
        vec![rat(1, 1), rat(1, 1)],
        vec![rat(1, 1), rat(1, 1)],
    ];
    let rhs2 = vec![rat(1, 1), rat(1, 1)];
    assert_eq!(
        solve_linear_system(&rank_deficient, &rhs2).unwrap(),
        LinearSolution::Singular
    );

    // Dimension mismatch is an error, not a silent failure.
    assert!(solve_linear_system(&rank_deficient, &rhs).is_err());
}

#[test]
fn linear_solve_roundtrips_through_matrix_multiply() {
    let rows = vec![
        vec![rat(2, 1), rat(1, 3), rat(-1, 2), rat(0, 1)],
        vec![rat(1, 7), rat(4, 1), rat(1, 1), rat(2, 5)],
        vec![rat(0, 1), rat(-3, 2), rat(5, 1), rat(1, 1)],
        vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(9, 4)],
    ];
    let rhs = vec![rat(1, 6), rat(-2, 3), rat(7, 2), rat(0, 1)];
    let LinearSolution::Unique(x) = solve_linear_system(&rows, &rhs).unwrap() else {
        panic!("system should be nonsingular");
    };
    for (row, b) in rows.iter().zip(&rhs) {
        let mut acc = ExactScalar::zero();
        for (a, xi) in row.iter().zip(&x) {
            acc = &acc + &(a * xi);
        }
        assert_eq!(&acc, b);
    }
}

#[test]
fn quadratic_roots_trivial_cases() {
    // x² − 1 → {−1, +1}.
    let roots = solve_quadratic(&rat(1, 1), &rat(0, 1), &rat(-1, 1)).unwrap();
    assert_eq!(roots, vec![(rat(-1, 1), 1), (rat(1, 1), 1)]);
    // x² + 1 → empty.
    assert!(solve_quadratic(&rat(1, 1), &rat(0, 1), &rat(1, 1))
        .unwrap()
        .is_empty());
    // x² − 2x + 1 → double root at 1.
    assert_eq!(
        solve_quadratic(&rat(1, 1), &rat(-2, 1), &rat(1, 1)).unwrap(),
        vec![(rat(1, 1), 2)]
    );
    // Degenerate to linear: 3x + 6 → −2.
    assert_eq!(
        solve_quadratic(&rat(0, 1), &rat(3, 1), &rat(6, 1)).unwrap(),
        vec![(rat(-2, 1), 1)]
    );
}

#[test]
fn quadratic_roots_land_in_a_quadratic_field() {
    // 50176·x² + 142912·x − 143808 = 0 has root (−319 + √245569)/224.
    let roots = solve_quadratic(&rat(50176, 1), &rat(142912, 1), &rat(-143808, 1)).unwrap();
    let expected =
        ExactScalar::quadratic(big(-319, 224), big(1, 224), BigInt::from(245569)).unwrap();
    assert!(
        roots.iter().any(|(r, _)| *r == expected),
        "expected root (−319+√245569)/224 among {roots:?}"
    );
}

#[test]
fn decimal_rendering_is_correctly_rounded() {
    assert_eq!(rat(1, 3).decimal_string(5), "0.33333");
    assert_eq!(rat(2, 3).decimal_string(5), "0.66667");
    assert_eq!(rat(-1, 8).decimal_string(3), "-0.125");
    let sqrt2 = ExactScalar::sqrt_rational(&big(2, 1)).unwrap();
    assert_eq!(sqrt2.decimal_string(10), "1.4142135624");
}

#[test]
fn bisection_refinement_encloses_a_cubic_root() {
    // 6896169 − 1190915420·θ + 3549548480·θ² − 2372477184·θ³ has a root near
    // 0.496088; refine to width 10⁻¹² and re-verify the sign change exactly.
    let coeffs = vec![
        big(6_896_169, 1),
        big(-1_190_915_420, 1),
        big(3_549_548_480, 1),
        big(-2_372_477_184, 1),
    ];
    let tol = BigRational::new(1.into(), BigInt::from(10u64).pow(12));
    let (lo, hi) = refine_sign_change(&coeffs, &big(49, 100), &big(1, 2), &tol).unwrap();
    assert!(&hi - &lo <= tol);
    let f_lo = eval_poly(&coeffs, &lo);
    let f_hi = eval_poly(&coeffs, &hi);
    assert!(f_lo * f_hi <= BigRational::new(0.into(), 1.into()));
    // The enclosure agrees with the quoted approximation 0.496088.
    let approx = big(496_088, 1_000_000);
    assert!((&lo - &approx).abs() < big(1, 100_000));
}
