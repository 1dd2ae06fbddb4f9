//! Property tests for the exact linear algebra layer.

use griess_exact::*;
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| ExactScalar::ratio(p, q))
}

fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(arb_scalar(), n * n)
        .prop_map(move |data| Matrix::new(n, n, data))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_then_multiply_reproduces_rhs(
        n in 1usize..5,
        seed in proptest::collection::vec(arb_scalar(), 36),
    ) {
        let data: Vec<ExactScalar> = seed.iter().take(n * n).cloned().collect();
        let m = Matrix::new(n, n, data);
        let b: Vec<ExactScalar> = seed.iter().rev().take(n).cloned().collect();
        match solve_linear(&m, &b) {
            Ok(x) => prop_assert_eq!(m.mat_vec(&x), b),
            Err(LinearError::NoSolution | LinearError::NonUnique) => {
                prop_assert_eq!(rank(&m) < n, true);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        n in 1usize..5,
        a in arb_matrix(4),
        b in arb_matrix(4),
    ) {
        let take = |m: &Matrix| Matrix::from_fn(n, n, |i, j| m[(i, j)].clone());
        let (a, b) = (take(&a), take(&b));
        let lhs = determinant(&a.mat_mul(&b)).unwrap();
        let rhs = &determinant(&a).unwrap() * &determinant(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_matches_rank_deficiency(a in arb_matrix(3)) {
        let det = determinant(&a).unwrap();
        prop_assert_eq!(det.is_zero(), rank(&a) < 3);
    }

    #[test]
    fn eigensplit_dimensions_account_for_everything(
        diag in proptest::collection::vec(0i64..3, 4),
    ) {
        // conjugating a diagonal matrix by a fixed unimodular matrix keeps
        // the integer spectrum
        let n = diag.len();
        let p = Matrix::from_fn(n, n, |i, j| {
            ExactScalar::from_int(if i == j { 1 } else if j == i + 1 { 1 } else { 0 })
        });
        let pinv = Matrix::from_fn(n, n, |i, j| {
            ExactScalar::from_int(if i == j {
                1
            } else if j > i && (j - i) % 2 == 1 {
                -1
            } else if j > i {
                1
            } else {
                0
            })
        });
        prop_assert!(p.mat_mul(&pinv).is_identity());
        let d = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                ExactScalar::from_int(diag[i])
            } else {
                ExactScalar::zero()
            }
        });
        let m = p.mat_mul(&d).mat_mul(&pinv);
        let candidates: Vec<ExactScalar> = (0..3).map(ExactScalar::from_int).collect();
        let spaces = eigensplit(&m, &candidates).unwrap();
        let total: usize = spaces.iter().map(|(_, basis)| basis.len()).sum();
        prop_assert_eq!(total, n);
        for (lambda, basis) in &spaces {
            let expected = diag
                .iter()
                .filter(|&&v| ExactScalar::from_int(v) == *lambda)
                .count();
            prop_assert_eq!(basis.len(), expected);
            for v in basis {
                let mv = m.mat_vec(v);
                let lv: Vec<ExactScalar> = v.iter().map(|c| c * lambda).collect();
                prop_assert_eq!(mv, lv);
            }
        }
    }

    #[test]
    fn scalar_string_round_trip(
        p in -1000i64..1000,
        den in 1i64..1000,
        rp in -50i64..50,
        rden in 1i64..50,
        d in prop_oneof![Just(1u64), Just(2), Just(3), Just(5), Just(7), Just(10)],
    ) {
        let v = &ExactScalar::ratio(p, den)
            + &(&ExactScalar::ratio(rp, rden) * &ExactScalar::sqrt_d(d));
        let text = v.to_string();
        let back: ExactScalar = text.parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn field_axioms_hold_in_quadratic_fields(
        a in (-9i64..9, 1i64..5, -9i64..9, 1i64..5),
        b in (-9i64..9, 1i64..5, -9i64..9, 1i64..5),
    ) {
        let mk = |(p, q, r, s): (i64, i64, i64, i64)| {
            &ExactScalar::ratio(p, q) + &(&ExactScalar::ratio(r, s) * &ExactScalar::sqrt_d(5))
        };
        let (x, y) = (mk(a), mk(b));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x);
        }
    }
}
