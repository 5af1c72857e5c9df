use econkit::calculus::{antiderivative, differentiate, elasticity, integrate, parse, Expr};
use econkit::finmath::{geometric_sum, SequenceSpec};
use econkit::linsolve::{determinant, inverse};
use econkit::simplex::{solve_simplex, LinearProgram, LpStatus};
use econkit::text::{format_matrix, parse_matrix};
use econkit::Matrix;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-10.0..10.0f64, rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![Just(Expr::x()), (-8i32..=8).prop_map(|k| Expr::c(f64::from(k) * 0.5))]
}

fn tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            (inner.clone(), -3i32..=3).prop_map(|(a, k)| a.powi(k)),
            inner.clone().prop_map(|a| -a),
            inner.clone().prop_map(Expr::exp),
            inner.clone().prop_map(Expr::ln),
        ]
    })
}

/// Positive, increasing functions on `x > 0`.
fn monotone() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0.5..4.0f64, 0.2..3.0f64, 0.0..5.0f64)
            .prop_map(|(a, alpha, b)| Expr::c(a) * Expr::x().pow(Expr::c(alpha)) + Expr::c(b)),
        (0.5..4.0f64, 0.1..1.5f64).prop_map(|(a, k)| Expr::c(a) * (Expr::c(k) * Expr::x()).exp()),
    ]
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(e in tree()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e, "printed as {}", text);
    }

    #[test]
    fn antiderivative_differentiates_back(e in tree(), x in 0.2..3.0f64) {
        if let Some(big_f) = antiderivative(&e) {
            let (Ok(d), Ok(f)) = (differentiate(&big_f).eval(x), e.eval(x)) else {
                return Ok(());
            };
            prop_assert!((d - f).abs() <= 1e-9 * (1.0 + f.abs()), "F = {big_f}, F'({x}) = {d}, f = {f}");
        }
    }

    #[test]
    fn elasticity_rules(f in monotone(), g in monotone(), x in 0.2..3.0f64) {
        let (ef, eg) = (elasticity(&f, x).unwrap(), elasticity(&g, x).unwrap());
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-7 * (1.0 + b.abs());
        prop_assert!(close(elasticity(&(f.clone() * g.clone()), x).unwrap(), ef + eg));
        prop_assert!(close(elasticity(&(f.clone() / g.clone()), x).unwrap(), ef - eg));
        let gx = g.eval(x).unwrap();
        prop_assert!(close(elasticity(&f.compose(&g), x).unwrap(), elasticity(&f, gx).unwrap() * eg));
    }

    #[test]
    fn integral_splits(c0 in -3.0..3.0f64, c1 in -3.0..3.0f64, c2 in -3.0..3.0f64,
                       a in -5.0..5.0f64, b in -5.0..5.0f64, c in -5.0..5.0f64) {
        let f = Expr::c(c2) * Expr::x().powi(2) + Expr::c(c1) * Expr::x() + Expr::c(c0);
        let whole = integrate(&f, a, c).unwrap();
        let split = integrate(&f, a, b).unwrap() + integrate(&f, b, c).unwrap();
        prop_assert!((whole - split).abs() <= 1e-9 * (1.0 + whole.abs()));
    }

    #[test]
    fn sequence_terms_match_recursion(a1 in -50.0..50.0f64, step in 0.5..1.5f64, n in 1u32..40) {
        prop_assume!((step - 1.0).abs() > 1e-3);
        for s in [SequenceSpec::arithmetical(a1, step).unwrap(), SequenceSpec::geometrical(a1 + 100.0, step).unwrap()] {
            let (t, r) = (s.term(n).unwrap(), s.term_recursive(n).unwrap());
            prop_assert!((t - r).abs() <= 1e-9 * (1.0 + r.abs()));
        }
    }

    #[test]
    fn arithmetic_mean_property(a1 in -1000i32..1000, d in 1i32..50, n in 2u32..100) {
        let s = SequenceSpec::arithmetical(f64::from(a1), f64::from(d)).unwrap();
        let mean = 0.5 * (s.term(n - 1).unwrap() + s.term(n + 1).unwrap());
        prop_assert_eq!(s.term(n).unwrap(), mean);
    }

    #[test]
    fn geometric_sum_matches_loop(q in 0.5..1.5f64, n in 1u32..200) {
        prop_assume!((q - 1.0).abs() > 1e-3);
        let brute: f64 = (0..n).map(|k| q.powi(k as i32)).sum();
        prop_assert!((geometric_sum(q, f64::from(n)) - brute).abs() <= 1e-9 * brute);
    }

    #[test]
    fn transpose_of_product(a in matrix(2, 3), b in matrix(3, 4)) {
        let lhs = a.mul(&b).unwrap().transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-9));
    }

    #[test]
    fn inverse_and_determinant(a in matrix(3, 3)) {
        let det = determinant(&a).unwrap();
        prop_assume!(det.abs() > 1e-3);
        let inv = inverse(&a).unwrap();
        prop_assert!(a.mul(&inv).unwrap().approx_eq(&Matrix::identity(3).unwrap(), 1e-6));
        let det_inv = determinant(&inv).unwrap();
        prop_assert!((det * det_inv - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn matrix_text_round_trip(a in matrix(3, 2)) {
        prop_assert_eq!(parse_matrix(&format_matrix(&a)).unwrap(), a);
    }

    #[test]
    fn simplex_optimum_is_feasible(c in prop::collection::vec(0.0..9.0f64, 3),
                                   a in prop::collection::vec(prop::collection::vec(0.5..9.0f64, 3), 1..5),
                                   b in prop::collection::vec(0.0..20.0f64, 4)) {
        let b = b[..a.len()].to_vec();
        let lp = LinearProgram::maximize(c, a, b.clone()).unwrap();
        let s = solve_simplex(&lp).unwrap();
        prop_assert_eq!(s.status, LpStatus::Optimal);
        prop_assert!(s.x.iter().all(|&v| v >= -1e-9));
        for (act, cap) in lp.row_activity(&s.x).iter().zip(&b) {
            prop_assert!(*act <= cap + 1e-9);
        }
        prop_assert!((lp.value(&s.x) - s.z.unwrap()).abs() <= 1e-9);
    }
}
