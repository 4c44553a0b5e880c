//! Randomised invariants.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use tanhspec::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

fn params() -> impl Strategy<Value = JacobiParams> {
    (-0.95f64..4.0, -0.95f64..4.0).prop_map(|(a, b)| JacobiParams::new(a, b).unwrap())
}

fn chebyshev() -> impl Strategy<Value = ChebyshevKind> {
    prop_oneof![Just(ChebyshevKind::T), Just(ChebyshevKind::U), Just(ChebyshevKind::V), Just(ChebyshevKind::W)]
}

fn trig_kind() -> impl Strategy<Value = TrigKind> {
    prop_oneof![
        Just(TrigKind::DctI),
        Just(TrigKind::DctII),
        Just(TrigKind::DctIV),
        Just(TrigKind::DstI),
        Just(TrigKind::DstII),
        Just(TrigKind::DstIV),
    ]
}

const GRID: [f64; 6] = [-0.9, -0.5, 0.0, 0.5, 2.0, 7.3];

#[test]
fn norms_are_positive_on_the_grid() {
    for &a in &GRID {
        for &b in &GRID {
            let p = JacobiParams::new(a, b).unwrap();
            for m in 0..=200 {
                let g = jacobi_norm(&p, m);
                assert!(g > 0.0 && g.is_finite(), "({a},{b}) m={m}");
            }
        }
    }
}

#[test]
fn differentiation_coefficients_are_positive_on_the_grid() {
    for &a in &GRID {
        for &b in &GRID {
            let d = diff_coeffs(&JacobiParams::new(a, b).unwrap(), 256);
            assert!(d.b().iter().all(|&v| v > 0.0 && v.is_finite()), "({a},{b})");
        }
    }
}

#[test]
fn integer_profiles_match_gamma_products() {
    for n in 0..=3u32 {
        let p = JacobiParams::symmetric(n as f64).unwrap();
        let rep = FourierRep::new(p).unwrap();
        for k in 0..=200 {
            let xi = -10.0 + 0.1 * k as f64;
            let g = rep.g_weight(xi);
            let want = rep.normalisation() * integer_profile(n, xi);
            assert!(((g.re - want) / want).abs() < 1e-11, "n={n} ξ={xi}");
            assert!(g.im.abs() <= 1e-11 * want);
        }
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..10.0, y in -20.0f64..20.0) {
        let z = Complex64::new(x, y);
        let ratio = (log_gamma_complex(z + 1.0).unwrap() - log_gamma_complex(z).unwrap()).exp();
        prop_assert!((ratio - z).norm() <= 1e-10 * z.norm());
    }

    #[test]
    fn log_gamma_conjugate_symmetry(x in -20.0f64..20.0, y in -30.0f64..30.0) {
        let z = Complex64::new(x, y);
        prop_assume!(x > 0.0 || x.fract() != 0.0 || y != 0.0);
        let a = log_gamma_complex(z).unwrap();
        let b = log_gamma_complex(z.conj()).unwrap();
        prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
        prop_assert_eq!(a.im.to_bits(), (-b.im).to_bits());
    }

    #[test]
    fn gamma_reflection(x in 0.001f64..0.999, y in -5.0f64..5.0) {
        let z = Complex64::new(x, y);
        let one = Complex64::new(1.0, 0.0);
        let v = gamma_complex(z).unwrap() * gamma_complex(one - z).unwrap() * (z * PI).sin();
        prop_assert!((v - PI).norm() <= 1e-10 * PI);
    }

    #[test]
    fn symmetric_jacobi_parity(a in -0.95f64..5.0, m in 0usize..60, t in -1.0f64..1.0) {
        let p = JacobiParams::symmetric(a).unwrap();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let (lhs, rhs) = (jacobi_eval(&p, m, -t), sign * jacobi_eval(&p, m, t));
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    #[test]
    fn chebyshev_matches_jacobi(kind in chebyshev(), m in 0usize..40, theta in 0.0f64..PI) {
        let p = kind.params();
        let want = jacobi_eval(&p, m, theta.cos()) / jacobi_eval(&p, m, 1.0);
        let got = chebyshev_eval(kind, m, theta) / kind.at_one(m);
        prop_assert!((got - want).abs() <= 1e-11, "{} vs {}", got, want);
    }

    #[test]
    fn quadrature_nodes_interlace(p in params(), n in 1usize..60) {
        let small = gauss_jacobi(&p, n).unwrap();
        let big = gauss_jacobi(&p, n + 1).unwrap();
        let (s, b) = (small.nodes(), big.nodes());
        prop_assert!(b[0] > -1.0 && b[n] < 1.0);
        for k in 0..n {
            prop_assert!(b[k] < s[k] && s[k] < b[k + 1]);
        }
    }

    #[test]
    fn dct_matches_naive(kind in trig_kind(), data in prop::collection::vec(-1.0f64..1.0, 1..200)) {
        let fast = dct(kind, &data).unwrap();
        let slow = dct_naive(kind, &data).unwrap();
        let scale = slow.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!((a - b).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn parity_of_symmetric_basis(a in -0.95f64..4.0, m in 0usize..40, x in -6.0f64..6.0) {
        let s = BasisSpec::full(JacobiParams::symmetric(a).unwrap());
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((phi_full(&s, m, -x) - sign * phi_full(&s, m, x)).abs() <= 1e-12);
    }

    #[test]
    fn half_and_full_bases_coincide(a in -0.95f64..4.0, m in 0usize..=40, x in -6.0f64..6.0) {
        let full = BasisSpec::full(JacobiParams::symmetric(a).unwrap());
        let half = BasisSpec::half(a).unwrap();
        prop_assert!((phi_half(&half, m, x) - phi_full(&full, m, x)).abs() <= 1e-12);
    }

    #[test]
    fn pointwise_derivative_matches_finite_differences(p in params(), m in 0usize..=20, x in -5.0f64..5.0) {
        let s = BasisSpec::full(p);
        let h = 1e-3;
        let f = |y: f64| phi_full(&s, m, y);
        let fd = (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
        prop_assert!((derivative_pointwise(&s, m, x) - fd).abs() <= 1e-7);
    }

    #[test]
    fn round_trip(kind in chebyshev(), c in prop::collection::vec(-1.0f64..1.0, 1..=256)) {
        let s = BasisSpec::full(kind.params());
        let e = Expansion::new(s, c).unwrap();
        let ev = Evaluator::new(&e);
        let back = analyze_full(&s, |x| ev.eval(x), e.len()).unwrap();
        for (a, b) in back.coeffs().iter().zip(e.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-11);
        }
    }

    #[test]
    fn quadrature_round_trip(p in params(), c in prop::collection::vec(-1.0f64..1.0, 1..=64)) {
        let s = BasisSpec::full(p);
        let e = Expansion::new(s, c).unwrap();
        let ev = Evaluator::new(&e);
        let back = analyze_full_quadrature(&s, |x| ev.eval(x), e.len()).unwrap();
        for (a, b) in back.coeffs().iter().zip(e.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-11);
        }
    }

    #[test]
    fn differentiation_matrix_is_skew(p in params(), n in 1usize..100) {
        let dense = diff_matrix(&diff_coeffs(&p, n), n).unwrap().to_dense();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!((dense[i][j] + dense[j][i]).to_bits(), 0.0f64.to_bits());
            }
        }
    }

    #[test]
    fn second_derivative_is_negative(p in params(), c in prop::collection::vec(-1.0f64..1.0, 64)) {
        let mut padded = c.clone();
        padded.extend([0.0, 0.0]);
        let d = diff_coeffs(&p, padded.len() + 1);
        let d2 = diff_squared_apply(&d, &padded).unwrap();
        let num: f64 = padded.iter().zip(&d2).map(|(a, b)| a * b).sum();
        let den: f64 = c.iter().map(|v| v * v).sum();
        prop_assume!(den > 0.0);
        prop_assert!(num / den <= 1e-12);
    }

    #[test]
    fn multiplication_operator_structure(a in prop::collection::vec(-1.0f64..1.0, 1..8), n in 8usize..40) {
        let bw = a.len() - 1;
        let op = mult_op(&a, bw, n).unwrap();
        let dense = op.to_banded().to_dense();
        let sigma = |i: usize| if i == 0 { std::f64::consts::FRAC_1_SQRT_2 } else { 1.0 };
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(dense[i][j].to_bits(), dense[j][i].to_bits());
                let th = sigma(i) * sigma(j) * (op.toeplitz(i.abs_diff(j)) + op.hankel(i + j));
                prop_assert_eq!(dense[i][j], th);
                if i.abs_diff(j) > bw {
                    prop_assert_eq!(dense[i][j], 0.0);
                }
            }
        }
    }

    #[test]
    fn g_has_even_real_and_odd_imaginary_part(a in -0.9f64..3.0, b in -0.9f64..3.0, xi in 0.0f64..15.0) {
        let rep = FourierRep::new(JacobiParams::new(a, b).unwrap()).unwrap();
        let (gp, gm) = (rep.g_weight(xi), rep.g_weight(-xi));
        let scale = gp.norm().max(f64::MIN_POSITIVE);
        prop_assert!((gp.re - gm.re).abs() <= 1e-14 * scale);
        prop_assert!((gp.im + gm.im).abs() <= 1e-14 * scale);
    }

    #[test]
    fn carlitz_recurrence_shares_b(p in params(), m in 0usize..100) {
        let rep = FourierRep::new(p).unwrap();
        prop_assert_eq!(rep.b(m).to_bits(), diff_coeffs(&p, 128).b()[m].to_bits());
    }
}
