use std::f64::consts::PI;

use proptest::prelude::*;

use etaverify::arithmetic::{chi, dirichlet_beta};
use etaverify::closed_forms::{ab_pair, cos_ratio, rhs_thm11_cos, sin_ratio, Candidate};
use etaverify::eta_series::{eta3_scaled, eta6_scaled, eta_product, eta_scaled12};
use etaverify::quadrature::{integrate_finite, integrate_damped_oscillatory, IntegrandSpec, Kernel, Transform};
use etaverify::verify::{estimate_beta3, run_suite, Selection};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ab_pair_squares_back(b in 1e-3f64..10.0, c in 1e-3f64..10.0) {
        let p = ab_pair(b, c).unwrap();
        prop_assert!(p.a > 0.0 && p.b > 0.0);
        let scale = b * b + c;
        prop_assert!((p.a * p.a - p.b * p.b - b * b).abs() <= 1e-13 * scale);
        prop_assert!((2.0 * p.a * p.b - c).abs() <= 1e-13 * scale);
    }

    #[test]
    fn chi_has_period_four(n in 0u64..1_000_000) {
        prop_assert_eq!(chi(n).as_i32(), chi(n + 4).as_i32());
        prop_assert_eq!(chi(n).as_i32() == 0, n % 2 == 0);
    }

    #[test]
    fn ratios_are_bounded(b in 1e-2f64..10.0, c in 1e-2f64..100.0) {
        let s = sin_ratio(b, c).unwrap();
        let k = cos_ratio(b, c).unwrap();
        prop_assert!(s.is_finite() && k.is_finite());
        prop_assert!(s.abs() <= 1.0 && k.abs() <= 1.0);
    }

    #[test]
    fn eta_forms_agree(x in 0.05f64..5.0) {
        let p4 = eta_product(4.0 * x / PI, 1e-12).unwrap().value;
        let p12 = eta_product(12.0 * x / PI, 1e-12).unwrap().value;
        prop_assert!(p4 > 0.0 && p12 > 0.0);
        prop_assert!((eta3_scaled(x, 1e-13).unwrap().value - p4.powi(3)).abs() < 1e-11);
        prop_assert!((eta_scaled12(x, 1e-13).unwrap().value - p12).abs() < 1e-11);
        prop_assert!((eta6_scaled(x, 1e-13).unwrap().value - p4.powi(6)).abs() < 1e-11);
    }

    #[test]
    fn eta_decays(y in 1.0f64..5.0) {
        let a = eta_product(y, 1e-13).unwrap().value;
        let b = eta_product(y * 1.1, 1e-13).unwrap().value;
        prop_assert!(b < a);
    }

    #[test]
    fn eta_modular_inversion(y in 0.2f64..5.0) {
        let a = eta_product(1.0 / y, 1e-13).unwrap().value;
        let b = eta_product(y, 1e-13).unwrap().value;
        prop_assert!((a - y.sqrt() * b).abs() < 1e-12);
    }

    #[test]
    fn cosine_form_tends_to_sech(b in 0.2f64..4.0) {
        let limit = PI / 4.0 / (PI * b / 2.0).cosh();
        prop_assert!((rhs_thm11_cos(b, 1e-9).unwrap() - limit).abs() < 1e-8);
    }
}

type Known = (fn(f64) -> f64, f64, f64, f64);

#[test]
fn quadrature_error_is_honest() {
    let cases: [Known; 4] = [
        (|x| x.sin(), 0.0, PI, 2.0),
        (|x| (-x).exp(), 0.0, 10.0, 1.0 - (-10.0f64).exp()),
        (|x| x.sqrt(), 0.0, 1.0, 2.0 / 3.0),
        (|x| 1.0 / (1.0 + x * x), -50.0, 50.0, 2.0 * 50.0f64.atan()),
    ];
    for (f, a, b, exact) in cases {
        for tol in [1e-6, 1e-9, 1e-12] {
            let r = integrate_finite(f, a, b, tol).unwrap();
            assert!(r.converged);
            assert!(r.abs_err_est <= tol, "{a}..{b} tol {tol}: {}", r.abs_err_est);
            assert!((r.value - exact).abs() <= r.abs_err_est.max(4.0 * f64::EPSILON), "{a}..{b} tol {tol}");
        }
    }
}

#[test]
fn tighter_tolerance_costs_more() {
    let spec = IntegrandSpec::eta(Kernel::Eta3, Transform::Sin, 1.0, 5.0);
    let loose = integrate_damped_oscillatory(&spec, 1e-6).unwrap();
    let tight = integrate_damped_oscillatory(&spec, 1e-11).unwrap();
    assert!(tight.evaluations >= loose.evaluations);
    assert!((loose.value - tight.value).abs() <= loose.abs_err_est + tight.abs_err_est);
}

#[test]
fn beta3_estimate_ignores_z() {
    let beta = dirichlet_beta(3.0, 1e-14).unwrap().value;
    assert!((beta - PI.powi(3) / 32.0).abs() < 1e-13);
    for z in [0.3, 0.7, 1.5, 3.0] {
        let e = estimate_beta3(z, 1e-10, Candidate::Derived).unwrap();
        assert!((e.value - beta).abs() < 2e-6, "z={z}: {}", e.value);
    }
}

#[test]
fn suite_is_deterministic() {
    let a = run_suite(&Selection::All, 1e-7, &[]).unwrap();
    let b = run_suite(&Selection::All, 1e-7, &[]).unwrap();
    assert_eq!(a.reports, b.reports);
    assert_eq!(a.summary, b.summary);
    assert_eq!(a.summary.exit_code, 0);
    assert_eq!(a.summary.mismatch_all, 0);
}
