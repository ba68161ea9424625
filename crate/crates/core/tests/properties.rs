use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use telesum::apostol::{apostol_bernoulli_poly, apostol_euler_family, ek_mu};
use telesum::classical::{bernoulli_poly, euler_poly};
use telesum::closed_forms::{z_sum, z_tilde_sum, Method};
use telesum::oracles::{
    cos_telescoping_defect, exp_cos_telescoping_defect, exp_sin_telescoping_defect,
    sin_telescoping_defect, sum_inverse_square, HurwitzKind,
};
use telesum::quadrature::{adaptive_integrate, exact_poly_trig_integral, OscKernel};
use telesum::render::{decimal, OutputRecord};
use telesum::series::sec_taylor_coeffs;
use telesum::{PiScalar, Poly, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..8).prop_map(Poly::new)
}

fn unit(mu: f64) -> Complex64 {
    Complex64::new(mu.cos(), mu.sin())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(r in small_rational()) {
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn pi_scalar_text_round_trip(r in small_rational(), n in -6i32..6) {
        let p = PiScalar::new(r, n);
        let back: PiScalar = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn poly_product_evaluates_pointwise(a in small_poly(), b in small_poly(), x in small_rational()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn reflection_is_an_involution(p in small_poly()) {
        prop_assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn bernoulli_and_euler_reflect_with_sign(k in 0usize..24) {
        let sign = Rational::from(if k % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(bernoulli_poly(k).reflect(), bernoulli_poly(k).scale(&sign));
        prop_assert_eq!(euler_poly(k).reflect(), euler_poly(k).scale(&sign));
    }

    #[test]
    fn appell_derivative_ladder(k in 1usize..24) {
        let kk = Rational::from(k as i64);
        prop_assert_eq!(bernoulli_poly(k).derivative(), bernoulli_poly(k - 1).scale(&kk));
        prop_assert_eq!(euler_poly(k).derivative(), euler_poly(k - 1).scale(&kk));
    }

    #[test]
    fn apostol_boundary_identity(mu in -3.1f64..3.1, k in 0usize..12) {
        let lambda = unit(mu);
        let fam = apostol_euler_family(k, lambda).unwrap();
        let p = &fam[k];
        let lhs = lambda * p.eval_real(1.0) + p.eval_real(0.0);
        let expected = if k == 0 { 2.0 } else { 0.0 };
        let scale = p.coeffs().iter().map(|c| c.norm()).sum::<f64>().max(1.0);
        prop_assert!((lhs - expected).norm() <= 1e-12 * scale);
    }

    #[test]
    fn apostol_relation_between_families(mu in -3.0f64..3.0, k in 0usize..10, x in 0.0f64..1.0) {
        // mu bounded away from 0 keeps -lambda away from 1.
        prop_assume!(mu.abs() > 0.05);
        let lambda = unit(mu);
        let e = apostol_euler_family(k, lambda).unwrap()[k].eval_real(x);
        let b = apostol_bernoulli_poly(k + 1, -lambda).unwrap().eval_real(x);
        let rhs = b * (-2.0 / (k as f64 + 1.0));
        prop_assert!((e - rhs).norm() <= 1e-9 * (1.0 + e.norm()));
    }

    #[test]
    fn sec_table_matches_apostol_route(mu in -2.9f64..2.9, k in 0usize..10) {
        let t = sec_taylor_coeffs(mu, k).unwrap()[k];
        let c = ek_mu(k, mu).unwrap();
        prop_assert!((t - c).abs() <= 1e-9 * t.abs().max(1.0));
    }

    #[test]
    fn z_routes_agree_with_table(mu in -3.0f64..3.0, k in 0usize..7) {
        let a = z_sum(k, mu, Method::TaylorRoute).unwrap();
        let b = z_sum(k, mu, Method::Table).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn z_tilde_routes_agree_with_table(mu in 0.2f64..6.0, k in 1usize..8) {
        let a = z_tilde_sum(k, mu, Method::ComplexRoute).unwrap();
        let b = z_tilde_sum(k, mu, Method::Table).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    // Each right-hand side divides by 2·(trig), which amplifies rounding by
    // the reciprocal of that denominator.
    #[test]
    fn telescoping_identities_hold_pointwise(m in -40i64..40, t in 0.05f64..3.0) {
        let cond = |d: f64| 1e-13 * (1.0 / (2.0 * d.abs())).max(1.0);
        prop_assert!(cos_telescoping_defect(m, t) <= cond((t / 2.0).sin()));
        prop_assert!(sin_telescoping_defect(m, t / 2.0) <= cond((t / 2.0).cos()));
        let x = t / PI;
        prop_assert!(exp_cos_telescoping_defect(m, x) <= cond((PI * x).cos()));
        prop_assert!(exp_sin_telescoping_defect(m, x) <= cond((PI * x).sin()));
    }

    #[test]
    fn inverse_square_sum_is_symmetric(theta in 0.01f64..0.99) {
        let a = sum_inverse_square(theta, 2_000).unwrap();
        let b = sum_inverse_square(1.0 - theta, 2_000).unwrap();
        prop_assert!((a.value - b.value).abs() <= a.error_bound + b.error_bound);
    }

    #[test]
    fn exact_trig_ladder_matches_quadrature(p in small_poly(), m in 1i64..6, sine in any::<bool>()) {
        let kernel = if sine { OscKernel::Sin { m } } else { OscKernel::Cos { m } };
        let exact = exact_poly_trig_integral(&p, kernel).unwrap().to_f64();
        let mf = m as f64 * PI;
        let q = adaptive_integrate(
            |x| p.eval_f64(x) * if sine { (mf * x).sin() } else { (mf * x).cos() },
            &[],
            1e-12,
        )
        .unwrap();
        prop_assert!((q.value - exact).abs() <= 1e-10);
    }

    #[test]
    fn decimal_reads_back_within_rounding(x in -1e6f64..1e6, digits in 1usize..17) {
        let s = decimal(x, digits);
        let y: f64 = s.parse().unwrap();
        prop_assert!((x - y).abs() <= x.abs() * 10f64.powi(1 - digits as i32));
        prop_assert_eq!(decimal(y, digits), s);
    }

    #[test]
    fn output_record_json_round_trip(r in small_rational(), n in -4i32..8, k in 0u32..40) {
        let rec = OutputRecord::exact("zeta", &PiScalar::new(r, n), 15).param("k", k);
        let s = rec.to_json();
        prop_assert_eq!(OutputRecord::from_json(&s).unwrap().to_json(), s);
    }
}

#[test]
fn hurwitz_degrees() {
    assert_eq!(HurwitzKind::BEven.degree(3), 6);
    assert_eq!(HurwitzKind::BOdd.degree(3), 7);
    assert_eq!(HurwitzKind::EEven.degree(3), 6);
    assert_eq!(HurwitzKind::EOdd.degree(3), 5);
}
