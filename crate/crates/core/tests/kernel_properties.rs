use num_complex::Complex;
use proptest::prelude::*;
use qbm_core::complex::{gamma, principal_pow, reciprocal_gamma};

type C = Complex<f64>;

fn away_from_poles(s: C) -> bool {
    s.norm() <= 20.0 && (s.re > 0.1 || s.im.abs() >= 0.1 || (s.re - s.re.round()).abs() >= 0.1)
}

proptest! {
    #[test]
    fn pow_is_additive_in_the_exponent(
        zr in 0.05f64..5.0, zarg in -2.9f64..2.9,
        a in -3.0f64..3.0, b in -3.0f64..3.0, c in -3.0f64..3.0, d in -3.0f64..3.0,
    ) {
        let z = C::from_polar(zr, zarg);
        let s1 = C::new(a, b);
        let s2 = C::new(c, d);
        let lhs = principal_pow(z, s1 + s2).unwrap();
        let rhs = principal_pow(z, s1).unwrap() * principal_pow(z, s2).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm());
    }

    #[test]
    fn reciprocal_gamma_inverts_gamma(re in -20.0f64..20.0, im in -20.0f64..20.0) {
        let s = C::new(re, im);
        prop_assume!(away_from_poles(s));
        let g = gamma(s).unwrap();
        prop_assume!(g.norm().is_finite() && g.norm() > 1e-280);
        let prod = reciprocal_gamma(s) * g;
        prop_assert!((prod - 1.0).norm() <= 1e-12, "s = {}, product = {}", s, prod);
    }

    #[test]
    fn gamma_recurrence(re in -19.0f64..19.0, im in -19.0f64..19.0) {
        let s = C::new(re, im);
        prop_assume!(away_from_poles(s) && away_from_poles(s + 1.0));
        let g = gamma(s).unwrap();
        let g1 = gamma(s + 1.0).unwrap();
        prop_assume!(g1.norm() > 1e-280);
        prop_assert!((g1 - s * g).norm() <= 1e-12 * g1.norm(), "s = {}", s);
    }
}

#[test]
fn reciprocal_gamma_half_integer_oracle() {
    // 1/Gamma(2.5) from Gamma(1/2) = sqrt(pi) and the recurrence.
    let expected = 1.0 / (1.5 * 0.5 * std::f64::consts::PI.sqrt());
    let v = reciprocal_gamma(C::new(2.5, 0.0));
    assert!((v.re - expected).abs() <= 1e-15);
    assert!((v.re - 0.75225).abs() < 1e-5);
}
