//! Complex kernel: principal-branch logarithms and powers, and the complex
//! gamma function used by the zeta prefactor.
//!
//! Every branch choice here is the principal one, with arguments taken in
//! `(-pi, pi]`. The gamma function is evaluated with the Stirling series after
//! an upward shift to `|s| >= 10`, and with the reflection formula when
//! `Re(s) < 1/2`.

use num_complex::Complex;

use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// A point of the complex plane.
pub type ComplexValue<T> = Complex<T>;

/// Absolute distance from an integer under which `s` counts as that integer.
pub const INTEGER_TOLERANCE: f64 = 1e-12;

const STIRLING_SHIFT: f64 = 10.0;

/// `B_{2j} / (2j (2j - 1))` for `j = 1..=10`.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// Principal logarithm with imaginary part in `(-pi, pi]`.
pub fn principal_log<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.re == T::zero() && z.im == T::zero() {
        return Err(domain("logarithm of zero"));
    }
    let mut arg = z.im.atan2(z.re);
    // atan2 returns -pi for a negative real axis point carrying -0.0.
    if arg == -T::PI() {
        arg = T::PI();
    }
    Ok(Complex::new(z.norm().ln(), arg))
}

/// Principal power `exp(s * Log z)`.
pub fn principal_pow<T: Real>(z: Complex<T>, s: Complex<T>) -> Result<Complex<T>> {
    if z.re == T::zero() && z.im == T::zero() {
        if s.re > T::zero() {
            return Ok(Complex::new(T::zero(), T::zero()));
        }
        return Err(domain("zero raised to a power with non-positive real part"));
    }
    if s.re == T::zero() && s.im == T::zero() {
        return Ok(Complex::new(T::one(), T::zero()));
    }
    Ok((s * principal_log(z)?).exp())
}

/// Returns `Some(n)` when `s` lies within [`INTEGER_TOLERANCE`] of the
/// integer `n <= 0`.
pub fn nonpositive_integer<T: Real>(s: Complex<T>) -> Option<i64> {
    let tol = T::lit(INTEGER_TOLERANCE);
    if s.im.abs() > tol {
        return None;
    }
    let n = s.re.round();
    if n > T::zero() || (s.re - n).abs() > tol {
        return None;
    }
    n.to_i64()
}

/// `sin(pi z)`, reduced around the nearest integer so that it stays accurate
/// close to the zeros.
pub fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let n = z.re.round();
    let d = Complex::new(z.re - n, z.im);
    let v = (d * T::PI()).sin();
    let odd = n.to_i64().is_some_and(|n| n.rem_euclid(2) == 1);
    if odd {
        -v
    } else {
        v
    }
}

/// `log Gamma(s)` from the Stirling series. The imaginary part is continuous
/// on `Re(s) >= 1/2`; on the reflected half-plane it carries the principal
/// logarithm of `pi / sin(pi s)`.
pub fn log_gamma<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = nonpositive_integer(s) {
        return Err(Error::Pole(n as f64));
    }
    if s.re < T::lit(0.5) {
        let one = Complex::new(T::one(), T::zero());
        let log_sin = principal_log(sin_pi(s))?;
        let lg = log_gamma_right(one - s)?;
        return Ok(Complex::new(T::PI().ln(), T::zero()) - log_sin - lg);
    }
    log_gamma_right(s)
}

fn log_gamma_right<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    let mut z = s;
    let mut shift = Complex::new(T::zero(), T::zero());
    while z.norm() < T::lit(STIRLING_SHIFT) {
        shift += principal_log(z)?;
        z += T::one();
    }
    let half = T::lit(0.5);
    let log_z = principal_log(z)?;
    let mut acc = (z - half) * log_z - z + half * T::TAU().ln();
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for c in STIRLING_COEFFS {
        acc += pow * T::lit(c);
        pow *= inv2;
    }
    Ok(acc - shift)
}

/// `Gamma(s)` as `exp(log_gamma(s))`.
pub fn gamma<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    Ok(log_gamma(s)?.exp())
}

/// `1 / Gamma(s)`, entire. Exactly zero at the non-positive integers.
pub fn reciprocal_gamma<T: Real>(s: Complex<T>) -> Complex<T> {
    if nonpositive_integer(s).is_some() {
        return Complex::new(T::zero(), T::zero());
    }
    if s.re >= T::lit(0.5) {
        // Not a pole, so log_gamma cannot fail here.
        return log_gamma_right(s).map_or(Complex::new(T::zero(), T::zero()), |lg| (-lg).exp());
    }
    let one = Complex::new(T::one(), T::zero());
    match log_gamma_right(one - s) {
        Ok(lg) => sin_pi(s) * lg.exp() / T::PI(),
        Err(_) => Complex::new(T::zero(), T::zero()),
    }
}

/// `exp(z) - 1` without cancellation for small `z`.
pub fn exp_m1<T: Real>(z: Complex<T>) -> Complex<T> {
    let (sin_b, cos_b) = z.im.sin_cos();
    let half_sin = (z.im * T::lit(0.5)).sin();
    let two = T::lit(2.0);
    Complex::new(
        z.re.exp_m1() * cos_b - two * half_sin * half_sin,
        z.re.exp() * sin_b,
    )
}

/// `Log(1 - x)` for `|x| < 1`, accurate when `x` is small.
pub fn log_one_minus<T: Real>(x: Complex<T>) -> Complex<T> {
    // |1 - x|^2 - 1 = |x|^2 - 2 Re x
    let d = x.norm_sqr() - T::lit(2.0) * x.re;
    Complex::new(
        T::lit(0.5) * d.ln_1p(),
        (-x.im).atan2(T::one() - x.re),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn log_examples() {
        assert_eq!(principal_log(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let l = principal_log(c(-1.0, 0.0)).unwrap();
        assert_eq!(l, c(0.0, std::f64::consts::PI));
        let l = principal_log(c(-1.0, -0.0)).unwrap();
        assert_eq!(l.im, std::f64::consts::PI);
        let l = principal_log(c(0.5, 0.0)).unwrap();
        assert_relative_eq!(l.re, 0.5f64.ln(), max_relative = 1e-15);
        assert!(principal_log(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn pow_examples() {
        let z = c(0.3, -2.0);
        assert_eq!(principal_pow(z, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let e = std::f64::consts::E;
        assert_relative_eq!(principal_pow(c(e, 0.0), c(1.0, 0.0)).unwrap().re, e, max_relative = 1e-15);
        let v = principal_pow(c(2.0, 0.0), c(0.0, 1.0)).unwrap();
        let l2 = 2f64.ln();
        assert_relative_eq!(v.re, l2.cos(), max_relative = 1e-15);
        assert_relative_eq!(v.im, l2.sin(), max_relative = 1e-15);
        assert!(principal_pow(c(0.0, 0.0), c(-1.0, 0.0)).is_err());
        assert_eq!(principal_pow(c(0.0, 0.0), c(2.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn log_gamma_examples() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert_relative_eq!(log_gamma(c(5.0, 0.0)).unwrap().re, 24f64.ln(), max_relative = 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert_relative_eq!(half.re, std::f64::consts::PI.sqrt().ln(), max_relative = 1e-14);
        assert!(half.im.abs() < 1e-15);
        for n in 0..5 {
            assert_eq!(log_gamma(c(-(n as f64), 0.0)), Err(Error::Pole(-(n as f64))));
        }
    }

    #[test]
    fn log_gamma_large_argument() {
        // log 49! computed by direct summation.
        let lf: f64 = (1..50).map(|k| (k as f64).ln()).sum();
        assert_relative_eq!(log_gamma(c(50.0, 0.0)).unwrap().re, lf, max_relative = 1e-14);
    }

    #[test]
    fn reciprocal_gamma_examples() {
        assert_eq!(reciprocal_gamma(c(-3.0, 0.0)), c(0.0, 0.0));
        assert_eq!(reciprocal_gamma(c(0.0, 0.0)), c(0.0, 0.0));
        assert_relative_eq!(reciprocal_gamma(c(1.0, 0.0)).re, 1.0, max_relative = 1e-14);
        // Gamma(2.5) = 3 sqrt(pi) / 4
        let expected = 4.0 / (3.0 * std::f64::consts::PI.sqrt());
        assert_relative_eq!(reciprocal_gamma(c(2.5, 0.0)).re, expected, max_relative = 1e-14);
        // Gamma(-0.5) = -2 sqrt(pi)
        let expected = -1.0 / (2.0 * std::f64::consts::PI.sqrt());
        assert_relative_eq!(reciprocal_gamma(c(-0.5, 0.0)).re, expected, max_relative = 1e-14);
    }

    #[test]
    fn reciprocal_gamma_near_pole_is_small_and_signed() {
        // 1/Gamma(-k + h) ~ (-1)^k k! h
        for k in 0..4u32 {
            let h = 1e-7;
            let v = reciprocal_gamma(c(-(k as f64) + h, 0.0)).re;
            let fact: f64 = (1..=k).map(f64::from).product();
            let expected = if k % 2 == 0 { fact * h } else { -fact * h };
            assert_relative_eq!(v, expected, max_relative = 1e-5);
        }
    }

    #[test]
    fn exp_m1_small_and_large() {
        let z = c(1e-12, -3e-12);
        let v = exp_m1(z);
        assert_relative_eq!(v.re, 1e-12, max_relative = 1e-9);
        assert_relative_eq!(v.im, -3e-12, max_relative = 1e-9);
        let z = c(0.7, 1.9);
        let v = exp_m1(z);
        let d = z.exp() - 1.0;
        assert!((v - d).norm() < 1e-15);
    }

    #[test]
    fn log_one_minus_matches_series() {
        let x = c(1e-9, 2e-9);
        let v = log_one_minus(x);
        let series = -(x + x * x / 2.0);
        assert!((v - series).norm() < 1e-25);
        let x = c(-0.6, 0.7);
        let v = log_one_minus(x);
        let direct = (c(1.0, 0.0) - x).ln();
        assert!((v - direct).norm() < 1e-15);
    }

    #[test]
    fn sin_pi_near_integers() {
        let v = sin_pi(c(3.0 + 1e-10, 0.0));
        assert_relative_eq!(v.re, -std::f64::consts::PI * 1e-10, max_relative = 1e-6);
    }

    #[test]
    fn generic_over_f32() {
        let v = reciprocal_gamma(Complex::new(2.5f32, 0.0));
        assert!((v.re - 0.752_252_3).abs() < 1e-5);
    }
}
