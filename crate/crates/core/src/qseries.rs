//! Convergent series engines: the integer-order polylogarithm, the collapsed
//! sum `F(s)`, and box-truncated lattice sums.
//!
//! Every [`EvalResult`] carries a rigorous bound on the truncation error,
//! obtained from a closed-form geometric majorant of the discarded terms.
//! Rounding error is not included in the bound.

use num_complex::Complex;

use crate::complex::{exp_m1, principal_log};
use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// Largest per-axis truncation index accepted by lattice sums.
pub const MAX_LATTICE_AXIS: usize = 10_000;

const LATTICE_REFINEMENTS: usize = 6;

/// The base `q` of the q-series, stored through a fixed logarithm.
///
/// Non-integer powers `q^z` are `exp(z log q)`, so the choice of `log q`
/// matters. [`Nome::new`] takes the principal logarithm. [`Nome::from_tau_prime`]
/// keeps `log q = -2 pi i / tau'`, which lies on a different sheet whenever
/// `|Re(1/tau')| > 1/2`.
///
/// `|q| < 1` is equivalent to `Im(tau') > 0`: with `tau' = a + ib`,
/// `Re(-2 pi i / tau') = -2 pi b / |tau'|^2`, which is negative exactly when `b > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nome<T> {
    log_q: Complex<T>,
}

impl<T: Real> Nome<T> {
    /// Requires `0 < |q| < 1`.
    pub fn new(q: Complex<T>) -> Result<Self> {
        let r = q.norm();
        if !(r > T::zero() && r < T::one()) {
            return Err(domain(format!("nome must satisfy 0 < |q| < 1, got |q| = {}", r)));
        }
        Ok(Self { log_q: principal_log(q)? })
    }

    pub fn real(q: T) -> Result<Self> {
        Self::new(Complex::new(q, T::zero()))
    }

    /// `q = exp(-2 pi i / tau')`, requires `Im(tau') > 0`.
    pub fn from_tau_prime(tau_prime: Complex<T>) -> Result<Self> {
        if !(tau_prime.im > T::zero()) {
            return Err(domain("tau' must lie in the upper half-plane"));
        }
        let log_q = Complex::new(T::zero(), -T::TAU()) / tau_prime;
        Self::from_log(log_q)
    }

    /// Builds the nome from `log q` directly; requires `Re(log q) < 0`.
    pub fn from_log(log_q: Complex<T>) -> Result<Self> {
        if !(log_q.re < T::zero()) || !log_q.im.is_finite() {
            return Err(domain("log q must have negative real part"));
        }
        Ok(Self { log_q })
    }

    pub fn q(&self) -> Complex<T> {
        self.log_q.exp()
    }

    pub fn log_q(&self) -> Complex<T> {
        self.log_q
    }

    /// `-Re(z log q)`: the exponential decay rate of `|q^{n z}|` in `n`.
    pub fn decay_rate(&self, z: Complex<T>) -> T {
        -(z * self.log_q).re
    }
}

/// An ordered period vector `(omega_1, ..., omega_r)`, possibly empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Periods<T> {
    omega: Vec<Complex<T>>,
}

impl<T: Real> Periods<T> {
    /// Every period must have positive real part.
    pub fn new(omega: Vec<Complex<T>>) -> Result<Self> {
        for (i, w) in omega.iter().enumerate() {
            if !(w.re > T::zero()) || !w.im.is_finite() {
                return Err(domain(format!("period {} must have positive real part", i + 1)));
            }
        }
        Ok(Self { omega })
    }

    pub fn real(omega: &[T]) -> Result<Self> {
        Self::new(omega.iter().map(|&w| Complex::new(w, T::zero())).collect())
    }

    pub fn empty() -> Self {
        Self { omega: Vec::new() }
    }

    /// The order `r`.
    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.omega
    }

    /// `omega<i>`: the periods with the entry at zero-based `index` removed.
    pub fn without(&self, index: usize) -> Result<Self> {
        if index >= self.omega.len() {
            return Err(domain(format!(
                "period index {} out of range for order {}",
                index,
                self.omega.len()
            )));
        }
        let mut omega = self.omega.clone();
        omega.remove(index);
        Ok(Self { omega })
    }

    /// `(omega, extra)`.
    pub fn extended(&self, extra: &Periods<T>) -> Self {
        let mut omega = self.omega.clone();
        omega.extend_from_slice(&extra.omega);
        Self { omega }
    }

    /// `|omega|_x`, the product of all periods (1 when empty).
    pub fn product(&self) -> Complex<T> {
        self.omega
            .iter()
            .fold(Complex::new(T::one(), T::zero()), |acc, &w| acc * w)
    }

    /// Decay rates `-Re(omega_i log q)`; errors unless all are positive.
    pub fn decay_rates(&self, q: &Nome<T>) -> Result<Vec<T>> {
        self.omega
            .iter()
            .enumerate()
            .map(|(i, &w)| {
                let c = q.decay_rate(w);
                if c > T::zero() {
                    Ok(c)
                } else {
                    Err(domain(format!("period {} violates Re(omega log q) < 0", i + 1)))
                }
            })
            .collect()
    }
}

/// A series value with a rigorous truncation-error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    pub error_bound: T,
    pub terms_used: usize,
}

impl<T: Real> EvalResult<T> {
    pub fn exact(value: Complex<T>) -> Self {
        Self {
            value,
            error_bound: T::zero(),
            terms_used: 0,
        }
    }

    /// Multiplies value and bound by a constant.
    pub fn scaled(self, factor: Complex<T>) -> Self {
        Self {
            value: self.value * factor,
            error_bound: self.error_bound * factor.norm(),
            terms_used: self.terms_used,
        }
    }
}

/// Stopping rule shared by the series engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig<T> {
    /// Target bound on the truncation error relative to the partial sum.
    pub rel_tol: T,
    pub max_terms: usize,
}

impl<T: Real> Default for SeriesConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::lit(1e-14),
            max_terms: 100_000,
        }
    }
}

impl<T: Real> SeriesConfig<T> {
    pub fn with_rel_tol(rel_tol: T) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > T::zero() && self.rel_tol < T::one()) {
            return Err(domain("rel_tol must lie in (0, 1)"));
        }
        Ok(())
    }

    fn met(&self, bound: T, partial: T) -> bool {
        bound <= self.rel_tol * partial || bound <= T::abs_floor()
    }
}

/// `Li_m(x) = sum_{n>=1} x^n / n^m` for `|x| < 1`.
///
/// The tail after `N` terms is bounded by `|x|^{N+1} / ((N+1)^m (1 - |x|))`.
pub fn polylog_int<T: Real>(m: u32, x: Complex<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    cfg.validate()?;
    if m == 0 {
        return Err(domain("polylogarithm order must be at least 1"));
    }
    let ax = x.norm();
    if !(ax < T::one()) {
        return Err(domain(format!("polylogarithm argument must satisfy |x| < 1, got {}", ax)));
    }
    if ax == T::zero() {
        return Ok(EvalResult::exact(Complex::new(T::zero(), T::zero())));
    }
    let order = m as i32;
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut power = Complex::new(T::one(), T::zero());
    let mut abs_power = T::one();
    for n in 1..=cfg.max_terms {
        power *= x;
        abs_power *= ax;
        sum += power / T::from_count(n).powi(order);
        let next = T::from_count(n + 1);
        let bound = abs_power * ax / (next.powi(order) * (T::one() - ax));
        if cfg.met(bound, sum.norm()) {
            return Ok(EvalResult {
                value: sum,
                error_bound: bound,
                terms_used: n,
            });
        }
    }
    Err(Error::NonConvergence {
        what: "polylogarithm",
        max_terms: cfg.max_terms,
        bound: (abs_power * ax / (T::one() - ax)).to_f64_lossy(),
    })
}

/// `1 / prod_i (1 - e^{-c_i})`: the maximum of `prod_i |1 - q^{n omega_i}|^{-1}` over `n >= 1`.
fn dominance<T: Real>(rates: &[T]) -> T {
    rates
        .iter()
        .fold(T::one(), |d, &c| d / -(-c).exp_m1())
}

/// Bound on `sum_{n > N} n^{sigma - 1} e^{-c n}`; infinite while the
/// consecutive-term ratio of the majorant is not yet below one.
fn power_exp_tail<T: Real>(last: usize, sigma_minus_one: T, c: T) -> T {
    let first = T::from_count(last + 1);
    let head = (sigma_minus_one * first.ln() - c * first).exp();
    let growth = sigma_minus_one.max(T::zero()) * (T::from_count(last + 2) / first).ln();
    let ratio = (growth - c).exp();
    if ratio >= T::one() {
        T::infinity()
    } else {
        head / (T::one() - ratio)
    }
}

/// The collapsed lattice sum
/// `F(s) = sum_{n>=1} n^{s-1} q^{n w} / prod_i (1 - q^{n omega_i})`.
///
/// `F` is entire in `s`. It requires `Re(w log q) < 0` and the period
/// condition `Re(omega_i log q) < 0`. With `c = -Re(w log q)` and
/// `D = prod_i (1 - e^{-c_i})^{-1}`, the tail after `N` terms is at most
/// `D * sum_{n>N} n^{Re(s)-1} e^{-c n}`, bounded in geometric form.
pub fn collapsed_sum<T: Real>(
    s: Complex<T>,
    w: Complex<T>,
    omega: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    cfg.validate()?;
    let c = q.decay_rate(w);
    if !(c > T::zero()) {
        return Err(domain("w violates Re(w log q) < 0"));
    }
    let rates = omega.decay_rates(q)?;
    let d = dominance(&rates);
    let log_q = q.log_q();
    let w_log_q = w * log_q;
    let period_logs: Vec<Complex<T>> = omega.as_slice().iter().map(|&o| o * log_q).collect();
    let s_minus_one = s - T::one();

    let mut sum = Complex::new(T::zero(), T::zero());
    let mut bound = T::infinity();
    for n in 1..=cfg.max_terms {
        let nf = T::from_count(n);
        let mut term = (s_minus_one * nf.ln() + w_log_q * nf).exp();
        for &pl in &period_logs {
            term /= -exp_m1(pl * nf);
        }
        sum += term;
        bound = d * power_exp_tail(n, s_minus_one.re, c);
        if cfg.met(bound, sum.norm()) {
            return Ok(EvalResult {
                value: sum,
                error_bound: bound,
                terms_used: n,
            });
        }
    }
    Err(Error::NonConvergence {
        what: "collapsed sum",
        max_terms: cfg.max_terms,
        bound: bound.to_f64_lossy(),
    })
}

/// Geometry of a box-truncated lattice sum over `n >= 0` in `Z^r`.
struct LatticeGeometry<T> {
    /// Exponent at the origin, `w log q`.
    base: Complex<T>,
    /// Per-axis exponent steps `omega_i log q`.
    steps: Vec<Complex<T>>,
    rates: Vec<T>,
    /// `|x|` at the origin.
    origin_magnitude: T,
    /// Upper bound of `|x|` over all summed lattice points.
    max_magnitude: T,
    skip_origin: bool,
}

impl<T: Real> LatticeGeometry<T> {
    /// Bound on `sum |x|` over the lattice points outside the box `n_i <= limits_i`.
    fn outside_mass(&self, limits: &[usize]) -> T {
        let d = dominance(&self.rates);
        // 1 - prod_i (1 - e^{-c_i (N_i + 1)})
        let log_inside: T = self
            .rates
            .iter()
            .zip(limits)
            .map(|(&c, &n)| (-(-c * T::from_count(n + 1)).exp()).ln_1p())
            .fold(T::zero(), |a, b| a + b);
        self.origin_magnitude * d * -log_inside.exp_m1()
    }

    fn limits_for(&self, delta: T) -> Result<Vec<usize>> {
        self.rates
            .iter()
            .map(|&c| {
                let n = (-delta.ln() / c).ceil() - T::one();
                let n = n.max(T::zero());
                if n > T::from_count(MAX_LATTICE_AXIS) {
                    return Err(Error::NonConvergence {
                        what: "lattice sum",
                        max_terms: MAX_LATTICE_AXIS,
                        bound: delta.to_f64_lossy(),
                    });
                }
                Ok(n.to_usize().unwrap_or(0))
            })
            .collect()
    }
}

/// Sums `term(x)` over lattice points `x = q^{w + n.omega}` in a box, where each
/// term satisfies `|term(x)| <= |x| / (1 - |x|)`. Box sizes are refined until
/// the rigorous bound meets the relative tolerance.
fn lattice_sum<T: Real>(
    geometry: &LatticeGeometry<T>,
    cfg: &SeriesConfig<T>,
    mut term: impl FnMut(Complex<T>) -> Result<EvalResult<T>>,
) -> Result<EvalResult<T>> {
    let r = geometry.rates.len().max(1);
    let mut delta = cfg.rel_tol * T::lit(0.1) / T::from_count(r);
    let mut last_bound = T::infinity();
    for _ in 0..LATTICE_REFINEMENTS {
        let limits = geometry.limits_for(delta)?;
        let mut sum = Complex::new(T::zero(), T::zero());
        let mut inner = T::zero();
        let mut terms = 0usize;
        let mut index = vec![0usize; limits.len()];
        'points: loop {
            let at_origin = index.iter().all(|&i| i == 0);
            if !(at_origin && geometry.skip_origin) {
                let mut exponent = geometry.base;
                for (&i, &step) in index.iter().zip(&geometry.steps) {
                    exponent += step * T::from_count(i);
                }
                let t = term(exponent.exp())?;
                sum += t.value;
                inner += t.error_bound;
                terms += t.terms_used.max(1);
            }
            // Odometer increment, last axis fastest.
            let mut axis = limits.len();
            loop {
                if axis == 0 {
                    break 'points;
                }
                axis -= 1;
                if index[axis] < limits[axis] {
                    index[axis] += 1;
                    break;
                }
                index[axis] = 0;
            }
        }
        let tail = geometry.outside_mass(&limits) / (T::one() - geometry.max_magnitude);
        let bound = tail + inner;
        if cfg.met(bound, sum.norm()) {
            return Ok(EvalResult {
                value: sum,
                error_bound: bound,
                terms_used: terms,
            });
        }
        last_bound = bound;
        let shrink = (cfg.rel_tol * sum.norm() / bound).min(T::lit(1e-2));
        delta *= shrink.max(T::lit(1e-12));
    }
    Err(Error::NonConvergence {
        what: "lattice sum",
        max_terms: MAX_LATTICE_AXIS,
        bound: last_bound.to_f64_lossy(),
    })
}

fn lattice_geometry<T: Real>(
    w: Option<Complex<T>>,
    omega: &Periods<T>,
    q: &Nome<T>,
) -> Result<LatticeGeometry<T>> {
    let rates = omega.decay_rates(q)?;
    let log_q = q.log_q();
    let steps = omega.as_slice().iter().map(|&o| o * log_q).collect();
    match w {
        Some(w) => {
            let c = q.decay_rate(w);
            if !(c > T::zero()) {
                return Err(domain("w violates Re(w log q) < 0"));
            }
            let m = (-c).exp();
            Ok(LatticeGeometry {
                base: w * log_q,
                steps,
                rates,
                origin_magnitude: m,
                max_magnitude: m,
                skip_origin: false,
            })
        }
        None => {
            let c_min = rates.iter().copied().fold(T::infinity(), T::min);
            let max_magnitude = if c_min.is_finite() { (-c_min).exp() } else { T::zero() };
            Ok(LatticeGeometry {
                base: Complex::new(T::zero(), T::zero()),
                steps,
                rates,
                origin_magnitude: T::one(),
                max_magnitude,
                skip_origin: true,
            })
        }
    }
}

/// `sum_{n >= 0} Li_{k+1}(q^{n.omega + w})` over a box-truncated lattice.
///
/// This is the direct lattice form of `F(-k)`, evaluated independently of
/// [`collapsed_sum`].
pub fn lattice_polylog_sum<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    cfg.validate()?;
    let geometry = lattice_geometry(Some(w), omega, q)?;
    let inner = SeriesConfig {
        rel_tol: cfg.rel_tol * T::lit(0.25),
        max_terms: cfg.max_terms,
    };
    lattice_sum(&geometry, cfg, |x| polylog_int(k + 1, x, &inner))
}

/// `-sum_{n >= 0} Log(1 - q^{n.omega + w})`, the logarithm of the infinite
/// product `prod_{n >= 0} (1 - q^{n.omega + w})^{-1}`.
pub fn lattice_log_product<T: Real>(
    w: Complex<T>,
    omega: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    cfg.validate()?;
    let geometry = lattice_geometry(Some(w), omega, q)?;
    lattice_sum(&geometry, cfg, |x| {
        Ok(EvalResult {
            value: -crate::complex::log_one_minus(x),
            error_bound: T::zero(),
            terms_used: 1,
        })
    })
}

/// `sum_{n >= 0, n != 0} Log(1 - q^{n.omega})`.
pub fn lattice_log_product_nonzero<T: Real>(
    omega: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    cfg.validate()?;
    let geometry = lattice_geometry(None, omega, q)?;
    lattice_sum(&geometry, cfg, |x| {
        Ok(EvalResult {
            value: crate::complex::log_one_minus(x),
            error_bound: T::zero(),
            terms_used: 1,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn cfg() -> SeriesConfig<f64> {
        SeriesConfig::default()
    }

    #[test]
    fn nome_validation() {
        assert!(Nome::real(1.5).is_err());
        assert!(Nome::real(0.0).is_err());
        assert!(Nome::new(c(0.0, 1.0)).is_err());
        let q = Nome::real(0.5).unwrap();
        assert_relative_eq!(q.log_q().re, 0.5f64.ln());
        assert!(Nome::from_tau_prime(c(1.0, -0.1)).is_err());
    }

    #[test]
    fn nome_from_tau_prime_has_modulus_below_one() {
        let tp = c(0.4, 0.9);
        let q = Nome::from_tau_prime(tp).unwrap();
        let expected = (c(0.0, -std::f64::consts::TAU) / tp).exp();
        assert!((q.q() - expected).norm() < 1e-15);
        assert!(q.q().norm() < 1.0);
    }

    #[test]
    fn periods_ops() {
        let p = Periods::new(vec![c(1.0, 0.0), c(2.0, 1.0), c(0.5, -0.2)]).unwrap();
        assert_eq!(p.len(), 3);
        let d = p.without(1).unwrap();
        assert_eq!(d.as_slice(), &[c(1.0, 0.0), c(0.5, -0.2)]);
        assert!(p.without(3).is_err());
        assert!((p.product() - c(2.0, 1.0) * c(0.5, -0.2)).norm() < 1e-15);
        assert_eq!(Periods::<f64>::empty().product(), c(1.0, 0.0));
        assert!(Periods::real(&[1.0, -0.5]).is_err());
    }

    #[test]
    fn periods_need_decay_for_complex_nome() {
        // Re(omega) > 0 but Re(omega log q) >= 0 for this rotated nome.
        let q = Nome::new(c(0.0, 0.9)).unwrap();
        let p = Periods::new(vec![c(0.01, -1.0)]).unwrap();
        assert!(p.decay_rates(&q).is_err());
    }

    #[test]
    fn polylog_examples() {
        let v = polylog_int(1, c(0.5, 0.0), &cfg()).unwrap();
        assert_relative_eq!(v.value.re, 2f64.ln(), max_relative = 1e-14);
        let v = polylog_int(3, c(0.0, 0.0), &cfg()).unwrap();
        assert_eq!(v.value, c(0.0, 0.0));
        assert_eq!(v.terms_used, 0);
        assert!(polylog_int(2, c(1.0, 0.0), &cfg()).is_err());
        assert!(polylog_int(0, c(0.1, 0.0), &cfg()).is_err());
    }

    #[test]
    fn polylog_dilog_at_half() {
        // Oracle: 200 brute-force terms.
        let brute: f64 = (1..=200).map(|n| 0.5f64.powi(n) / (n as f64).powi(2)).sum();
        let closed = std::f64::consts::PI.powi(2) / 12.0 - 2f64.ln().powi(2) / 2.0;
        assert_relative_eq!(brute, closed, max_relative = 1e-15);
        let v = polylog_int(2, c(0.5, 0.0), &cfg()).unwrap();
        assert_relative_eq!(v.value.re, brute, max_relative = 1e-14);
        assert!((v.value.re - 0.582_241).abs() < 1e-6);
    }

    #[test]
    fn polylog_cap_reports_nonconvergence() {
        let tight = SeriesConfig { rel_tol: 1e-14, max_terms: 5 };
        assert!(matches!(
            polylog_int(1, c(0.99, 0.0), &tight),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn collapsed_lambert_example() {
        // Oracle: 60-term Lambert sum sum 0.5^n / (1 - 0.5^n).
        let brute: f64 = (1..=60).map(|n| 0.5f64.powi(n) / (1.0 - 0.5f64.powi(n))).sum();
        let q = Nome::real(0.5).unwrap();
        let omega = Periods::real(&[1.0]).unwrap();
        let v = collapsed_sum(c(1.0, 0.0), c(1.0, 0.0), &omega, &q, &cfg()).unwrap();
        assert_relative_eq!(v.value.re, brute, max_relative = 1e-14);
        assert!((v.value.re - 1.606_695).abs() < 1e-6);
        assert!(v.error_bound <= 1e-14 * v.value.norm());
    }

    #[test]
    fn collapsed_vanishes_for_large_w() {
        let q = Nome::real(0.5).unwrap();
        let omega = Periods::real(&[1.0, 2.5]).unwrap();
        for s in [c(-3.0, 0.0), c(2.0, 1.0), c(10.0, 0.0)] {
            let v = collapsed_sum(s, c(400.0, 0.0), &omega, &q, &cfg()).unwrap();
            assert!(v.value.norm() < 1e-100);
        }
    }

    #[test]
    fn collapsed_domain_errors() {
        let q = Nome::real(0.5).unwrap();
        let omega = Periods::real(&[1.0]).unwrap();
        assert!(matches!(
            collapsed_sum(c(1.0, 0.0), c(-1.0, 0.0), &omega, &q, &cfg()),
            Err(Error::Domain(_))
        ));
        let tiny = SeriesConfig { rel_tol: 1e-14, max_terms: 3 };
        assert!(matches!(
            collapsed_sum(c(1.0, 0.0), c(1.0, 0.0), &omega, &q, &tiny),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn lattice_empty_periods_is_single_polylog() {
        let q = Nome::real(0.3).unwrap();
        let w = c(0.8, 0.4);
        let x = (w * q.log_q()).exp();
        for k in 0..4 {
            let a = lattice_polylog_sum(k, w, &Periods::empty(), &q, &cfg()).unwrap();
            let b = polylog_int(k + 1, x, &cfg()).unwrap();
            assert!((a.value - b.value).norm() <= 1e-13 * b.value.norm());
        }
    }

    #[test]
    fn lattice_euler_product_example() {
        // Oracle: -log prod_{n=0}^{59} (1 - 2^{-n-1}).
        let prod: f64 = (0..60).map(|n| 1.0 - 0.5f64.powi(n + 1)).product();
        let expected = -prod.ln();
        let q = Nome::real(0.5).unwrap();
        let omega = Periods::real(&[1.0]).unwrap();
        let v = lattice_polylog_sum(0, c(1.0, 0.0), &omega, &q, &cfg()).unwrap();
        assert_relative_eq!(v.value.re, expected, max_relative = 1e-13);
        assert!((v.value.re - 1.242_062).abs() < 1e-6);
        let p = lattice_log_product(c(1.0, 0.0), &omega, &q, &cfg()).unwrap();
        assert_relative_eq!(p.value.re, expected, max_relative = 1e-13);
    }

    #[test]
    fn lattice_matches_collapsed() {
        let q = Nome::new(c(0.4, 0.2)).unwrap();
        let omega = Periods::new(vec![c(1.0, 0.3), c(1.7, -0.2)]).unwrap();
        let w = c(0.6, 0.5);
        for k in 0..5 {
            let a = lattice_polylog_sum(k, w, &omega, &q, &cfg()).unwrap();
            let b = collapsed_sum(c(-(k as f64), 0.0), w, &omega, &q, &cfg()).unwrap();
            assert!((a.value - b.value).norm() <= 1e-12 * b.value.norm(), "k = {}", k);
        }
    }

    #[test]
    fn nonzero_product_of_one_period_is_euler_function() {
        let q = Nome::real(0.5).unwrap();
        let omega = Periods::real(&[1.0]).unwrap();
        let v = lattice_log_product_nonzero(&omega, &q, &cfg()).unwrap();
        let prod: f64 = (1..80).map(|n| 1.0 - 0.5f64.powi(n)).product();
        assert_relative_eq!(v.value.re, prod.ln(), max_relative = 1e-13);
        let empty = lattice_log_product_nonzero(&Periods::empty(), &q, &cfg()).unwrap();
        assert_eq!(empty.value, c(0.0, 0.0));
    }
}
