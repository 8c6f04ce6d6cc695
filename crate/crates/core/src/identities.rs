//! Structural identities of the q-BM gamma function as executable checks:
//! the unit-cube integral formula, period deformation with its order/depth
//! trade, the `rho^q` product, and the modular transformation of Dedekind's
//! eta function.
//!
//! Two nomes appear here. The q-series use `q` with `|q| < 1` as everywhere
//! else in the crate. Dedekind's eta uses its own `exp(2 pi i tau)` with
//! `Im(tau) > 0`, unrelated to `q`.

use num_complex::Complex;

use crate::complex::principal_log;
use crate::error::{domain, Result};
use crate::qseries::{lattice_log_product_nonzero, EvalResult, Nome, Periods, SeriesConfig};
use crate::quadrature::{check_nodes, integrate_cube};
use crate::qzeta::{log_qgamma, qzeta, QGammaParams, QZetaParams, Residual};
use crate::scalar::Real;

/// Default deformation scales.
pub const DEFAULT_MU_SCHEDULE: [f64; 4] = [10.0, 20.0, 40.0, 80.0];

/// Periods `alpha` deformed to `alpha_j / mu_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationSpec<T> {
    pub alpha: Periods<T>,
    pub mu: Vec<T>,
}

impl<T: Real> DeformationSpec<T> {
    pub fn new(alpha: Periods<T>, mu: Vec<T>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(domain("deformation needs at least one period"));
        }
        if alpha.len() != mu.len() {
            return Err(domain("alpha and mu must have the same length"));
        }
        if mu.iter().any(|&m| !(m >= T::one()) || !m.is_finite()) {
            return Err(domain("deformation denominators must be finite and at least 1"));
        }
        Ok(Self { alpha, mu })
    }

    /// Unit denominators.
    pub fn unit(alpha: Periods<T>) -> Result<Self> {
        let mu = vec![T::one(); alpha.len()];
        Self::new(alpha, mu)
    }

    pub fn l(&self) -> usize {
        self.alpha.len()
    }

    /// `alpha / (scale * mu)`.
    pub fn deformed(&self, scale: T) -> Result<Periods<T>> {
        Periods::new(
            self.alpha
                .as_slice()
                .iter()
                .zip(&self.mu)
                .map(|(&a, &m)| a / (m * scale))
                .collect(),
        )
    }

    /// `|mu|_x` at the given scale.
    pub fn mu_product(&self, scale: T) -> T {
        self.mu.iter().fold(T::one(), |acc, &m| acc * m * scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    pub nodes_per_axis: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { nodes_per_axis: 32 }
    }
}

/// A quadrature value with its node-doubling difference (an estimate, not a bound).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: Complex<T>,
    pub doubling_estimate: T,
    pub evaluations: usize,
}

fn factorial<T: Real>(n: u32) -> T {
    (1..=n).fold(T::one(), |acc, j| acc * T::from_count(j as usize))
}

fn sign<T: Real>(l: usize) -> T {
    if l.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// `int_{[0,1]^l} log Gamma^q_{r+l,k}(w + t.alpha; (omega, alpha)) dt`.
pub fn raabe_lhs<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    alpha: &Periods<T>,
    q: &Nome<T>,
    quad: &QuadratureSpec,
    cfg: &SeriesConfig<T>,
) -> Result<QuadratureResult<T>> {
    if alpha.is_empty() {
        return Err(domain("the cube integral needs l >= 1"));
    }
    check_nodes(quad.nodes_per_axis)?;
    let periods = omega.extended(alpha);
    let l = alpha.len();
    let mut evaluations = 0usize;
    let mut integrate = |n: usize| {
        integrate_cube(l, n, |t: &[T]| {
            let shift = t
                .iter()
                .zip(alpha.as_slice())
                .fold(Complex::new(T::zero(), T::zero()), |acc, (&tj, &a)| acc + a * tj);
            let p = QGammaParams::new(k, w + shift, periods.clone(), *q)?;
            evaluations += 1;
            log_qgamma(&p, cfg).map(|v| v.value)
        })
    };
    let coarse = integrate(quad.nodes_per_axis)?;
    let fine = integrate(2 * quad.nodes_per_axis)?;
    Ok(QuadratureResult {
        value: coarse,
        doubling_estimate: (fine - coarse).norm(),
        evaluations,
    })
}

/// Closed form of the cube integral, with and without the zeta term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RaabeRhs<T> {
    /// `c (log Gamma^q_{r,l+k}(w) + H zeta^q_r(-k-l, w))`.
    pub value: EvalResult<T>,
    /// `c log Gamma^q_{r,l+k}(w)`.
    pub reduced: Complex<T>,
    /// `zeta^q_r(-k-l, w)`, zero at every valid point.
    pub zeta_term: Complex<T>,
}

impl<T: Real> RaabeRhs<T> {
    pub fn reduced_agrees_exactly(&self) -> bool {
        self.value.value == self.reduced
    }
}

/// `(-1)^l k! / (|alpha|_x (l+k)!) * (log Gamma^q_{r,l+k}(w; omega) + H_{k,l} zeta^q_r(-k-l, w; omega))`
/// with `H_{k,l} = 1/(k+1) + ... + 1/(k+l)`.
pub fn raabe_rhs<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    alpha: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<RaabeRhs<T>> {
    let l = alpha.len();
    if l == 0 {
        return Err(domain("the cube integral needs l >= 1"));
    }
    let depth = k + l as u32;
    let coefficient = Complex::new(sign::<T>(l) * factorial::<T>(k) / factorial::<T>(depth), T::zero())
        / alpha.product();
    let harmonic = (k + 1..=depth).fold(T::zero(), |acc, j| acc + T::one() / T::from_count(j as usize));
    let lg = log_qgamma(&QGammaParams::new(depth, w, omega.clone(), *q)?, cfg)?;
    let s = Complex::new(-T::from_count(depth as usize), T::zero());
    let zeta = qzeta(&QZetaParams::new(s, w, omega.clone(), *q)?, cfg)?;
    let full = lg.value + zeta.value * harmonic;
    Ok(RaabeRhs {
        value: EvalResult {
            value: coefficient * full,
            error_bound: coefficient.norm() * (lg.error_bound + harmonic * zeta.error_bound),
            terms_used: lg.terms_used + zeta.terms_used,
        },
        reduced: coefficient * lg.value,
        zeta_term: zeta.value,
    })
}

/// `(-1)^l k! / (l+k)! * log Gamma^q_{r,l+k}(w; omega)`, the limit of the
/// deformation sequence.
pub fn deformation_target<T: Real>(
    k: u32,
    l: usize,
    w: Complex<T>,
    omega: &Periods<T>,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    let depth = k + l as u32;
    let coefficient = sign::<T>(l) * factorial::<T>(k) / factorial::<T>(depth);
    let lg = log_qgamma(&QGammaParams::new(depth, w, omega.clone(), *q)?, cfg)?;
    Ok(lg.scaled(Complex::new(coefficient, T::zero())))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationPoint<T> {
    pub scale: T,
    pub value: EvalResult<T>,
}

fn deformed_log_gamma<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    spec: &DeformationSpec<T>,
    scale: T,
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<EvalResult<T>> {
    if !(scale > T::zero()) {
        return Err(domain("deformation scale must be positive"));
    }
    let periods = omega.extended(&spec.deformed(scale)?);
    log_qgamma(&QGammaParams::new(k, w, periods, *q)?, cfg)
}

/// `(|alpha|_x / |mu|_x) log Gamma^q_{r+l,k}(w; (omega, alpha/mu))` for each
/// scale in `schedule`, with `mu = scale * spec.mu`.
pub fn deformation_sequence<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    spec: &DeformationSpec<T>,
    schedule: &[T],
    q: &Nome<T>,
    cfg: &SeriesConfig<T>,
) -> Result<Vec<DeformationPoint<T>>> {
    schedule
        .iter()
        .map(|&scale| {
            let lg = deformed_log_gamma(k, w, omega, spec, scale, q, cfg)?;
            let factor = spec.alpha.product() / spec.mu_product(scale);
            Ok(DeformationPoint {
                scale,
                value: lg.scaled(factor),
            })
        })
        .collect()
}

/// Two-point Richardson extrapolation for an error `~ C / mu^order`.
pub fn richardson<T: Real>(
    coarse: Complex<T>,
    fine: Complex<T>,
    coarse_scale: T,
    fine_scale: T,
    order: i32,
) -> Complex<T> {
    let g = (fine_scale / coarse_scale).powi(order);
    (fine * g - coarse) / (g - T::one())
}

/// Extrapolates `value(mu)` to `mu -> infinity` by polynomial interpolation
/// in `1/mu` (Neville), eliminating one power of `1/mu` per extra point.
pub fn richardson_tableau<T: Real>(points: &[(T, Complex<T>)]) -> Result<Complex<T>> {
    if points.is_empty() {
        return Err(domain("extrapolation needs at least one point"));
    }
    let h: Vec<T> = points.iter().map(|&(mu, _)| T::one() / mu).collect();
    let mut p: Vec<Complex<T>> = points.iter().map(|&(_, v)| v).collect();
    for level in 1..p.len() {
        for i in 0..p.len() - level {
            let j = i + level;
            // Value at h = 0 of the interpolant through points i..=j.
            p[i] = (p[i + 1] * h[i] - p[i] * h[j]) / (h[i] - h[j]);
        }
    }
    Ok(p[0])
}

/// Both sides of the period-deformation identity.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodDeformationReport<T> {
    /// The unit-cube integral.
    pub integral: QuadratureResult<T>,
    /// Closed form of the same integral.
    pub closed_form: RaabeRhs<T>,
    /// `(1/|mu|_x) log Gamma^q_{r+l,k}(w; (omega, alpha/mu))` along the schedule.
    pub sequence: Vec<DeformationPoint<T>>,
    /// Two-point Richardson value from the last two scales.
    pub two_point_limit: Complex<T>,
    /// Extrapolation through every scale of the schedule.
    pub limit: Complex<T>,
    /// `|integral - limit|`.
    pub discrepancy: T,
    /// The right-hand side is evaluated with the q-deformed gamma function.
    pub uses_q_gamma: bool,
}

/// Compares the unit-cube integral against the extrapolated limit of
/// `(1/|mu|_x) log Gamma^q_{r+l,k}(w; (omega, alpha/mu))`.
#[allow(clippy::too_many_arguments)]
pub fn period_deformation_check<T: Real>(
    k: u32,
    w: Complex<T>,
    omega: &Periods<T>,
    alpha: &Periods<T>,
    q: &Nome<T>,
    quad: &QuadratureSpec,
    schedule: &[T],
    cfg: &SeriesConfig<T>,
) -> Result<PeriodDeformationReport<T>> {
    if schedule.len() < 2 {
        return Err(domain("the deformation schedule needs at least two scales"));
    }
    let spec = DeformationSpec::unit(alpha.clone())?;
    let integral = raabe_lhs(k, w, omega, alpha, q, quad, cfg)?;
    let closed_form = raabe_rhs(k, w, omega, alpha, q, cfg)?;
    let sequence = schedule
        .iter()
        .map(|&scale| {
            let lg = deformed_log_gamma(k, w, omega, &spec, scale, q, cfg)?;
            let factor = Complex::new(T::one() / spec.mu_product(scale), T::zero());
            Ok(DeformationPoint {
                scale,
                value: lg.scaled(factor),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let n = sequence.len();
    let two_point_limit = richardson(
        sequence[n - 2].value.value,
        sequence[n - 1].value.value,
        sequence[n - 2].scale,
        sequence[n - 1].scale,
        1,
    );
    let points: Vec<(T, Complex<T>)> = sequence.iter().map(|p| (p.scale, p.value.value)).collect();
    let limit = richardson_tableau(&points)?;
    Ok(PeriodDeformationReport {
        discrepancy: (integral.value - limit).norm(),
        integral,
        closed_form,
        sequence,
        two_point_limit,
        limit,
        uses_q_gamma: true,
    })
}

/// `(-log q) prod_{n >= 0, n != 0} (1 - q^{n.omega})`.
pub fn rho_q_product<T: Real>(omega: &Periods<T>, q: &Nome<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    let log_sum = lattice_log_product_nonzero(omega, q, cfg)?;
    let value = -q.log_q() * log_sum.value.exp();
    Ok(EvalResult {
        value,
        error_bound: value.norm() * log_sum.error_bound.exp_m1(),
        terms_used: log_sum.terms_used,
    })
}

/// Dedekind's eta `exp(pi i tau / 12) prod_{n >= 1} (1 - exp(2 pi i n tau))`.
pub fn dedekind_eta<T: Real>(tau: Complex<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    cfg.validate()?;
    if !(tau.im > T::zero()) {
        return Err(domain("eta needs Im(tau) > 0"));
    }
    let two_pi_i_tau = Complex::new(T::zero(), T::TAU()) * tau;
    let nome = (-T::TAU() * tau.im).exp();
    let mut product = Complex::new(T::one(), T::zero());
    let mut bound = T::infinity();
    for n in 1..=cfg.max_terms {
        let x = (two_pi_i_tau * T::from_count(n)).exp();
        product *= Complex::new(T::one(), T::zero()) - x;
        // Log of the remaining factors is at most |x|^{n+1} / (1 - |x|)^2.
        let log_tail = nome.powi(n as i32 + 1) / ((T::one() - nome) * (T::one() - nome));
        bound = log_tail.exp_m1();
        if bound <= cfg.rel_tol || nome.powi(n as i32 + 1) <= T::abs_floor() {
            let prefactor = (two_pi_i_tau / T::lit(24.0)).exp();
            let value = prefactor * product;
            return Ok(EvalResult {
                value,
                error_bound: value.norm() * bound,
                terms_used: n,
            });
        }
    }
    Err(crate::error::Error::NonConvergence {
        what: "eta product",
        max_terms: cfg.max_terms,
        bound: bound.to_f64_lossy(),
    })
}

/// `|eta(-1/tau) - sqrt(tau / i) eta(tau)|` with the principal square root.
pub fn eta_modularity_residual<T: Real>(tau: Complex<T>, cfg: &SeriesConfig<T>) -> Result<Residual<T>> {
    let one = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    let lhs = dedekind_eta(-(one / tau), cfg)?;
    let rhs = dedekind_eta(tau, cfg)?;
    let root = (principal_log(tau / i)? * T::lit(0.5)).exp();
    Ok(Residual {
        residual: (lhs.value - root * rhs.value).norm(),
        error_bound: lhs.error_bound + root.norm() * rhs.error_bound,
    })
}
