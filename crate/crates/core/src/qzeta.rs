//! The q-multiple Hurwitz zeta function and the q-BM multiple gamma function.
//!
//! Both are evaluated through the collapsed sum `F(s)`:
//!
//! ```text
//! zeta^q_r(s, w; omega)      = (-log q)^s / Gamma(s) * F(s)
//! log Gamma^q_{r,k}(w; omega) = k! / (log q)^k * F(-k)
//! ```
//!
//! The second line is the `s`-derivative of the first at `s = -k`, where
//! `d/ds [a^s / Gamma(s)]` equals `k! / (-a)^k`. Since `F` is entire and the
//! reciprocal gamma factor vanishes at `s = 0, -1, -2, ...`, the zeta
//! function is exactly zero there.

use num_complex::Complex;

use crate::complex::{principal_pow, reciprocal_gamma};
use crate::error::{domain, Result};
use crate::qseries::{collapsed_sum, lattice_log_product, EvalResult, Nome, Periods, SeriesConfig};
use crate::scalar::Real;

/// Largest depth accepted by [`QGammaParams`].
pub const MAX_DEPTH: u32 = 12;

/// Magnitude of `log Gamma^q` beyond which the exponential is not formed.
pub const EXP_OVERFLOW_LIMIT: f64 = 700.0;

#[derive(Debug, Clone, PartialEq)]
pub struct QZetaParams<T> {
    pub s: Complex<T>,
    pub w: Complex<T>,
    pub omega: Periods<T>,
    pub q: Nome<T>,
}

impl<T: Real> QZetaParams<T> {
    pub fn new(s: Complex<T>, w: Complex<T>, omega: Periods<T>, q: Nome<T>) -> Result<Self> {
        check_domain(w, &omega, &q)?;
        Ok(Self { s, w, omega, q })
    }
}

/// Parameters of `Gamma^q_{r,k}(w; omega)`: depth `k`, order `r = omega.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct QGammaParams<T> {
    pub k: u32,
    pub w: Complex<T>,
    pub omega: Periods<T>,
    pub q: Nome<T>,
}

impl<T: Real> QGammaParams<T> {
    pub fn new(k: u32, w: Complex<T>, omega: Periods<T>, q: Nome<T>) -> Result<Self> {
        if k > MAX_DEPTH {
            return Err(domain(format!("depth {} exceeds the supported maximum {}", k, MAX_DEPTH)));
        }
        check_domain(w, &omega, &q)?;
        Ok(Self { k, w, omega, q })
    }

    pub fn order(&self) -> usize {
        self.omega.len()
    }
}

fn check_domain<T: Real>(w: Complex<T>, omega: &Periods<T>, q: &Nome<T>) -> Result<()> {
    if !(q.decay_rate(w) > T::zero()) {
        return Err(domain("w violates Re(w log q) < 0"));
    }
    omega.decay_rates(q).map(|_| ())
}

/// `(-log q)^s / Gamma(s)`.
pub fn zeta_prefactor<T: Real>(s: Complex<T>, q: &Nome<T>) -> Result<Complex<T>> {
    let rg = reciprocal_gamma(s);
    if rg.re == T::zero() && rg.im == T::zero() {
        return Ok(rg);
    }
    Ok(principal_pow(-q.log_q(), s)? * rg)
}

/// `k! / (log q)^k`.
pub fn depth_factor<T: Real>(k: u32, q: &Nome<T>) -> Complex<T> {
    let log_q = q.log_q();
    (1..=k).fold(Complex::new(T::one(), T::zero()), |acc, j| {
        acc * T::from_count(j as usize) / log_q
    })
}

/// `zeta^q_r(s, w; omega)` for every complex `s`.
pub fn qzeta<T: Real>(p: &QZetaParams<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    check_domain(p.w, &p.omega, &p.q)?;
    let prefactor = zeta_prefactor(p.s, &p.q)?;
    if prefactor.re == T::zero() && prefactor.im == T::zero() {
        return Ok(EvalResult::exact(prefactor));
    }
    Ok(collapsed_sum(p.s, p.w, &p.omega, &p.q, cfg)?.scaled(prefactor))
}

/// `log Gamma^q_{r,k}(w; omega)` as the series value `k!/(log q)^k F(-k)`.
pub fn log_qgamma<T: Real>(p: &QGammaParams<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    let s = Complex::new(-T::from_count(p.k as usize), T::zero());
    let f = collapsed_sum(s, p.w, &p.omega, &p.q, cfg)?;
    Ok(f.scaled(depth_factor(p.k, &p.q)))
}

/// `Gamma^q_{r,k}` together with its logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QGammaValue<T> {
    pub log: EvalResult<T>,
    /// `exp(log)`; `None` when `|log| > 700` and the exponential would overflow.
    pub value: Option<Complex<T>>,
}

impl<T: Real> QGammaValue<T> {
    pub fn overflow_warning(&self) -> bool {
        self.value.is_none()
    }
}

pub fn qgamma<T: Real>(p: &QGammaParams<T>, cfg: &SeriesConfig<T>) -> Result<QGammaValue<T>> {
    let log = log_qgamma(p, cfg)?;
    let value = if log.value.norm() > T::lit(EXP_OVERFLOW_LIMIT) {
        None
    } else {
        Some(log.value.exp())
    };
    Ok(QGammaValue { log, value })
}

/// Depth-zero `log Gamma^q_r` from the infinite product
/// `prod_{n >= 0} (1 - q^{n.omega + w})^{-1}`.
pub fn qgamma_product_log<T: Real>(p: &QGammaParams<T>, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    if p.k != 0 {
        return Err(domain("the product form only covers depth 0"));
    }
    lattice_log_product(p.w, &p.omega, &p.q, cfg)
}

/// A computed identity residual together with the truncation bounds of its terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual<T> {
    pub residual: T,
    pub error_bound: T,
}

/// `|zeta^q_r(s, w + omega_i) - zeta^q_r(s, w) + zeta^q_{r-1}(s, w; omega<i>)|`.
///
/// `index` is zero-based.
pub fn ladder_residual<T: Real>(
    p: &QZetaParams<T>,
    index: usize,
    cfg: &SeriesConfig<T>,
) -> Result<Residual<T>> {
    if p.omega.is_empty() {
        return Err(domain("the ladder identity needs at least one period"));
    }
    let reduced = p.omega.without(index)?;
    let shift = p.omega.as_slice()[index];
    let shifted = QZetaParams::new(p.s, p.w + shift, p.omega.clone(), p.q)?;
    let lower = QZetaParams::new(p.s, p.w, reduced, p.q)?;
    let lhs = qzeta(&shifted, cfg)?;
    let full = qzeta(p, cfg)?;
    let low = qzeta(&lower, cfg)?;
    Ok(Residual {
        residual: (lhs.value - full.value + low.value).norm(),
        error_bound: lhs.error_bound + full.error_bound + low.error_bound,
    })
}

/// Central difference of `zeta^q` in `s` at `s = -k` with step `h`.
pub fn zeta_central_difference<T: Real>(
    p: &QGammaParams<T>,
    h: T,
    cfg: &SeriesConfig<T>,
) -> Result<Complex<T>> {
    let s0 = -T::from_count(p.k as usize);
    let at = |s: T| {
        let zp = QZetaParams::new(Complex::new(s, T::zero()), p.w, p.omega.clone(), p.q)?;
        qzeta(&zp, cfg)
    };
    let plus = at(s0 + h)?;
    let minus = at(s0 - h)?;
    Ok((plus.value - minus.value) / (h + h))
}

/// `|D_h zeta^q(-k) - log Gamma^q_{r,k}|` for the central difference `D_h`,
/// with `h` in `[1e-6, 1e-3]`.
pub fn derivative_link_residual<T: Real>(
    p: &QGammaParams<T>,
    h: T,
    cfg: &SeriesConfig<T>,
) -> Result<T> {
    if !(h >= T::lit(1e-6) && h <= T::lit(1e-3)) {
        return Err(domain("finite-difference step must lie in [1e-6, 1e-3]"));
    }
    let diff = zeta_central_difference(p, h, cfg)?;
    let lg = log_qgamma(p, cfg)?;
    Ok((diff - lg.value).norm())
}
