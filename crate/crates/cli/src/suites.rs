//! Seeded verification suites. Each suite evaluates one family of identities
//! over a reproducible parameter grid and returns one record per check.

use num_complex::Complex;
use serde_json::{json, Value};

use qbm_core::grid::Lcg;
use qbm_core::identities::{
    dedekind_eta, deformation_sequence, deformation_target, eta_modularity_residual,
    period_deformation_check, raabe_lhs, raabe_rhs, richardson, richardson_tableau, rho_q_product,
    DeformationSpec, QuadratureSpec, DEFAULT_MU_SCHEDULE,
};
use qbm_core::qseries::{collapsed_sum, lattice_polylog_sum};
use qbm_core::qzeta::{
    derivative_link_residual, ladder_residual, log_qgamma, qgamma_product_log, qzeta,
    zeta_central_difference, QGammaParams, QZetaParams,
};
use qbm_core::{Nome, Periods, SeriesConfig};

use crate::report::CheckRecord;

type C = Complex<f64>;

pub const SUITES: [&str; 10] = [
    "vanishing", "product", "dual", "ladder", "derivative", "raabe", "deform", "triangle", "eta", "rho",
];

pub const VANISHING_TOL: f64 = 0.0;
pub const PRODUCT_TOL: f64 = 1e-10;
pub const DUAL_TOL: f64 = 1e-10;
pub const LADDER_TOL: f64 = 1e-10;
pub const DERIVATIVE_TOL: f64 = 1e-6;
pub const DERIVATIVE_STEP: f64 = 1e-4;
pub const RATIO_WINDOW: (f64, f64) = (3.5, 4.5);
pub const RAABE_TOL: f64 = 1e-8;
pub const RAABE_L2_TOL: f64 = 1e-7;
pub const DEFORM_TOL: f64 = 1e-6;
pub const SLOPE_TOL: f64 = 0.3;
pub const ETA_TOL: f64 = 1e-10;
pub const ETA_FIXED_POINT_TOL: f64 = 1e-12;
pub const ETA_ORACLE_TOL: f64 = 1e-9;
pub const RHO_TOL: f64 = 1e-10;

/// Smallest decay rate accepted when sampling, to keep lattice boxes small.
const MIN_SAMPLED_DECAY: f64 = 0.1;

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    Unknown(String),
    #[error(transparent)]
    Numeric(#[from] qbm_core::Error),
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Replaces the main tolerance of every suite when set.
    pub tol: Option<f64>,
    pub cfg: SeriesConfig<f64>,
}

impl SuiteOptions {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            tol: None,
            cfg: SeriesConfig::default(),
        }
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let records = match name {
        "all" => {
            let mut all = Vec::new();
            for suite in SUITES {
                all.extend(run_suite(suite, opts)?);
            }
            all
        }
        "vanishing" => vanishing(opts)?,
        "product" => product(opts)?,
        "dual" => dual(opts)?,
        "ladder" => ladder(opts)?,
        "derivative" => derivative(opts)?,
        "raabe" => raabe(opts)?,
        "deform" => deform(opts)?,
        "triangle" => triangle(opts)?,
        "eta" => eta(opts)?,
        "rho" => rho(opts)?,
        other => return Err(SuiteError::Unknown(other.to_string())),
    };
    Ok(records)
}

fn cj(z: C) -> Value {
    json!({"re": z.re, "im": z.im})
}

fn periods_json(p: &Periods<f64>) -> Value {
    Value::Array(p.as_slice().iter().map(|&z| cj(z)).collect())
}

fn zero() -> C {
    C::new(0.0, 0.0)
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// A random valid `(q, w, omega)` triple.
struct Point {
    q: Nome<f64>,
    w: C,
    omega: Periods<f64>,
}

impl Point {
    fn json(&self) -> Value {
        json!({"q": cj(self.q.q()), "w": cj(self.w), "periods": periods_json(&self.omega)})
    }
}

fn sample(rng: &mut Lcg, orders: (usize, usize), complex_q: bool) -> Point {
    loop {
        let modulus = rng.range(0.2, 0.8);
        let arg = if complex_q { rng.range(-0.4, 0.4) } else { 0.0 };
        let w = rng.complex((0.3, 2.0), (-1.0, 1.0));
        let r = rng.int(orders.0, orders.1);
        let omega: Vec<C> = (0..r).map(|_| rng.complex((0.5, 2.0), (-0.5, 0.5))).collect();
        let Ok(q) = Nome::new(C::from_polar(modulus, arg)) else { continue };
        let Ok(omega) = Periods::new(omega) else { continue };
        let rates_ok = omega
            .as_slice()
            .iter()
            .chain(std::iter::once(&w))
            .all(|&z| q.decay_rate(z) >= MIN_SAMPLED_DECAY);
        if rates_ok {
            return Point { q, w, omega };
        }
    }
}

fn desk() -> Point {
    Point {
        q: Nome::real(0.5).expect("valid nome"),
        w: C::new(1.0, 0.0),
        omega: Periods::real(&[1.0]).expect("valid periods"),
    }
}

fn desk_alpha() -> Periods<f64> {
    Periods::real(&[1.0]).expect("valid periods")
}

/// `zeta^q` at `s = 0, -1, ..., -4` on 100 points with real `q`.
fn vanishing(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed);
    let mut out = Vec::new();
    for _ in 0..100 {
        let pt = sample(&mut rng, (0, 3), false);
        for n in 0..=4 {
            let s = C::new(-(n as f64), 0.0);
            let p = QZetaParams::new(s, pt.w, pt.omega.clone(), pt.q)?;
            let v = qzeta(&p, &opts.cfg)?;
            let mut params = pt.json();
            params["s"] = cj(s);
            out.push(CheckRecord::new("vanishing", params, v.value, zero(), v.value.norm(), opts.tol(VANISHING_TOL)));
        }
    }
    Ok(out)
}

/// Depth-zero series against the infinite product on 50 points.
fn product(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed.wrapping_add(1));
    let mut out = Vec::new();
    for _ in 0..50 {
        let pt = sample(&mut rng, (0, 2), true);
        let p = QGammaParams::new(0, pt.w, pt.omega.clone(), pt.q)?;
        let series = log_qgamma(&p, &opts.cfg)?;
        let prod = qgamma_product_log(&p, &opts.cfg)?;
        out.push(CheckRecord::new(
            "product",
            pt.json(),
            series.value,
            prod.value,
            rel(series.value, prod.value),
            opts.tol(PRODUCT_TOL),
        ));
    }
    Ok(out)
}

/// Lattice polylog sums against the collapsed sum, depths 0..=4, 20 points.
fn dual(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed.wrapping_add(2));
    let mut out = Vec::new();
    for _ in 0..20 {
        let pt = sample(&mut rng, (0, 2), true);
        for k in 0..=4u32 {
            let lattice = lattice_polylog_sum(k, pt.w, &pt.omega, &pt.q, &opts.cfg)?;
            let collapsed = collapsed_sum(C::new(-(k as f64), 0.0), pt.w, &pt.omega, &pt.q, &opts.cfg)?;
            let mut params = pt.json();
            params["k"] = json!(k);
            out.push(CheckRecord::new(
                "dual",
                params,
                lattice.value,
                collapsed.value,
                rel(lattice.value, collapsed.value),
                opts.tol(DUAL_TOL),
            ));
        }
    }
    Ok(out)
}

/// Ladder identity at every deletable index, 50 points. The residual is
/// relative to `max(1, |zeta^q_r(s, w)|)`.
fn ladder(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed.wrapping_add(3));
    let mut out = Vec::new();
    for _ in 0..50 {
        let pt = sample(&mut rng, (1, 3), true);
        let s = rng.complex((-3.0, 4.0), (-2.0, 2.0));
        let p = QZetaParams::new(s, pt.w, pt.omega.clone(), pt.q)?;
        let full = qzeta(&p, &opts.cfg)?;
        let scale = full.value.norm().max(1.0);
        for index in 0..pt.omega.len() {
            let r = ladder_residual(&p, index, &opts.cfg)?;
            let mut params = pt.json();
            params["s"] = cj(s);
            params["index"] = json!(index + 1);
            params["truncation_bound"] = json!(r.error_bound);
            out.push(CheckRecord::new(
                "ladder",
                params,
                C::new(r.residual, 0.0),
                zero(),
                r.residual / scale,
                opts.tol(LADDER_TOL) + r.error_bound / scale,
            ));
        }
    }
    Ok(out)
}

/// Central difference of `zeta^q` at `s = -k` against `log Gamma^q_{r,k}`.
fn derivative(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed.wrapping_add(4));
    let mut points = vec![desk()];
    for _ in 0..2 {
        let q = Nome::real(rng.range(0.3, 0.7))?;
        let w = C::new(rng.range(0.5, 1.5), 0.0);
        let r = rng.int(0, 2);
        let omega = Periods::real(&(0..r).map(|_| rng.range(0.5, 2.0)).collect::<Vec<_>>())?;
        points.push(Point { q, w, omega });
    }
    let mut out = Vec::new();
    for pt in &points {
        for k in 0..=2u32 {
            let p = QGammaParams::new(k, pt.w, pt.omega.clone(), pt.q)?;
            let coarse = derivative_link_residual(&p, DERIVATIVE_STEP, &opts.cfg)?;
            let fine = derivative_link_residual(&p, DERIVATIVE_STEP / 2.0, &opts.cfg)?;
            let diff = zeta_central_difference(&p, DERIVATIVE_STEP, &opts.cfg)?;
            let lg = log_qgamma(&p, &opts.cfg)?;
            let mut params = pt.json();
            params["k"] = json!(k);
            params["h"] = json!(DERIVATIVE_STEP);
            out.push(CheckRecord::new(
                "derivative.residual",
                params.clone(),
                diff,
                lg.value,
                coarse,
                opts.tol(DERIVATIVE_TOL),
            ));
            let ratio = coarse / fine;
            let centre = 0.5 * (RATIO_WINDOW.0 + RATIO_WINDOW.1);
            out.push(CheckRecord::new(
                "derivative.ratio",
                params,
                C::new(ratio, 0.0),
                C::new(centre, 0.0),
                (ratio - centre).abs(),
                0.5 * (RATIO_WINDOW.1 - RATIO_WINDOW.0),
            ));
        }
    }
    Ok(out)
}

/// Unit-cube integral against its closed form: l = 1 grid plus one l = 2 case.
fn raabe(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut rng = Lcg::new(opts.seed.wrapping_add(5));
    let quad = QuadratureSpec::default();
    let mut out = Vec::new();
    let mut check = |k: u32, pt: &Point, alpha: &Periods<f64>, tol: f64, name: &str| -> Result<(), SuiteError> {
        let lhs = raabe_lhs(k, pt.w, &pt.omega, alpha, &pt.q, &quad, &opts.cfg)?;
        let rhs = raabe_rhs(k, pt.w, &pt.omega, alpha, &pt.q, &opts.cfg)?;
        let mut params = pt.json();
        params["k"] = json!(k);
        params["alpha"] = periods_json(alpha);
        params["doubling_estimate"] = json!(lhs.doubling_estimate);
        out.push(CheckRecord::new(
            name,
            params.clone(),
            lhs.value,
            rhs.value.value,
            (lhs.value - rhs.value.value).norm(),
            tol,
        ));
        out.push(CheckRecord::new(
            "raabe.reduced",
            params,
            rhs.value.value,
            rhs.reduced,
            (rhs.value.value - rhs.reduced).norm(),
            0.0,
        ));
        Ok(())
    };
    for k in 0..=2u32 {
        for r in 0..=2usize {
            for q in [0.3, 0.5, 0.7] {
                let w = rng.complex((0.5, 1.5), (-0.5, 0.5));
                let omega: Vec<C> = (0..r).map(|_| rng.complex((0.5, 1.5), (-0.3, 0.3))).collect();
                let alpha = Periods::new(vec![rng.complex((0.5, 1.5), (-0.3, 0.3))])?;
                let pt = Point { q: Nome::real(q)?, w, omega: Periods::new(omega)? };
                check(k, &pt, &alpha, opts.tol(RAABE_TOL), "raabe.l1")?;
            }
        }
    }
    let alpha = Periods::real(&[1.0, 0.7])?;
    check(0, &desk(), &alpha, opts.tol(RAABE_L2_TOL), "raabe.l2")?;
    Ok(out)
}

/// Least-squares slope of `log err` against `log mu`.
pub fn loglog_slope(scales: &[f64], errors: &[f64]) -> f64 {
    let n = scales.len() as f64;
    let xs: Vec<f64> = scales.iter().map(|s| s.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Order/depth trade along mu = 10, 20, 40, 80 on the desk case, l = 1.
fn deform(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let pt = desk();
    let spec = DeformationSpec::unit(desk_alpha())?;
    let schedule = DEFAULT_MU_SCHEDULE;
    let mut out = Vec::new();
    for k in 0..=1u32 {
        let seq = deformation_sequence(k, pt.w, &pt.omega, &spec, &schedule, &pt.q, &opts.cfg)?;
        let target = deformation_target(k, 1, pt.w, &pt.omega, &pt.q, &opts.cfg)?.value;
        let errors: Vec<f64> = seq.iter().map(|p| (p.value.value - target).norm()).collect();
        let mut params = pt.json();
        params["k"] = json!(k);
        params["alpha"] = periods_json(&spec.alpha);
        params["schedule"] = json!(schedule);
        params["errors"] = json!(errors);

        let growth = errors.windows(2).map(|e| e[1] - e[0]).fold(f64::NEG_INFINITY, f64::max);
        out.push(CheckRecord::new("deform.monotone", params.clone(), seq[3].value.value, target, growth.max(0.0), 0.0));

        let slope = loglog_slope(&schedule, &errors);
        out.push(CheckRecord::new(
            "deform.slope",
            params.clone(),
            C::new(slope, 0.0),
            C::new(-1.0, 0.0),
            (slope + 1.0).abs(),
            SLOPE_TOL,
        ));

        let two_point = richardson(seq[2].value.value, seq[3].value.value, seq[2].scale, seq[3].scale, 1);
        out.push(CheckRecord::new(
            "deform.richardson",
            params.clone(),
            two_point,
            target,
            (two_point - target).norm(),
            opts.tol(DEFORM_TOL),
        ));

        let points: Vec<(f64, C)> = seq.iter().map(|p| (p.scale, p.value.value)).collect();
        let tableau = richardson_tableau(&points)?;
        out.push(CheckRecord::new(
            "deform.tableau",
            params,
            tableau,
            target,
            (tableau - target).norm(),
            opts.tol(DEFORM_TOL),
        ));
    }
    Ok(out)
}

/// Cube integral, closed form and deformation limit, pairwise.
fn triangle(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let pt = desk();
    let alpha = desk_alpha();
    let report = period_deformation_check(
        0,
        pt.w,
        &pt.omega,
        &alpha,
        &pt.q,
        &QuadratureSpec::default(),
        &DEFAULT_MU_SCHEDULE,
        &opts.cfg,
    )?;
    let mut params = pt.json();
    params["k"] = json!(0);
    params["alpha"] = periods_json(&alpha);
    params["two_point_limit"] = cj(report.two_point_limit);
    params["uses_q_gamma"] = json!(report.uses_q_gamma);
    let tol = opts.tol(DEFORM_TOL);
    let integral = report.integral.value;
    let closed = report.closed_form.value.value;
    let limit = report.limit;
    Ok(vec![
        CheckRecord::new("triangle.integral_closed", params.clone(), integral, closed, (integral - closed).norm(), tol),
        CheckRecord::new("triangle.integral_limit", params.clone(), integral, limit, report.discrepancy, tol),
        CheckRecord::new("triangle.closed_limit", params, closed, limit, (closed - limit).norm(), tol),
    ])
}

/// Ten upper-half-plane points, `tau = i` first.
pub fn eta_points(seed: u64) -> Vec<C> {
    let mut rng = Lcg::new(seed.wrapping_add(8));
    let mut taus = vec![C::new(0.0, 1.0)];
    taus.extend((0..9).map(|_| rng.complex((-0.5, 0.5), (0.6, 1.6))));
    taus
}

/// `eta(i)` from 50 factors of the defining product.
fn eta_i_oracle() -> f64 {
    let x = (-std::f64::consts::TAU).exp();
    let mut prod = 1.0;
    let mut power = 1.0;
    for _ in 0..50 {
        power *= x;
        prod *= 1.0 - power;
    }
    (-std::f64::consts::TAU / 24.0).exp() * prod
}

fn eta(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let mut out = Vec::new();
    for (n, tau) in eta_points(opts.seed).into_iter().enumerate() {
        let r = eta_modularity_residual(tau, &opts.cfg)?;
        let tol = if n == 0 { ETA_FIXED_POINT_TOL } else { opts.tol(ETA_TOL) };
        out.push(CheckRecord::new(
            "eta.modularity",
            json!({"tau": cj(tau)}),
            C::new(r.residual, 0.0),
            zero(),
            r.residual,
            tol,
        ));
    }
    let at_i = dedekind_eta(C::new(0.0, 1.0), &opts.cfg)?;
    let oracle = C::new(eta_i_oracle(), 0.0);
    out.push(CheckRecord::new(
        "eta.oracle",
        json!({"tau": cj(C::new(0.0, 1.0))}),
        at_i.value,
        oracle,
        (at_i.value - oracle).norm(),
        ETA_ORACLE_TOL,
    ));
    Ok(out)
}

/// `(-log q) exp(-sum_{n>=1} q^n / (n (1 - q^n)))`, the Euler function
/// resummed as a Lambert series.
fn rho_lambert_oracle(q: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for n in 1..10_000 {
        power *= q;
        let term = power / (n as f64 * (1.0 - power));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    -q.ln() * (-sum).exp()
}

fn rho(opts: &SuiteOptions) -> Result<Vec<CheckRecord>, SuiteError> {
    let omega = Periods::real(&[1.0])?;
    let mut out = Vec::new();
    for step in 2..=8 {
        let q = step as f64 / 10.0;
        let v = rho_q_product(&omega, &Nome::real(q)?, &opts.cfg)?;
        let oracle = C::new(rho_lambert_oracle(q), 0.0);
        out.push(CheckRecord::new(
            "rho",
            json!({"q": q, "periods": periods_json(&omega)}),
            v.value,
            oracle,
            rel(v.value, oracle),
            opts.tol(RHO_TOL),
        ));
    }
    Ok(out)
}
