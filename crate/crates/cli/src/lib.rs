//! Command-line front end: argument grammar, command execution and the
//! verification suites behind `qbm verify`.
//!
//! Exit codes: 0 success or all checks pass, 1 a check failed, 2 usage error,
//! 3 numerical or domain error, 4 I/O error.

pub mod cli;
pub mod parse;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use num_complex::Complex;
use serde::Serialize;
use serde_json::json;

use qbm_core::identities::{
    dedekind_eta, deformation_sequence, deformation_target, raabe_lhs, raabe_rhs, richardson,
    richardson_tableau, rho_q_product, DeformationSpec, QuadratureSpec,
};
use qbm_core::qzeta::{log_qgamma, qzeta, QGammaParams, QZetaParams};
use qbm_core::{EvalResult, SeriesConfig};

pub use cli::{Action, Command, Format, TableFunction};
use report::{number, CheckRecord, JsonComplex, Report};
use suites::{SuiteError, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Environment variable overriding the default series term cap.
pub const MAX_TERMS_ENV: &str = "QBM_MAX_TERMS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("numerical error: {0}")]
    Numeric(#[from] qbm_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Unknown(_) => CliError::Usage(e.to_string()),
            SuiteError::Numeric(e) => CliError::Numeric(e),
        }
    }
}

/// Parses arguments without the program name.
pub fn parse_args<I, S>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("qbm")).chain(argv.into_iter().map(Into::into));
    Command::try_parse_from(args)
}

/// Parses and runs, writing data to `stdout` and diagnostics to `stderr`.
pub fn main_with<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(&cmd, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e);
            e.exit_code()
        }
    }
}

/// Series configuration from the flags, then the environment, then defaults.
pub fn series_config(cmd: &Command) -> Result<SeriesConfig<f64>, CliError> {
    let mut cfg = SeriesConfig::default();
    if let Some(t) = cmd.rel_tol {
        cfg.rel_tol = t;
    }
    match cmd.max_terms {
        Some(n) => cfg.max_terms = n,
        None => {
            if let Ok(text) = std::env::var(MAX_TERMS_ENV) {
                cfg.max_terms = text
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{} must be a positive integer, got '{}'", MAX_TERMS_ENV, text)))?;
            }
        }
    }
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(cfg)
}

#[derive(Serialize)]
struct EvalOutput {
    value: JsonComplex,
    error_bound: f64,
    terms_used: usize,
}

fn eval_json(v: &EvalResult<f64>) -> String {
    let out = EvalOutput {
        value: v.value.into(),
        error_bound: v.error_bound,
        terms_used: v.terms_used,
    };
    let mut s = serde_json::to_string(&out).expect("serializable");
    s.push('\n');
    s
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
        Format::Csv => report.to_csv(),
    }
}

fn cj(z: Complex<f64>) -> serde_json::Value {
    json!({"re": z.re, "im": z.im})
}

/// Runs a parsed command. Returns [`EXIT_OK`] or [`EXIT_CHECK_FAILED`].
pub fn run(cmd: &Command, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = series_config(cmd)?;
    let mut code = EXIT_OK;
    let text = match &cmd.action {
        Action::EvalZeta { point, s } => {
            let p = QZetaParams::new(*s, point.w, point.base.periods.clone(), point.base.q)?;
            eval_json(&qzeta(&p, &cfg)?)
        }
        Action::EvalGamma { point, depth } => {
            let p = QGammaParams::new(*depth, point.w, point.base.periods.clone(), point.base.q)?;
            eval_json(&log_qgamma(&p, &cfg)?)
        }
        Action::Eta { tau } => eval_json(&dedekind_eta(*tau, &cfg)?),
        Action::Rho { base } => eval_json(&rho_q_product(&base.periods, &base.q, &cfg)?),
        Action::Raabe { point, depth, alpha, nodes, tol, format } => {
            let quad = QuadratureSpec { nodes_per_axis: *nodes };
            let (w, omega, q) = (point.w, &point.base.periods, &point.base.q);
            let lhs = raabe_lhs(*depth, w, omega, alpha, q, &quad, &cfg)?;
            let rhs = raabe_rhs(*depth, w, omega, alpha, q, &cfg)?;
            let params = json!({
                "q": cj(q.q()),
                "w": cj(w),
                "periods": omega.as_slice().iter().map(|&z| cj(z)).collect::<Vec<_>>(),
                "alpha": alpha.as_slice().iter().map(|&z| cj(z)).collect::<Vec<_>>(),
                "k": depth,
                "nodes": nodes,
                "doubling_estimate": lhs.doubling_estimate,
            });
            let record = CheckRecord::new("raabe", params, lhs.value, rhs.value.value, (lhs.value - rhs.value.value).norm(), *tol);
            let report = Report::new("raabe", 0, vec![record]);
            if !report.all_pass() {
                code = EXIT_CHECK_FAILED;
            }
            render(&report, *format)
        }
        Action::Deform { point, depth, alpha, mu, schedule } => {
            let spec = match mu {
                Some(mu) => DeformationSpec::new(alpha.clone(), mu.clone())?,
                None => DeformationSpec::unit(alpha.clone())?,
            };
            let (w, omega, q) = (point.w, &point.base.periods, &point.base.q);
            let seq = deformation_sequence(*depth, w, omega, &spec, schedule, q, &cfg)?;
            let target = deformation_target(*depth, spec.l(), w, omega, q, &cfg)?;
            let n = seq.len();
            let two_point = if n >= 2 {
                Some(richardson(seq[n - 2].value.value, seq[n - 1].value.value, seq[n - 2].scale, seq[n - 1].scale, 1))
            } else {
                None
            };
            let points: Vec<(f64, Complex<f64>)> = seq.iter().map(|p| (p.scale, p.value.value)).collect();
            let extrapolated = richardson_tableau(&points)?;
            let out = json!({
                "target": cj(target.value),
                "sequence": seq.iter().map(|p| json!({
                    "scale": p.scale,
                    "value": cj(p.value.value),
                    "error_bound": p.value.error_bound,
                    "error": (p.value.value - target.value).norm(),
                })).collect::<Vec<_>>(),
                "richardson": two_point.map(cj),
                "extrapolated": cj(extrapolated),
            });
            let mut s = serde_json::to_string_pretty(&out).expect("serializable");
            s.push('\n');
            s
        }
        Action::Verify { suite, tol, grid_seed, format } => {
            let opts = SuiteOptions { seed: *grid_seed, tol: *tol, cfg };
            let records = suites::run_suite(suite, &opts)?;
            let report = Report::new(suite.clone(), *grid_seed, records);
            if !report.all_pass() {
                code = EXIT_CHECK_FAILED;
            }
            render(&report, *format)
        }
        Action::Table { function, base, w, depth, s } => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io(e.into());
            writer
                .write_record(["w_re", "w_im", "value_re", "value_im", "error_bound", "terms_used"])
                .map_err(io)?;
            for &wv in w {
                let v = match function {
                    TableFunction::Gamma => {
                        log_qgamma(&QGammaParams::new(*depth, wv, base.periods.clone(), base.q)?, &cfg)?
                    }
                    TableFunction::Zeta => {
                        let s = s.ok_or_else(|| CliError::Usage("--function zeta needs --s".into()))?;
                        qzeta(&QZetaParams::new(s, wv, base.periods.clone(), base.q)?, &cfg)?
                    }
                };
                writer
                    .write_record([
                        number(wv.re),
                        number(wv.im),
                        number(v.value.re),
                        number(v.value.im),
                        number(v.error_bound),
                        v.terms_used.to_string(),
                    ])
                    .map_err(io)?;
            }
            String::from_utf8(writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?)
                .expect("utf-8")
        }
    };
    match &cmd.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(code)
}
