//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use qbm_core::{Nome, Periods};

use crate::parse::{parse_complex, parse_finite, parse_nome, parse_periods, parse_real_list};

/// Comma-separated lists parse as one value (an alias keeps clap from
/// treating them as repeated flags).
pub type RealList = Vec<f64>;
pub type ComplexList = Vec<Complex<f64>>;

#[derive(Debug, Clone, Parser)]
#[command(name = "qbm", version, about = "Evaluate q-BM multiple gamma and zeta functions and verify their identities")]
pub struct Command {
    #[command(subcommand)]
    pub action: Action,

    /// Relative tolerance of every series truncation.
    #[arg(long, global = true, value_parser = parse_positive)]
    pub rel_tol: Option<f64>,

    /// Cap on the number of series terms (overrides QBM_MAX_TERMS).
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFunction {
    /// log Gamma^q_{r,k}
    Gamma,
    /// zeta^q_r
    Zeta,
}

#[derive(Debug, Clone, Args)]
pub struct Base {
    /// Nome, `0 < |q| < 1`.
    #[arg(long, value_parser = parse_nome, allow_hyphen_values = true)]
    pub q: Nome<f64>,

    /// Comma-separated periods with positive real part; empty for order 0.
    #[arg(long, value_parser = parse_periods, allow_hyphen_values = true)]
    pub periods: Periods<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct Point {
    #[command(flatten)]
    pub base: Base,

    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub w: Complex<f64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Action {
    /// Evaluate zeta^q_r(s, w; periods).
    EvalZeta {
        #[command(flatten)]
        point: Point,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex<f64>,
    },
    /// Evaluate log Gamma^q_{r,k}(w; periods).
    EvalGamma {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 0)]
        depth: u32,
    },
    /// Unit-cube integral against its closed form.
    Raabe {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        /// Periods added by the integral.
        #[arg(long, value_parser = parse_periods)]
        alpha: Periods<f64>,
        /// Gauss-Legendre nodes per axis.
        #[arg(long, default_value_t = 32)]
        nodes: usize,
        #[arg(long, value_parser = parse_positive, default_value_t = crate::suites::RAABE_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Order/depth trade along a schedule of period scalings.
    Deform {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        /// Periods that are divided by mu.
        #[arg(long, value_parser = parse_periods)]
        alpha: Periods<f64>,
        /// Per-period mu ratios (default all ones).
        #[arg(long, value_parser = parse_real_list)]
        mu: Option<RealList>,
        /// Comma-separated scales.
        #[arg(long, value_parser = parse_real_list, default_value = "10,20,40,80")]
        schedule: RealList,
    },
    /// Evaluate the Dedekind eta function.
    Eta {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau: Complex<f64>,
    },
    /// Evaluate the product side of the rho^q constant.
    Rho {
        #[command(flatten)]
        base: Base,
    },
    /// Run a verification suite.
    Verify {
        /// vanishing, product, dual, ladder, derivative, raabe, deform, triangle, eta, rho or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Replaces the main tolerance of the suite.
        #[arg(long, value_parser = parse_nonnegative)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 0)]
        grid_seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tabulate a function over a list of w values as CSV.
    Table {
        #[arg(long, value_enum, default_value_t = TableFunction::Gamma)]
        function: TableFunction,
        #[command(flatten)]
        base: Base,
        /// Comma-separated w values.
        #[arg(long, value_parser = crate::parse::parse_complex_list, allow_hyphen_values = true)]
        w: ComplexList,
        #[arg(long, default_value_t = 0)]
        depth: u32,
        /// Evaluation point of zeta; required with `--function zeta`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Option<Complex<f64>>,
    },
}

fn parse_positive(text: &str) -> Result<f64, String> {
    let v = parse_finite(text)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a positive number, got '{}'", text))
    }
}

fn parse_nonnegative(text: &str) -> Result<f64, String> {
    let v = parse_finite(text)?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a non-negative number, got '{}'", text))
    }
}
