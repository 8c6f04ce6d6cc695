//! q-deformed Barnes-Milnor multiple gamma functions `Gamma^q_{r,k}(w; omega)`
//! and q-multiple Hurwitz zeta functions `zeta^q_r(s, w; omega)`.
//!
//! Everything is generic over the real scalar ([`Real`], implemented for
//! `f32` and `f64`). The aliases below fix the scalar to `f64`.

// `!(x > 0)` rejects NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod complex;
pub mod error;
pub mod grid;
pub mod identities;
pub mod qseries;
pub mod quadrature;
pub mod qzeta;
pub mod scalar;

pub use complex::{log_gamma, principal_log, principal_pow, reciprocal_gamma, ComplexValue};
pub use error::{Error, Result};
pub use identities::{
    dedekind_eta, deformation_sequence, deformation_target, eta_modularity_residual,
    period_deformation_check, raabe_lhs, raabe_rhs, rho_q_product, richardson, richardson_tableau,
    DeformationPoint, DeformationSpec, PeriodDeformationReport, QuadratureResult, QuadratureSpec,
    RaabeRhs,
};
pub use qseries::{collapsed_sum, lattice_polylog_sum, polylog_int, EvalResult, Nome, Periods, SeriesConfig};
pub use qzeta::{
    derivative_link_residual, ladder_residual, log_qgamma, qgamma, qgamma_product_log, qzeta,
    QGammaParams, QGammaValue, QZetaParams, Residual,
};
pub use scalar::Real;

pub type C64 = num_complex::Complex<f64>;
pub type C32 = num_complex::Complex<f32>;
pub type Nome64 = Nome<f64>;
pub type Periods64 = Periods<f64>;
pub type EvalResult64 = EvalResult<f64>;
pub type SeriesConfig64 = SeriesConfig<f64>;
pub type QZetaParams64 = QZetaParams<f64>;
pub type QGammaParams64 = QGammaParams<f64>;
pub type DeformationSpec64 = DeformationSpec<f64>;
