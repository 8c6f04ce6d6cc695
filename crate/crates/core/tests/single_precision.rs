//! The series layer instantiated at `f32`.

use qbm_core::qzeta::{log_qgamma, qzeta, QGammaParams, QZetaParams};
use qbm_core::{Nome, Periods, SeriesConfig, C32};

fn cfg() -> SeriesConfig<f32> {
    SeriesConfig::with_rel_tol(1e-6)
}

#[test]
fn log_qgamma_matches_euler_product() {
    let p = QGammaParams::new(0, C32::new(1.0, 0.0), Periods::real(&[1.0f32]).unwrap(), Nome::real(0.5f32).unwrap())
        .unwrap();
    let v = log_qgamma(&p, &cfg()).unwrap();
    let oracle: f64 = -(1..60).map(|n| (1.0 - 0.5f64.powi(n)).ln()).sum::<f64>();
    assert!((f64::from(v.value.re) - oracle).abs() < 1e-5);
}

#[test]
fn zeta_vanishes_exactly() {
    let p = QZetaParams::new(
        C32::new(-2.0, 0.0),
        C32::new(0.8, 0.3),
        Periods::real(&[1.0f32, 1.5]).unwrap(),
        Nome::real(0.4f32).unwrap(),
    )
    .unwrap();
    assert_eq!(qzeta(&p, &cfg()).unwrap().value, C32::new(0.0, 0.0));
}
