//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line (visible with `--nocapture`).

use std::process::Command;
use std::time::{Duration, Instant};

use qbm_cli::report::CheckRecord;
use qbm_cli::suites::{self, run_suite, SuiteOptions};

fn records(suite: &str) -> (Vec<CheckRecord>, Duration) {
    let start = Instant::now();
    let r = run_suite(suite, &SuiteOptions::new(0)).expect("suite runs");
    (r, start.elapsed())
}

/// Largest residual and failure count among records called `name`.
fn worst(records: &[CheckRecord], name: &str) -> (f64, usize) {
    let matching: Vec<&CheckRecord> = records.iter().filter(|r| r.name == name).collect();
    let worst = matching.iter().map(|r| r.residual).fold(0.0, f64::max);
    let failed = matching.iter().filter(|r| !r.pass).count();
    assert!(!matching.is_empty(), "no records named {}", name);
    (worst, failed)
}

fn report(n: u32, ok: bool, detail: String) {
    println!("criterion {}: {} {}", n, if ok { "PASS" } else { "FAIL" }, detail);
    assert!(ok, "criterion {} failed: {}", n, detail);
}

#[test]
fn criterion_01_exact_vanishing() {
    let (r, t) = records("vanishing");
    let exact = r.iter().all(|c| c.lhs.re == 0.0 && c.lhs.im == 0.0);
    let ok = r.len() == 500 && exact && t < Duration::from_secs(10);
    report(1, ok, format!("{} evaluations, all exactly zero: {}, {:?}", r.len(), exact, t));
}

#[test]
fn criterion_02_product_matches_series() {
    let (r, t) = records("product");
    let (max, failed) = worst(&r, "product");
    let ok = r.len() == 50 && failed == 0 && max <= 1e-10 && t < Duration::from_secs(30);
    report(2, ok, format!("max rel {:.3e} over {} points, {:?}", max, r.len(), t));
}

#[test]
fn criterion_03_lattice_matches_collapsed_sum() {
    let (r, t) = records("dual");
    let (max, failed) = worst(&r, "dual");
    let ok = r.len() == 100 && failed == 0 && max <= 1e-10 && t < Duration::from_secs(60);
    report(3, ok, format!("max rel {:.3e} over 20 points x 5 depths, {:?}", max, t));
}

#[test]
fn criterion_04_ladder() {
    let (r, _) = records("ladder");
    let (max, failed) = worst(&r, "ladder");
    let ok = failed == 0 && r.iter().all(|c| c.tolerance <= 1e-10 + 1e-12);
    report(4, ok, format!("max scaled residual {:.3e} over {} index checks", max, r.len()));
}

#[test]
fn criterion_05_derivative_link() {
    let (r, _) = records("derivative");
    let (max, failed_res) = worst(&r, "derivative.residual");
    let ratios: Vec<f64> = r.iter().filter(|c| c.name == "derivative.ratio").map(|c| c.lhs.re).collect();
    let in_window = ratios
        .iter()
        .all(|&x| x >= suites::RATIO_WINDOW.0 && x <= suites::RATIO_WINDOW.1);
    let depths: Vec<u64> = r.iter().filter_map(|c| c.parameters["k"].as_u64()).collect();
    let ok = failed_res == 0 && max <= 1e-6 && in_window && (0..=2).all(|k| depths.contains(&k));
    report(5, ok, format!("max residual {:.3e} at h = 1e-4, ratios {:?}", max, ratios));
}

#[test]
fn criterion_06_cube_integral() {
    let (r, t) = records("raabe");
    let (l1, f1) = worst(&r, "raabe.l1");
    let (l2, f2) = worst(&r, "raabe.l2");
    let (reduced, f3) = worst(&r, "raabe.reduced");
    let l1_count = r.iter().filter(|c| c.name == "raabe.l1").count();
    let ok = l1_count == 27 && f1 + f2 + f3 == 0 && l1 <= 1e-8 && l2 <= 1e-7 && t < Duration::from_secs(300);
    report(
        6,
        ok,
        format!("l=1 max {:.3e} ({} cases), l=2 {:.3e}, reduced form gap {:.1e}, {:?}", l1, l1_count, l2, reduced, t),
    );
}

#[test]
fn criterion_07_order_depth_trade() {
    let (r, _) = records("deform");
    let (_, mono) = worst(&r, "deform.monotone");
    let (slope, slope_fail) = worst(&r, "deform.slope");
    let (rich, rich_fail) = worst(&r, "deform.richardson");
    let (tableau, _) = worst(&r, "deform.tableau");
    let ok = mono == 0 && slope_fail == 0 && rich_fail == 0 && rich <= 1e-6;
    report(
        7,
        ok,
        format!(
            "monotone: {}, slope dev {:.3e}, two-point extrapolation error {:.3e} (four-point tableau {:.3e})",
            mono == 0,
            slope,
            rich,
            tableau
        ),
    );
}

#[test]
fn criterion_08_consistency_triangle() {
    let (r, _) = records("triangle");
    let max = r.iter().map(|c| c.residual).fold(0.0, f64::max);
    let ok = r.len() == 3 && r.iter().all(|c| c.pass) && max <= 1e-6;
    report(8, ok, format!("max pairwise gap {:.3e}", max));
}

#[test]
fn criterion_09_eta_modularity() {
    let (r, _) = records("eta");
    let (max, failed) = worst(&r, "eta.modularity");
    let at_i = r.iter().find(|c| c.name == "eta.modularity").expect("tau = i first");
    let oracle = r.iter().find(|c| c.name == "eta.oracle").expect("oracle record");
    let count = r.iter().filter(|c| c.name == "eta.modularity").count();
    let ok = count == 10
        && failed == 0
        && max <= 1e-10
        && at_i.residual <= 1e-12
        && oracle.pass
        && (oracle.lhs.re - 0.768225).abs() < 1e-6;
    report(
        9,
        ok,
        format!("max residual {:.3e}, at i {:.3e}, eta(i) = {:.9}", max, at_i.residual, oracle.lhs.re),
    );
}

#[test]
fn criterion_10_rho_lambert() {
    let (r, _) = records("rho");
    let (max, failed) = worst(&r, "rho");
    let ok = r.len() == 7 && failed == 0 && max <= 1e-10;
    report(10, ok, format!("max rel {:.3e} over q = 0.2..0.8", max));
}

fn qbm(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qbm"))
        .args(args)
        .env_remove("QBM_MAX_TERMS")
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_11_determinism_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.json");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["eval-gamma", "--q", "0.5", "--w", "1", "--periods", "1", "--depth", "0"], 0),
        (vec!["verify", "--suite", "vanishing"], 0),
        (vec!["verify", "--suite", "product", "--tol", "0"], 1),
        (vec!["eval-gamma", "--q", "1.5", "--w", "1", "--periods", "1"], 2),
        (vec!["eval-gamma", "--q", "0.5", "--w", "1+", "--periods", "1"], 2),
        (vec!["verify", "--suite", "nonsense"], 2),
        (vec!["frobnicate"], 2),
        (vec!["eval-gamma", "--q", "0.5", "--w", "1", "--periods", "1", "--depth", "40"], 3),
        (vec!["eval-gamma", "--q", "0.5i", "--w", "1", "--periods", "0.01-1i"], 3),
        (vec!["eta", "--tau", "-i"], 3),
        (vec!["eta", "--tau", "i", "--out", missing.to_str().unwrap()], 4),
    ];
    let mut mismatches = Vec::new();
    for (args, expected) in &cases {
        let code = qbm(args).status.code();
        if code != Some(*expected) {
            mismatches.push(format!("{:?} -> {:?}, expected {}", args, code, expected));
        }
    }
    let reruns: [&[&str]; 3] = [
        &["verify", "--suite", "all", "--grid-seed", "42"],
        &["verify", "--suite", "ladder", "--grid-seed", "7", "--format", "csv"],
        &["table", "--q", "0.3+0.2i", "--periods", "1,1.5", "--w", "0.5,1+0.5i"],
    ];
    let identical = reruns.iter().all(|args| {
        let a = qbm(args);
        let b = qbm(args);
        !a.stdout.is_empty() && a.stdout == b.stdout
    });
    let ok = mismatches.is_empty() && identical;
    report(
        11,
        ok,
        format!("{} exit-code cases, byte-identical reruns: {}, mismatches: {:?}", cases.len(), identical, mismatches),
    );
}
