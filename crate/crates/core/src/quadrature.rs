//! Tensor-product Gauss-Legendre quadrature on the unit cube.

use crate::error::{domain, Result};
use crate::scalar::Real;

pub const MIN_NODES: usize = 4;
pub const MAX_NODES: usize = 128;

/// Gauss-Legendre nodes and weights on `[0, 1]`, nodes ascending.
pub fn gauss_legendre_unit<T: Real>(n: usize) -> Vec<(T, T)> {
    let mut rule = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let weight = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((T::lit(0.5 * (1.0 - x)), T::lit(0.5 * weight)));
    }
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over `[0, 1]^dim` with `n` nodes per axis. Points are
/// visited in lexicographic order, so the reduction order is fixed.
pub fn integrate_cube<T, V, E>(
    dim: usize,
    n: usize,
    mut f: impl FnMut(&[T]) -> std::result::Result<V, E>,
) -> std::result::Result<V, E>
where
    T: Real,
    V: Copy + std::ops::Add<Output = V> + std::ops::Mul<T, Output = V> + num_traits::Zero,
{
    let rule = gauss_legendre_unit::<T>(n);
    let mut index = vec![0usize; dim];
    let mut point = vec![T::zero(); dim];
    let mut total = V::zero();
    loop {
        let mut weight = T::one();
        for (axis, &i) in index.iter().enumerate() {
            point[axis] = rule[i].0;
            weight *= rule[i].1;
        }
        total = total + f(&point)? * weight;
        let mut axis = dim;
        loop {
            if axis == 0 {
                return Ok(total);
            }
            axis -= 1;
            if index[axis] + 1 < n {
                index[axis] += 1;
                break;
            }
            index[axis] = 0;
        }
    }
}

pub fn check_nodes(n: usize) -> Result<()> {
    if !(MIN_NODES..=MAX_NODES).contains(&n) {
        return Err(domain(format!(
            "nodes per axis must lie in [{}, {}], got {}",
            MIN_NODES, MAX_NODES, n
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for n in [4, 7, 32, 128] {
            let s: f64 = gauss_legendre_unit::<f64>(n).iter().map(|&(_, w)| w).sum();
            assert!((s - 1.0).abs() < 1e-14, "n = {}", n);
        }
    }

    #[test]
    fn exact_for_polynomials() {
        // n nodes integrate degree 2n - 1 exactly.
        let rule = gauss_legendre_unit::<f64>(5);
        for deg in 0..10 {
            let v: f64 = rule.iter().map(|&(x, w)| w * x.powi(deg)).sum();
            assert!((v - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14, "degree {}", deg);
        }
    }

    #[test]
    fn cube_integral_of_separable_function() {
        let v: f64 = integrate_cube::<f64, f64, ()>(2, 16, |t| Ok((t[0]).exp() * (2.0 * t[1]).cos())).unwrap();
        let expected = (1f64.exp() - 1.0) * (2f64.sin() / 2.0);
        assert!((v - expected).abs() < 1e-14);
    }

    #[test]
    fn constants_integrate_exactly() {
        let v: f64 = integrate_cube::<f64, f64, ()>(1, 32, |_| Ok(3.25)).unwrap();
        assert!((v - 3.25).abs() < 1e-14);
    }

    #[test]
    fn node_bounds() {
        assert!(check_nodes(3).is_err());
        assert!(check_nodes(129).is_err());
        assert!(check_nodes(32).is_ok());
    }
}
