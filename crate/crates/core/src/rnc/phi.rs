//! The map `y ↦ u` whose inversion produces the rational normal curve, and
//! its Jacobians.
//!
//! With `a_0 = 1`, `a_j = 1/y_j` and the curve translated so that it meets
//! `X_0 + ⋯ + X_n = 0` at `t = 0`, the point at `t = ∞` has standardized
//! coordinates proportional to `(1 : u_1 : ⋯ : u_n)` where
//!
//! ```text
//! u_j = -y_j^n · Π_{h ≥ 1, h ≠ j} (1 - y_h) / (y_j - y_h).
//! ```

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const SINGULAR: f64 = 1e-300;

fn check_domain(y: &[Complex64]) -> Result<()> {
    for (j, yj) in y.iter().enumerate() {
        if !yj.re.is_finite() || !yj.im.is_finite() {
            return Err(Error::SingularInput("non-finite coordinate"));
        }
        if yj.norm() < SINGULAR {
            return Err(Error::SingularInput("coordinate is zero"));
        }
        if (Complex64::new(1.0, 0.0) - yj).norm() < SINGULAR {
            return Err(Error::SingularInput("coordinate equals one"));
        }
        if y[..j].iter().any(|yh| (yj - yh).norm() < SINGULAR) {
            return Err(Error::SingularInput("coordinates coincide"));
        }
    }
    Ok(())
}

pub fn phi_map(y: &[Complex64]) -> Result<Vec<Complex64>> {
    check_domain(y)?;
    let n = y.len() as i32;
    let one = Complex64::new(1.0, 0.0);
    Ok(y.iter()
        .enumerate()
        .map(|(j, yj)| {
            let prod = y
                .iter()
                .enumerate()
                .filter(|&(h, _)| h != j)
                .fold(one, |acc, (_, yh)| acc * (one - yh) / (yj - yh));
            -yj.powi(n) * prod
        })
        .collect())
}

/// Scaled logarithmic derivatives `(y_k / u_j) ∂u_j/∂y_k`.
///
/// Off the diagonal this is `-(1 - y_j) / ((1 - y_k)(1 - y_j/y_k))`; on the
/// diagonal `n - Σ_{h ≥ 1, h ≠ j} (1 - y_h/y_j)^{-1}`.
pub fn scaled_log_jacobian(y: &[Complex64]) -> Result<DMatrix<Complex64>> {
    check_domain(y)?;
    let n = y.len();
    let one = Complex64::new(1.0, 0.0);
    Ok(DMatrix::from_fn(n, n, |j, k| {
        if j == k {
            let s: Complex64 = (0..n).filter(|&h| h != j).map(|h| one / (one - y[h] / y[j])).sum();
            Complex64::new(n as f64, 0.0) - s
        } else {
            -(one - y[j]) / ((one - y[k]) * (one - y[j] / y[k]))
        }
    }))
}

/// `∂ log u_j / ∂y_k`, the Jacobian of the logarithms of the `u_j`.
pub fn log_derivative_jacobian(y: &[Complex64]) -> Result<DMatrix<Complex64>> {
    let mut l = scaled_log_jacobian(y)?;
    for k in 0..y.len() {
        let inv = y[k].inv();
        l.column_mut(k).iter_mut().for_each(|x| *x *= inv);
    }
    Ok(l)
}

/// `∂u_j/∂y_k`, recovered from the scaled log-derivatives.
pub fn phi_jacobian(y: &[Complex64]) -> Result<DMatrix<Complex64>> {
    let u = phi_map(y)?;
    let l = scaled_log_jacobian(y)?;
    Ok(DMatrix::from_fn(y.len(), y.len(), |j, k| u[j] / y[k] * l[(j, k)]))
}

/// `y_j = M^{j-n-1} e^{iθ_j}` for `j = 1..n`, so `|y_{j}| = M |y_{j-1}|`
/// and `M |y_n| = 1`.
pub fn hierarchical_seed(n: usize, m: f64) -> Vec<Complex64> {
    assert!(m > 1.0, "hierarchy scale must exceed 1");
    (1..=n)
        .map(|j| {
            let theta = 0.4 + 2.0 * std::f64::consts::PI * (j as f64 - 1.0) / (n as f64 + 0.5);
            Complex64::from_polar(m.powi(j as i32 - n as i32 - 1), theta)
        })
        .collect()
}
