//! Predictor-corrector continuation for `Ψ(y) = u`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::phi::{hierarchical_seed, phi_jacobian, phi_map, scaled_log_jacobian};
use super::verify::{apply_matrix, low_order_residual, power_polynomial, verify_rnc, RncSolution};
use crate::arrangement::{standardize, ArrangementOrbifold};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Max-norm of `Ψ(y) - u`, relative to `max(1, |u|)`, accepted after the
    /// final Newton polish.
    pub newton_tolerance: f64,
    pub max_newton_iters: usize,
    /// Initial number of continuation steps; steps halve on failure.
    pub homotopy_steps: usize,
    pub min_step: f64,
    /// Hierarchy ratio of the start point.
    pub seed_m: f64,
    pub max_restarts: usize,
    pub rng_seed: u64,
    /// Tolerance handed to `verify_rnc` before a solution is returned.
    pub verify_tolerance: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            newton_tolerance: 1e-12,
            max_newton_iters: 50,
            homotopy_steps: 64,
            min_step: 2f64.powi(-20),
            seed_m: 1e3,
            max_restarts: 20,
            rng_seed: 0,
            verify_tolerance: 1e-8,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.newton_tolerance > 0.0 && self.newton_tolerance < 1.0) {
            return Err(Error::InvalidConfig("newton_tolerance must lie in (0, 1)"));
        }
        if !(self.verify_tolerance > 0.0 && self.verify_tolerance < 1.0) {
            return Err(Error::InvalidConfig("verify_tolerance must lie in (0, 1)"));
        }
        if self.max_newton_iters == 0 || self.homotopy_steps == 0 {
            return Err(Error::InvalidConfig("iteration counts must be positive"));
        }
        if !(self.min_step > 0.0 && self.min_step < 1.0) {
            return Err(Error::InvalidConfig("min_step must lie in (0, 1)"));
        }
        if !(self.seed_m > 1.0) {
            return Err(Error::InvalidConfig("seed_m must exceed 1"));
        }
        Ok(())
    }
}

fn solve_linear(m: DMatrix<Complex64>, rhs: &[Complex64]) -> Option<Vec<Complex64>> {
    let x = m.lu().solve(&DVector::from_column_slice(rhs))?;
    x.iter().all(|z| z.re.is_finite() && z.im.is_finite()).then(|| x.iter().copied().collect())
}

fn inf_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// One continuation path `w(s) = (1-s) w0 + s w1 + s(1-s) γ` in log
/// coordinates `w = log u`, tracked in `z = log y`. In these coordinates
/// the Jacobian is the scaled log-derivative matrix, which is close to a
/// triangular matrix with determinant `n!` at the hierarchical start.
struct Path {
    w0: Vec<Complex64>,
    w1: Vec<Complex64>,
    bend: Vec<Complex64>,
}

impl Path {
    fn at(&self, s: f64) -> Vec<Complex64> {
        (0..self.w0.len())
            .map(|j| self.w0[j] * (1.0 - s) + self.w1[j] * s + self.bend[j] * (s * (1.0 - s)))
            .collect()
    }

    fn velocity(&self, s: f64) -> Vec<Complex64> {
        (0..self.w0.len()).map(|j| self.w1[j] - self.w0[j] + self.bend[j] * (1.0 - 2.0 * s)).collect()
    }
}

fn exp_all(z: &[Complex64]) -> Vec<Complex64> {
    z.iter().map(|z| z.exp()).collect()
}

/// Newton on `Ψ(e^z) e^{-w} - 1 = 0`. Returns the corrected point when the
/// residual drops below `1e-11` without the iterate drifting farther than
/// `max_drift` from the start.
fn correct(z0: &[Complex64], w: &[Complex64], iters: usize, max_drift: f64) -> Option<Vec<Complex64>> {
    let target: Vec<Complex64> = w.iter().map(|w| (-w).exp()).collect();
    let mut z = z0.to_vec();
    let mut last = f64::INFINITY;
    for _ in 0..iters {
        let y = exp_all(&z);
        let u = phi_map(&y).ok()?;
        let r: Vec<Complex64> = u.iter().zip(&target).map(|(u, t)| u * t - 1.0).collect();
        let rn = inf_norm(&r);
        if rn < 1e-11 {
            return Some(z);
        }
        if rn > 0.5 * last && last < 1e-3 {
            // stalled near the tolerance floor
            return (rn < 1e-9).then_some(z);
        }
        last = rn;
        let mut jac = scaled_log_jacobian(&y).ok()?;
        for j in 0..z.len() {
            let f = u[j] * target[j];
            jac.row_mut(j).iter_mut().for_each(|x| *x *= f);
        }
        let neg: Vec<Complex64> = r.iter().map(|x| -x).collect();
        let dz = solve_linear(jac, &neg)?;
        for (zi, d) in z.iter_mut().zip(&dz) {
            *zi += d;
        }
        if z.iter().zip(z0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) > max_drift {
            return None;
        }
    }
    None
}

fn track(seed: &[Complex64], path: &Path, cfg: &SolverConfig) -> Option<Vec<Complex64>> {
    let mut z: Vec<Complex64> = seed.iter().map(|y| y.ln()).collect();
    let mut s = 0.0f64;
    let mut h = 1.0 / cfg.homotopy_steps as f64;
    let mut budget = 200 * cfg.homotopy_steps + 10_000;
    while s < 1.0 {
        budget = budget.checked_sub(1)?;
        let step = h.min(1.0 - s);
        let y = exp_all(&z);
        let l = scaled_log_jacobian(&y).ok()?;
        let dz = solve_linear(l, &path.velocity(s))?;
        let predicted: Vec<Complex64> = z.iter().zip(&dz).map(|(z, d)| z + d * step).collect();
        let s_next = if step >= 1.0 - s { 1.0 } else { s + step };
        let drift = 0.25 * (1.0 + inf_norm(&dz) * step);
        match correct(&predicted, &path.at(s_next), 8, drift) {
            Some(zc) => {
                z = zc;
                s = s_next;
                h = (2.0 * h).min(0.25);
            }
            None => {
                h *= 0.5;
                if h < cfg.min_step {
                    return None;
                }
            }
        }
    }
    correct(&z, &path.at(1.0), cfg.max_newton_iters, 1.0).map(|z| exp_all(&z))
}

/// Final Newton polish directly on `Ψ(y) = u` with the analytic Jacobian.
fn polish(y: Vec<Complex64>, u: &[Complex64], cfg: &SolverConfig) -> Option<Vec<Complex64>> {
    let scale = inf_norm(u).max(1.0);
    let mut y = y;
    let mut best = (f64::INFINITY, y.clone());
    for _ in 0..cfg.max_newton_iters {
        let f: Vec<Complex64> = phi_map(&y).ok()?.iter().zip(u).map(|(a, b)| a - b).collect();
        let rn = inf_norm(&f) / scale;
        if rn < best.0 {
            best = (rn, y.clone());
        } else {
            break;
        }
        if rn <= cfg.newton_tolerance * 1e-3 {
            break;
        }
        let neg: Vec<Complex64> = f.iter().map(|x| -x).collect();
        let Some(dy) = solve_linear(phi_jacobian(&y).ok()?, &neg) else { break };
        y = y.iter().zip(&dy).map(|(a, b)| a + b).collect();
    }
    (best.0 <= cfg.newton_tolerance).then_some(best.1)
}

fn random_seed(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let m = 10f64.powf(rng.random_range(1.5..4.0));
    (1..=n)
        .map(|j| {
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            let jitter = rng.random_range(0.5..2.0);
            Complex64::from_polar(jitter * m.powi(j as i32 - n as i32 - 1), theta)
        })
        .collect()
}

fn to_complex(p: &[Rational]) -> Vec<Complex64> {
    p.iter().map(|x| Complex64::new(x.to_f64(), 0.0)).collect()
}

/// Exact precondition check for rational points, then [`solve_rnc`].
pub fn solve_rnc_rational(arr: &ArrangementOrbifold, p: &[Rational], cfg: &SolverConfig) -> Result<RncSolution> {
    let dim = arr.n() as usize + 1;
    if p.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
    }
    for (j, l) in arr.hyperplanes().iter().enumerate() {
        let v: Rational = l.iter().zip(p).map(|(a, b)| a * b).sum();
        if v.is_zero() {
            return Err(Error::PointOnArrangement(j));
        }
    }
    solve_rnc(arr, &to_complex(p), cfg)
}

/// Constructs a rational normal curve of degree `n` through `p` meeting each
/// of the `n+2` hyperplanes of `arr` in a single point.
pub fn solve_rnc(arr: &ArrangementOrbifold, p: &[Complex64], cfg: &SolverConfig) -> Result<RncSolution> {
    cfg.validate()?;
    let n = arr.n() as usize;
    if p.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: p.len() });
    }
    let (homography, _) = standardize(arr)?;
    let hf = homography.to_f64();
    let hinv = homography.inverse().to_f64();

    let b: Vec<Complex64> = hf.iter().map(|row| row.iter().zip(p).map(|(&c, x)| x * c).sum()).collect();
    let b_scale = inf_norm(&b);
    if !(b_scale > 0.0 && b_scale.is_finite()) {
        return Err(Error::SingularInput("point is zero"));
    }
    if let Some(j) = b.iter().position(|x| x.norm() <= 1e-14 * b_scale) {
        return Err(Error::PointOnArrangement(j));
    }
    let sum_b: Complex64 = b.iter().sum();
    if sum_b.norm() <= 1e-14 * b_scale {
        return Err(Error::PointOnArrangement(n + 1));
    }
    let u: Vec<Complex64> = b[1..].iter().map(|x| x / b[0]).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let w_target: Vec<Complex64> = u.iter().map(|x| x.ln()).collect();
    for attempt in 0..=cfg.max_restarts {
        let (seed, path) = if attempt == 0 {
            let seed = hierarchical_seed(n, cfg.seed_m);
            let w0 = phi_map(&seed)?.iter().map(|x| x.ln()).collect();
            (seed, Path { w0, w1: w_target.clone(), bend: vec![Complex64::new(0.0, 0.0); n] })
        } else {
            let seed = random_seed(n, &mut rng);
            let Ok(u0) = phi_map(&seed) else { continue };
            let w0 = u0.iter().map(|x| x.ln()).collect();
            let tau = std::f64::consts::TAU;
            let w1 = w_target
                .iter()
                .map(|w| w + Complex64::new(0.0, tau * rng.random_range(-1i32..=1) as f64))
                .collect();
            let bend = (0..n)
                .map(|_| Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
                .collect();
            (seed, Path { w0, w1, bend })
        };
        let Some(y) = track(&seed, &path, cfg) else { continue };
        let Some(y) = polish(y, &u, cfg) else { continue };
        let sol = assemble(n, y, &b, &homography, &hinv, attempt);
        if verify_rnc(&sol, arr, p, cfg.verify_tolerance).pass {
            return Ok(sol);
        }
    }
    Err(Error::NoConvergence(cfg.max_restarts))
}

fn assemble(
    n: usize,
    y: Vec<Complex64>,
    b: &[Complex64],
    homography: &crate::arrangement::Homography,
    hinv: &[Vec<f64>],
    restarts_used: usize,
) -> RncSolution {
    let one = Complex64::new(1.0, 0.0);
    let a: Vec<Complex64> = std::iter::once(one).chain(y.iter().map(|y| y.inv())).collect();
    let standardized_polynomials: Vec<Vec<Complex64>> =
        a.iter().zip(b).map(|(&aj, &bj)| power_polynomial(bj, aj, n)).collect();
    let polynomials = apply_matrix(hinv, &standardized_polynomials);
    let is_real = a.iter().all(|z| z.im.abs() <= 1e-9 * z.norm().max(1.0));
    RncSolution {
        n,
        residual_report: low_order_residual(&a, b),
        leading_coefficient: b.iter().sum(),
        y,
        a,
        b: b.to_vec(),
        standardized_polynomials,
        polynomials,
        homography: homography.clone(),
        is_real,
        restarts_used,
    }
}
