use num_complex::Complex64;

use crate::arrangement::{ArrangementOrbifold, Homography};

/// A degree-`n` rational normal curve `t ↦ (b_j (t + a_j)^n)_j` in
/// standardized coordinates, together with its image in the original
/// coordinates of the arrangement.
#[derive(Clone, Debug)]
pub struct RncSolution {
    pub n: usize,
    /// Solution of `u = Ψ(y)`.
    pub y: Vec<Complex64>,
    /// `a_0 = 1`, `a_j = 1/y_j`.
    pub a: Vec<Complex64>,
    /// Standardized coordinates of the target point.
    pub b: Vec<Complex64>,
    /// `Σ b_j`, the leading coefficient of `Σ b_j (t + a_j)^n`.
    pub leading_coefficient: Complex64,
    /// Coefficients of `b_j (t + a_j)^n`, ascending powers of `t`.
    pub standardized_polynomials: Vec<Vec<Complex64>>,
    /// The same curve in the arrangement's own coordinates.
    pub polynomials: Vec<Vec<Complex64>>,
    /// Homography taking the arrangement to standard position.
    pub homography: Homography,
    pub residual_report: f64,
    pub is_real: bool,
    /// Number of randomized restarts consumed (0 when the first path
    /// succeeded).
    pub restarts_used: usize,
}

fn binomials(n: usize) -> Vec<f64> {
    let mut row = vec![1.0f64; n + 1];
    for i in 1..n {
        row[i] = row[i - 1] * (n - i + 1) as f64 / i as f64;
    }
    row
}

/// Coefficients of `b (t + a)^n` in ascending powers of `t`.
pub fn power_polynomial(b: Complex64, a: Complex64, n: usize) -> Vec<Complex64> {
    let binom = binomials(n);
    (0..=n).map(|i| b * binom[i] * a.powi((n - i) as i32)).collect()
}

pub(crate) fn apply_matrix(m: &[Vec<f64>], polys: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let len = polys.first().map_or(0, Vec::len);
    m.iter()
        .map(|row| {
            (0..len)
                .map(|i| row.iter().zip(polys).map(|(&c, p)| p[i] * c).sum())
                .collect()
        })
        .collect()
}

fn max_norm(v: impl IntoIterator<Item = Complex64>) -> f64 {
    v.into_iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest `|coefficient of t^i|`, `i < n`, of `Σ b_j (t + a_j)^n`, relative
/// to the largest coefficient among the coordinate polynomials.
pub fn low_order_residual(a: &[Complex64], b: &[Complex64]) -> f64 {
    let n = a.len() - 1;
    let polys: Vec<Vec<Complex64>> = a.iter().zip(b).map(|(&aj, &bj)| power_polynomial(bj, aj, n)).collect();
    let scale = max_norm(polys.iter().flatten().copied());
    let low = max_norm((0..n).map(|i| polys.iter().map(|p| p[i]).sum::<Complex64>()));
    if scale == 0.0 {
        f64::INFINITY
    } else {
        low / scale
    }
}

/// Projective distance `max |p_i q_j - p_j q_i| / (|p| |q|)`.
fn projective_distance(p: &[Complex64], q: &[Complex64]) -> f64 {
    let (np, nq) = (max_norm(p.iter().copied()), max_norm(q.iter().copied()));
    if np == 0.0 || nq == 0.0 {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            worst = worst.max((p[i] * q[j] - p[j] * q[i]).norm() / (np * nq));
        }
    }
    worst
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub pass: bool,
    pub tolerance: f64,
    /// (i) low-order coefficients of `Σ b_j (t + a_j)^n`.
    pub low_order_residual: f64,
    pub low_order_ok: bool,
    /// (ii) `|Σ b_j| / max |b_j|`.
    pub leading_ratio: f64,
    pub leading_ok: bool,
    /// (iii) stored coordinate polynomials vs. `b_j (t + a_j)^n`, plus
    /// distinctness of the `a_j`.
    pub structure_error: f64,
    pub structure_ok: bool,
    /// (iv) point at `t = ∞` vs. the target, projectively.
    pub limit_point_error: f64,
    pub limit_point_ok: bool,
    /// Each hyperplane of the given arrangement restricted to the curve is
    /// a pure `n`-th power: `(t + a_j)^n` for the first `n+1`, `t^n` for the
    /// last.
    pub contact_error: f64,
    pub contact_ok: bool,
}

fn relative_poly_error(got: &[Complex64], expected: &[Complex64]) -> f64 {
    let scale = max_norm(expected.iter().copied()).max(max_norm(got.iter().copied()));
    if scale == 0.0 {
        return f64::INFINITY;
    }
    max_norm(got.iter().zip(expected).map(|(g, e)| g - e)) / scale
}

pub fn verify_rnc(s: &RncSolution, arr: &ArrangementOrbifold, p: &[Complex64], tol: f64) -> VerificationReport {
    let n = s.n;
    let shape_ok = s.a.len() == n + 1
        && s.b.len() == n + 1
        && s.standardized_polynomials.len() == n + 1
        && s.polynomials.len() == n + 1
        && s.polynomials.iter().chain(&s.standardized_polynomials).all(|p| p.len() == n + 1)
        && p.len() == n + 1
        && arr.n() as usize == n
        && arr.len() == n + 2;
    if !shape_ok {
        return VerificationReport {
            pass: false,
            tolerance: tol,
            low_order_residual: f64::INFINITY,
            low_order_ok: false,
            leading_ratio: 0.0,
            leading_ok: false,
            structure_error: f64::INFINITY,
            structure_ok: false,
            limit_point_error: f64::INFINITY,
            limit_point_ok: false,
            contact_error: f64::INFINITY,
            contact_ok: false,
        };
    }

    let low_order_residual = low_order_residual(&s.a, &s.b);
    let low_order_ok = low_order_residual <= tol;

    let sum_b: Complex64 = s.b.iter().sum();
    let max_b = max_norm(s.b.iter().copied());
    let leading_ratio = if max_b == 0.0 { 0.0 } else { sum_b.norm() / max_b };
    let leading_ok = leading_ratio > tol;

    let mut structure_error = s
        .a
        .iter()
        .zip(&s.b)
        .zip(&s.standardized_polynomials)
        .map(|((&aj, &bj), poly)| relative_poly_error(poly, &power_polynomial(bj, aj, n)))
        .fold(0.0, f64::max);
    let a_scale = max_norm(s.a.iter().copied());
    let mut min_gap = f64::INFINITY;
    for i in 0..=n {
        min_gap = min_gap.min(s.a[i].norm());
        for j in i + 1..=n {
            min_gap = min_gap.min((s.a[i] - s.a[j]).norm());
        }
    }
    if !(min_gap > tol * a_scale) {
        structure_error = f64::INFINITY;
    }
    let structure_ok = structure_error <= tol;

    let limit: Vec<Complex64> = s.polynomials.iter().map(|poly| poly[n]).collect();
    let limit_point_error = projective_distance(&limit, p);
    let limit_point_ok = limit_point_error <= tol;

    let curve_scale = max_norm(s.polynomials.iter().flatten().copied());
    let mut contact_error = 0.0f64;
    for (j, l) in arr.hyperplanes().iter().enumerate() {
        let lf: Vec<f64> = l.iter().map(|x| x.to_f64()).collect();
        let restricted = &apply_matrix(&[lf.clone()], &s.polynomials)[0];
        let lead = restricted[n];
        let shift = if j <= n { s.a[j] } else { Complex64::new(0.0, 0.0) };
        let expected = power_polynomial(lead, shift, n);
        let scale = lf.iter().map(|x| x.abs()).sum::<f64>() * curve_scale;
        let err = max_norm(restricted.iter().zip(&expected).map(|(g, e)| g - e)) / scale;
        contact_error = contact_error.max(if scale > 0.0 { err } else { f64::INFINITY });
    }
    let contact_ok = contact_error <= tol;

    VerificationReport {
        pass: low_order_ok && leading_ok && structure_ok && limit_point_ok && contact_ok,
        tolerance: tol,
        low_order_residual,
        low_order_ok,
        leading_ratio,
        leading_ok,
        structure_error,
        structure_ok,
        limit_point_error,
        limit_point_ok,
        contact_error,
        contact_ok,
    }
}
