use num_complex::Complex64;
use orbicurve::rnc::{
    hierarchical_seed, log_derivative_jacobian, phi_jacobian, phi_map, scaled_log_jacobian, verify_rnc,
    power_polynomial, RncSolution,
};
use orbicurve::{ArrangementOrbifold, Homography, Multiplicity};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_y(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let one = c(1.0, 0.0);
    let mut y: Vec<Complex64> = Vec::new();
    while y.len() < n {
        let z = Complex64::from_polar(rng.random_range(0.1..3.0), rng.random_range(0.0..std::f64::consts::TAU));
        if (z - one).norm() > 0.1 && y.iter().all(|w| (w - z).norm() > 0.1) {
            y.push(z);
        }
    }
    y
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[test]
fn jacobian_matches_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5 {
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let y = random_y(n, &mut rng);
            let j = phi_jacobian(&y).unwrap();
            let scale = j.iter().map(|z| z.norm()).fold(0.0, f64::max);
            for k in 0..n {
                let h = 1e-5 * y[k].norm();
                let (mut yp, mut ym) = (y.clone(), y.clone());
                yp[k] += h;
                ym[k] -= h;
                let (up, um) = (phi_map(&yp).unwrap(), phi_map(&ym).unwrap());
                for i in 0..n {
                    let fd = (up[i] - um[i]) / (2.0 * h);
                    worst = worst.max((fd - j[(i, k)]).norm() / scale);
                }
            }
        }
        assert!(worst < 1e-6, "n={n}: {worst:e}");
    }
}

#[test]
fn log_jacobian_is_consistent_with_phi_jacobian() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 2..=5 {
        let y = random_y(n, &mut rng);
        let u = phi_map(&y).unwrap();
        let j = phi_jacobian(&y).unwrap();
        let k = log_derivative_jacobian(&y).unwrap();
        for a in 0..n {
            for b in 0..n {
                assert!((j[(a, b)] / u[a] - k[(a, b)]).norm() <= 1e-12 * k[(a, b)].norm().max(1.0));
            }
        }
    }
}

#[test]
fn seed_determinant_is_near_factorial() {
    for n in 1..=5 {
        let y = hierarchical_seed(n, 1e3);
        let prod: Complex64 = y.iter().product();
        let det = log_derivative_jacobian(&y).unwrap().determinant() * prod;
        let rel = (det - factorial(n)).norm() / factorial(n);
        assert!(rel < 0.05, "n={n}: {rel}");
        let det_l = scaled_log_jacobian(&y).unwrap().determinant();
        assert!((det_l - det).norm() <= 1e-9 * factorial(n));
    }
}

/// `p_j = Π_{h≠j} a_h / (a_h - a_j)`.
fn forward(a: &[Complex64]) -> Vec<Complex64> {
    (0..a.len())
        .map(|j| (0..a.len()).filter(|&h| h != j).map(|h| a[h] / (a[h] - a[j])).product())
        .collect()
}

#[test]
fn forward_map_scale_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=6 {
        for _ in 0..50 {
            let a: Vec<Complex64> = std::iter::once(c(1.0, 0.0)).chain(random_y(n, &mut rng)).collect();
            let lambda = Complex64::from_polar(rng.random_range(0.2..5.0), rng.random_range(0.0..6.28));
            let p = forward(&a);
            let q = forward(&a.iter().map(|x| x * lambda).collect::<Vec<_>>());
            for (x, y) in p.iter().zip(&q) {
                assert!((x - y).norm() <= 1e-12 * x.norm().max(1.0));
            }
        }
    }
}

/// The forward point is `(1 : u_1 : … : u_n)` for `y_j = 1/a_j`.
#[test]
fn forward_map_inverts_phi() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in 1..=5 {
        for _ in 0..50 {
            let y = random_y(n, &mut rng);
            let a: Vec<Complex64> = std::iter::once(c(1.0, 0.0)).chain(y.iter().map(|y| y.inv())).collect();
            let p = forward(&a);
            let u = phi_map(&y).unwrap();
            for j in 0..n {
                let expected = p[j + 1] / p[0];
                assert!((u[j] - expected).norm() <= 1e-10 * expected.norm().max(1.0), "n={n}");
            }
        }
    }
}

fn standard_solution(n: usize, a: Vec<Complex64>, b: Vec<Complex64>) -> RncSolution {
    let polys: Vec<Vec<Complex64>> = a.iter().zip(&b).map(|(&aj, &bj)| power_polynomial(bj, aj, n)).collect();
    RncSolution {
        n,
        y: a[1..].iter().map(|x| x.inv()).collect(),
        leading_coefficient: b.iter().sum(),
        a,
        b,
        standardized_polynomials: polys.clone(),
        polynomials: polys,
        homography: Homography::identity(n + 1),
        residual_report: 0.0,
        is_real: true,
        restarts_used: 0,
    }
}

#[test]
fn verify_exact_line() {
    let arr = ArrangementOrbifold::standard(1, vec![Multiplicity::integer(2).unwrap(); 3]).unwrap();
    let s = standard_solution(1, vec![c(1.0, 0.0), c(-1.0, 0.0)], vec![c(1.0, 0.0), c(1.0, 0.0)]);
    let r = verify_rnc(&s, &arr, &[c(1.0, 0.0), c(1.0, 0.0)], 1e-12);
    assert!(r.pass, "{r:?}");
    assert_eq!(r.low_order_residual, 0.0);
    assert!(!verify_rnc(&s, &arr, &[c(1.0, 0.0), c(2.0, 0.0)], 1e-8).limit_point_ok);
}

#[test]
fn verify_rejects_perturbed_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in 2..=4 {
        let arr = ArrangementOrbifold::standard(n as u32, vec![Multiplicity::integer(3).unwrap(); n + 2]).unwrap();
        let y = random_y(n, &mut rng);
        let a: Vec<Complex64> = std::iter::once(c(1.0, 0.0)).chain(y.iter().map(|y| y.inv())).collect();
        let b = forward(&a);
        let good = standard_solution(n, a.clone(), b.clone());
        assert!(verify_rnc(&good, &arr, &b, 1e-8).pass);
        let mut bad_a = a;
        bad_a[1] += 1e-3;
        let bad = standard_solution(n, bad_a, b.clone());
        let r = verify_rnc(&bad, &arr, &b, 1e-8);
        assert!(!r.pass && !r.low_order_ok, "{r:?}");
    }
}

/// Not only at the seed: `det(y_k/u_j ∂u_j/∂y_k) = n!` everywhere.
#[test]
fn scaled_log_jacobian_determinant_is_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for n in 1..=6 {
        for _ in 0..100 {
            let det = scaled_log_jacobian(&random_y(n, &mut rng)).unwrap().determinant();
            assert!((det - factorial(n)).norm() <= 1e-9 * factorial(n), "n={n}: {det}");
        }
    }
}
