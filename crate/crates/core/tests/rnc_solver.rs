use num_complex::Complex64;
use orbicurve::rnc::{solve_rnc, solve_rnc_rational, verify_rnc, SolverConfig};
use orbicurve::{is_general_position, standardize, ArrangementOrbifold, Error, Multiplicity, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_arrangement(n: usize, rng: &mut ChaCha8Rng) -> ArrangementOrbifold {
    loop {
        let hs: Vec<Vec<Rational>> = (0..n + 2)
            .map(|_| (0..=n).map(|_| Rational::from(rng.random_range(-6i64..=6))).collect())
            .collect();
        let mults = vec![Multiplicity::integer(n as u64).unwrap(); n + 2];
        if let Ok(a) = ArrangementOrbifold::new(n as u32, hs, mults) {
            if is_general_position(&a) {
                return a;
            }
        }
    }
}

/// Point at `t = ∞` of the curve with translation parameters `a`
/// (`a_0 = 1`) in the original coordinates of `arr`.
fn forward_point(arr: &ArrangementOrbifold, a: &[Complex64]) -> Vec<Complex64> {
    let b: Vec<Complex64> = (0..a.len())
        .map(|j| {
            (0..a.len())
                .filter(|&h| h != j)
                .map(|h| a[h] / (a[h] - a[j]))
                .product()
        })
        .collect();
    let (t, _) = standardize(arr).unwrap();
    let tinv = t.inverse().to_f64();
    tinv.iter().map(|row| row.iter().zip(&b).map(|(&m, x)| x * m).sum()).collect()
}

fn random_a(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut a = vec![c(1.0, 0.0)];
    while a.len() <= n {
        let z = Complex64::from_polar(rng.random_range(0.3..3.0), rng.random_range(0.0..std::f64::consts::TAU));
        if a.iter().all(|w| (w - z).norm() > 0.2) {
            a.push(z);
        }
    }
    a
}

#[test]
fn forward_instances_solve_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        let mut pass = 0;
        let mut restarts = 0;
        for _ in 0..30 {
            let arr = random_arrangement(n, &mut rng);
            let p = forward_point(&arr, &random_a(n, &mut rng));
            match solve_rnc(&arr, &p, &SolverConfig::default()) {
                Ok(s) => {
                    assert!(verify_rnc(&s, &arr, &p, 1e-8).pass);
                    restarts += s.restarts_used;
                    pass += 1;
                }
                Err(e) => eprintln!("n={n}: {e}"),
            }
        }
        eprintln!("n={n}: {pass}/30, restarts {restarts}");
        assert!(pass >= 28, "n={n}: {pass}/30");
    }
}

#[test]
fn standard_conic_through_center() {
    let arr = ArrangementOrbifold::standard(2, vec![Multiplicity::integer(2).unwrap(); 4]).unwrap();
    let p = [Rational::one(), Rational::one(), Rational::one()];
    let s = solve_rnc_rational(&arr, &p, &SolverConfig::default()).unwrap();
    let pc: Vec<Complex64> = p.iter().map(|x| c(x.to_f64(), 0.0)).collect();
    let r = verify_rnc(&s, &arr, &pc, 1e-8);
    assert!(r.pass, "{r:?}");
}

#[test]
fn point_on_arrangement_rejected() {
    let arr = ArrangementOrbifold::standard(2, vec![Multiplicity::integer(2).unwrap(); 4]).unwrap();
    let p = [Rational::zero(), Rational::one(), Rational::from(2i64)];
    assert_eq!(solve_rnc_rational(&arr, &p, &SolverConfig::default()).unwrap_err(), Error::PointOnArrangement(0));
    let p = [Rational::one(), Rational::one(), Rational::from(-2i64)];
    assert_eq!(solve_rnc_rational(&arr, &p, &SolverConfig::default()).unwrap_err(), Error::PointOnArrangement(3));
}

#[test]
#[ignore]
fn stress() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 2..=5 {
        let (mut pass, mut restarts, mut random_pass) = (0, 0, 0);
        let t = std::time::Instant::now();
        for _ in 0..200 {
            let arr = random_arrangement(n, &mut rng);
            let p = forward_point(&arr, &random_a(n, &mut rng));
            if let Ok(s) = solve_rnc(&arr, &p, &SolverConfig::default()) {
                pass += 1;
                restarts += s.restarts_used;
            }
            let q: Vec<Complex64> = (0..=n).map(|_| c(rng.random_range(-5.0..5.0), 0.0)).collect();
            if solve_rnc(&arr, &q, &SolverConfig::default()).is_ok() {
                random_pass += 1;
            }
        }
        eprintln!("n={n}: forward {pass}/200 restarts {restarts}, random real {random_pass}/200, {:?}", t.elapsed());
    }
}
