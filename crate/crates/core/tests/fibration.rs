use orbicurve::fibration::{canonical_power_exponents, symdiff_generators};
use orbicurve::{base_multiplicity, orbifold_base, BaseDivisorRecord, ExtRational, FiberComponentData, Multiplicity, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_mult(rng: &mut ChaCha8Rng) -> Multiplicity {
    match rng.random_range(0..10) {
        0 => Multiplicity::infinite(),
        1..=2 => Multiplicity::new(Rational::new(rng.random_range(2..30), rng.random_range(1..7)) + Rational::one()).unwrap(),
        _ => Multiplicity::integer(rng.random_range(1..20)).unwrap(),
    }
}

/// `t·m` with `∞` as `None`, compared by hand.
fn naive_min(cs: &[FiberComponentData]) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    let mut all_inf = true;
    for c in cs {
        if let Some(m) = c.m_delta.finite() {
            all_inf = false;
            let v = m * &Rational::from(c.t);
            if best.as_ref().is_none_or(|b| &v < b) {
                best = Some(v);
            }
        }
    }
    if all_inf { None } else { best }
}

#[test]
fn base_multiplicity_against_direct_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let k = rng.random_range(1..6);
        let cs: Vec<FiberComponentData> =
            (0..k).map(|_| FiberComponentData::new(rng.random_range(1..12), random_mult(&mut rng)).unwrap()).collect();
        let got = base_multiplicity(&BaseDivisorRecord::new("E", cs.clone()).unwrap());
        match naive_min(&cs) {
            Some(v) => assert_eq!(got.value(), &ExtRational::Finite(v)),
            None => assert!(got.is_infinite()),
        }
    }
}

#[test]
fn orbifold_base_drops_trivial_and_stays_in_unit_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let recs: Vec<BaseDivisorRecord> = (0..rng.random_range(0..6))
            .map(|i| {
                let cs = (0..rng.random_range(1..4))
                    .map(|_| FiberComponentData::new(rng.random_range(1..3), random_mult(&mut rng)).unwrap())
                    .collect();
                BaseDivisorRecord::new(format!("E{i}"), cs).unwrap()
            })
            .collect();
        let out = orbifold_base(&recs).unwrap();
        let expected: Vec<(String, Rational)> = recs
            .iter()
            .filter_map(|r| {
                let c = match naive_min(&r.components) {
                    Some(v) => Rational::one() - v.recip(),
                    None => Rational::one(),
                };
                (!c.is_zero()).then(|| (r.label.clone(), c))
            })
            .collect();
        assert_eq!(out, expected);
        assert!(out.iter().all(|(_, c)| c.is_positive() && c <= &Rational::one()));
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn coefficients() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((0i64..=12, 1i64..=12), 1..5)
        .prop_map(|v| v.into_iter().map(|(p, q)| Rational::new(p.min(q), q)).collect())
}

proptest! {
    #[test]
    fn generator_count_is_multiset_coefficient(a in coefficients(), m in 0u64..9) {
        let n = a.len() as u64;
        let g = symdiff_generators(&a, m).unwrap();
        prop_assert_eq!(g.len() as u64, binomial(m + n - 1, n - 1));
        prop_assert!(g.windows(2).all(|w| w[0].exponents > w[1].exponents));
        prop_assert!(g.iter().all(|x| x.exponents.iter().sum::<u64>() == m));
    }

    #[test]
    fn floor_superadditivity(a in coefficients(), m1 in 0u64..6, m2 in 0u64..6, pick1 in any::<prop::sample::Index>(), pick2 in any::<prop::sample::Index>()) {
        let g1 = symdiff_generators(&a, m1).unwrap();
        let g2 = symdiff_generators(&a, m2).unwrap();
        let x = &g1[pick1.index(g1.len())];
        let y = &g2[pick2.index(g2.len())];
        let sum: Vec<u64> = x.exponents.iter().zip(&y.exponents).map(|(p, q)| p + q).collect();
        let g12 = symdiff_generators(&a, m1 + m2).unwrap();
        let z = g12.iter().find(|g| g.exponents == sum).unwrap();
        for j in 0..a.len() {
            prop_assert!(z.denominators[j] >= x.denominators[j] + y.denominators[j]);
        }
    }

    #[test]
    fn base_multiplicity_monotone(
        ts in proptest::collection::vec(1u64..10, 1..5),
        ms in proptest::collection::vec(1u64..10, 5),
        bump in 0usize..5,
        extra_t in 1u64..10,
        extra_m in 1u64..10,
    ) {
        let cs: Vec<FiberComponentData> = ts.iter().zip(&ms)
            .map(|(&t, &m)| FiberComponentData::new(t, Multiplicity::integer(m).unwrap()).unwrap())
            .collect();
        let base = base_multiplicity(&BaseDivisorRecord::new("E", cs.clone()).unwrap());
        let mut raised = cs.clone();
        let i = bump % raised.len();
        raised[i].t += 1;
        prop_assert!(base_multiplicity(&BaseDivisorRecord::new("E", raised).unwrap()) >= base);
        let mut more = cs;
        more.push(FiberComponentData::new(extra_t, Multiplicity::integer(extra_m).unwrap()).unwrap());
        prop_assert!(base_multiplicity(&BaseDivisorRecord::new("E", more).unwrap()) <= base);
    }

    #[test]
    fn canonical_exponents_are_top_degree_denominators(a in coefficients(), m in 1u64..12) {
        let e = canonical_power_exponents(&a, m).unwrap();
        for (j, aj) in a.iter().enumerate() {
            let mut single = vec![Rational::zero(); a.len()];
            single[j] = aj.clone();
            let g = symdiff_generators(&single, m).unwrap();
            let top = g.iter().find(|g| g.exponents[j] == m).unwrap();
            prop_assert_eq!(top.denominators[j], e[j]);
        }
    }
}
