//! The worked examples, regenerated from scratch.

use anyhow::Result;
use num_complex::Complex64;
use orbicurve::curves::{curve_kind, enumerate_exceptional_p3, rnc_curve, uniruledness_verdict};
use orbicurve::enumfrac::{bound_bn_search, deficit_denominator, sylvester_extend, UnitFractionTuple};
use orbicurve::rnc::{solve_rnc_rational, verify_rnc, SolverConfig};
use orbicurve::{canonical_degree, classify, ArrangementOrbifold, Multiplicity, OrbifoldType, Rational};
use serde_json::{json, Value};

use crate::commands::{arrangement_json, rational, rnc_json, verdict_json};

fn sylvester_row(start: &[u64], steps: usize) -> Result<Value> {
    let full = sylvester_extend(&UnitFractionTuple::new(start.to_vec())?, steps)?;
    let deficits: Vec<String> = (start.len()..=full.len())
        .map(|k| {
            let prefix = UnitFractionTuple::new(full.terms()[..k].to_vec()).expect("terms >= 2");
            deficit_denominator(&prefix.sum()).map_or_else(|| "none".into(), |b| b.to_string())
        })
        .collect();
    Ok(json!({"start": start, "sequence": full.terms(), "deficit_denominators": deficits}))
}

fn rnc_instance(n: u32, last: &[i64], point: &[i64], seed: u64) -> Result<Value> {
    let dim = n as usize + 1;
    let mut hyperplanes: Vec<Vec<Rational>> =
        (0..dim).map(|i| (0..dim).map(|j| Rational::from((i == j) as i64)).collect()).collect();
    hyperplanes.push(last.iter().map(|&x| Rational::from(x)).collect());
    let arr = ArrangementOrbifold::new(n, hyperplanes, vec![Multiplicity::integer(n as u64)?; dim + 1])?;
    let p: Vec<Rational> = point.iter().map(|&x| Rational::from(x)).collect();
    let cfg = SolverConfig { rng_seed: seed, ..SolverConfig::default() };
    let sol = solve_rnc_rational(&arr, &p, &cfg)?;
    let pc: Vec<Complex64> = p.iter().map(|x| Complex64::new(x.to_f64(), 0.0)).collect();
    let report = verify_rnc(&sol, &arr, &pc, 1e-8);
    Ok(json!({
        "arrangement": arrangement_json(&arr),
        "point": point,
        "solution": rnc_json(&sol, &report),
    }))
}

pub fn paper_tables(seed: u64) -> Result<Value> {
    let sylvester = vec![sylvester_row(&[2], 4)?, sylvester_row(&[3, 3], 3)?, sylvester_row(&[4, 4, 4], 3)?];

    let bounds = (1..=4)
        .map(|n| {
            let s = bound_bn_search(n, 4)?;
            Ok(json!({"n": n, "bound": rational(&s.bound), "maximizer": s.maximizer.terms()}))
        })
        .collect::<Result<Vec<_>>>()?;

    let census = enumerate_exceptional_p3();
    let typical = OrbifoldType::integral(3, &[2, 3, 7, 43, 1805])?;
    let rnc_provable = OrbifoldType::integral(3, &[3, 3, 4, 13, 155])?;
    let family = census.families.iter().find(|f| f.prefix == [2, 3, 7, 42]).map(|f| f.min_tail);
    let census_summary = json!({
        "sporadic_count": census.sporadic.len(),
        "family_count": census.families.len(),
        "largest_sporadic": census.sporadic.iter().filter_map(|t| t.integer_mults()).max_by_key(|m| m[4]),
        "contains_2_3_7_43_1805": census.contains(&typical),
        "family_2_3_7_42_min_tail": family,
        "contains_3_3_4_13_155": census.contains(&rnc_provable),
        "verdict_3_3_4_13_155": verdict_json(&uniruledness_verdict(&rnc_provable)?),
    });

    let classification = [[2u64, 3, 7, 41], [2, 3, 7, 42], [2, 3, 7, 43]]
        .iter()
        .map(|ms| {
            let t = OrbifoldType::integral(2, ms)?;
            Ok(json!({
                "type": ms,
                "classification": classify(&t).as_str(),
                "canonical_degree": rational(&canonical_degree(&t)),
            }))
        })
        .collect::<Result<Vec<_>>>()?;

    let conic_type = OrbifoldType::integral(2, &[2, 3, 7, 41])?;
    let conic = curve_kind(&rnc_curve(&conic_type)?, &conic_type, false)?;

    let rnc = vec![
        rnc_instance(2, &[1, 2, 3], &[1, 1, 1], seed)?,
        rnc_instance(3, &[1, -1, 2, 1], &[1, 2, 3, 5], seed)?,
    ];

    Ok(json!({
        "seed": seed,
        "sylvester": sylvester,
        "bound_bn": bounds,
        "census_p3": census_summary,
        "classification_p2": classification,
        "conic_2_3_7_41": {"kind": conic.kind.as_str(), "degree": rational(&conic.degree)},
        "rnc": rnc,
    }))
}
