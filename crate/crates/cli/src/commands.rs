use anyhow::{bail, Result};
use num_complex::Complex64;
use orbicurve::curves::{curve_kind, enumerate_exceptional_p3, uniruledness_verdict, CurveKindReport, ExceptionalCensus};
use orbicurve::enumfrac::{bound_bn_search, subunit_prefixes, superunit_tuples, sylvester_extend, UnitFractionTuple};
use orbicurve::fibration::{canonical_power_exponents, orbifold_base, symdiff_generators};
use orbicurve::rnc::{solve_rnc, solve_rnc_rational, verify_rnc, RncSolution, SolverConfig, VerificationReport};
use orbicurve::{classify, ArrangementOrbifold, Rational, UniruledVerdict};
use serde_json::{json, Value};

use crate::args::{Command, EnumerateKind};
use crate::input::{self, Point};
use crate::tables;

pub fn dispatch(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Classify { n, type_ } => {
            let t = input::orbifold_type(n, &type_)?;
            Ok(json!(classify(&t).as_str()))
        }
        Command::Enumerate { kind, len, cap } => {
            if cap > 10_000 {
                bail!("cap {cap} is too large (at most 10000)");
            }
            let tuples = match kind {
                EnumerateKind::Subunit => subunit_prefixes(len, cap),
                EnumerateKind::Fano => superunit_tuples(len, cap),
            };
            Ok(Value::Array(tuples.iter().map(|t| json!(t.terms())).collect()))
        }
        Command::Sylvester { start, steps } => {
            let start = UnitFractionTuple::new(input::u64_list(&start)?)?;
            Ok(json!(sylvester_extend(&start, steps)?.terms()))
        }
        Command::BoundBn { n, limit } => {
            let s = bound_bn_search(n, limit)?;
            Ok(json!({"n": n, "bound": s.bound.to_string(), "maximizer": s.maximizer.terms()}))
        }
        Command::CurveCheck { n, type_, curve, virtual_ } => {
            let t = input::orbifold_type(n, &type_)?;
            let c = input::marked_curve(&input::read_json(&curve)?)?;
            Ok(curve_report_json(&curve_kind(&c, &t, virtual_)?))
        }
        Command::Uniruled { n, type_ } => {
            let t = input::orbifold_type(n, &type_)?;
            Ok(verdict_json(&uniruledness_verdict(&t)?))
        }
        Command::Census => Ok(census_json(&enumerate_exceptional_p3())),
        Command::RncSolve { arrangement, point, seed, tol, max_restarts } => {
            let arr = input::arrangement(&input::read_json(&arrangement)?)?;
            let mut cfg = SolverConfig { rng_seed: seed, verify_tolerance: tol, ..SolverConfig::default() };
            if let Some(r) = max_restarts {
                cfg.max_restarts = r;
            }
            let (sol, p) = match input::point(&point)? {
                Point::Exact(p) => {
                    let pc = p.iter().map(|x| Complex64::new(x.to_f64(), 0.0)).collect();
                    (solve_rnc_rational(&arr, &p, &cfg)?, pc)
                }
                Point::Float(p) => (solve_rnc(&arr, &p, &cfg)?, p),
            };
            let report = verify_rnc(&sol, &arr, &p, tol);
            Ok(rnc_json(&sol, &report))
        }
        Command::OrbifoldBase { input: path } => {
            let records = input::base_records(&input::read_json(&path)?)?;
            let out = orbifold_base(&records)?;
            Ok(Value::Array(
                out.into_iter().map(|(label, c)| json!({"label": label, "coefficient": c.to_string()})).collect(),
            ))
        }
        Command::Symdiff { coeffs, m, canonical } => {
            let a = input::rational_list(&coeffs)?;
            if canonical {
                return Ok(json!(canonical_power_exponents(&a, m)?));
            }
            let gens = symdiff_generators(&a, m)?;
            Ok(Value::Array(
                gens.iter().map(|g| json!({"exponents": g.exponents, "denominators": g.denominators})).collect(),
            ))
        }
        Command::PaperTables { seed } => tables::paper_tables(seed),
    }
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn float(x: f64) -> Value {
    json!(format!("{x:.16e}"))
}

pub fn complex(z: Complex64) -> Value {
    json!({"re": format!("{:.16e}", z.re), "im": format!("{:.16e}", z.im)})
}

fn complex_list(v: &[Complex64]) -> Value {
    Value::Array(v.iter().map(|&z| complex(z)).collect())
}

pub fn rational(r: &Rational) -> Value {
    json!(r.to_string())
}

pub fn curve_report_json(r: &CurveKindReport) -> Value {
    json!({
        "kind": r.kind.as_str(),
        "degree": rational(&r.degree),
        "divisor": r.divisor.points.iter().map(|(p, m)| json!({"point": p, "multiplicity": m.to_string()})).collect::<Vec<_>>(),
    })
}

pub fn verdict_json(v: &UniruledVerdict) -> Value {
    match v.method() {
        Some(m) => json!({"status": v.status(), "method": m.as_str()}),
        None => json!({"status": v.status()}),
    }
}

pub fn census_json(c: &ExceptionalCensus) -> Value {
    json!({
        "sporadic_count": c.sporadic.len(),
        "family_count": c.families.len(),
        "sporadic": c.sporadic.iter().map(|t| json!(t.integer_mults())).collect::<Vec<_>>(),
        "families": c.families.iter().map(|f| json!({"prefix": f.prefix, "min_tail": f.min_tail})).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "verdict": if r.pass { "PASS" } else { "FAIL" },
        "tolerance": float(r.tolerance),
        "low_order_residual": float(r.low_order_residual),
        "leading_ratio": float(r.leading_ratio),
        "structure_error": float(r.structure_error),
        "limit_point_error": float(r.limit_point_error),
        "contact_error": float(r.contact_error),
    })
}

pub fn rnc_json(s: &RncSolution, r: &VerificationReport) -> Value {
    json!({
        "n": s.n,
        "a": complex_list(&s.a),
        "b": complex_list(&s.b),
        "leading_coefficient": complex(s.leading_coefficient),
        "polynomials": s.polynomials.iter().map(|p| complex_list(p)).collect::<Vec<_>>(),
        "standardized_polynomials": s.standardized_polynomials.iter().map(|p| complex_list(p)).collect::<Vec<_>>(),
        "homography": s.homography.matrix().iter().map(|row| row.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "residual": float(s.residual_report),
        "is_real": s.is_real,
        "restarts_used": s.restarts_used,
        "verification": report_json(r),
    })
}

pub fn arrangement_json(a: &ArrangementOrbifold) -> Value {
    json!({
        "n": a.n(),
        "hyperplanes": a.hyperplanes().iter().map(|h| h.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "mults": a.mults().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    })
}
