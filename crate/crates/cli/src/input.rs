//! Parsing of command-line lists and JSON input files.

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use orbicurve::fibration::{BaseDivisorRecord, FiberComponentData};
use orbicurve::multiplicity::parse_list;
use orbicurve::{ArrangementOrbifold, ContactRecord, MarkedCurve, Multiplicity, OrbifoldType, Rational};
use serde_json::Value;

pub fn orbifold_type(n: u32, list: &str) -> Result<OrbifoldType> {
    Ok(OrbifoldType::new(n, parse_list(list)?)?)
}

pub fn u64_list(list: &str) -> Result<Vec<u64>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<u64>().with_context(|| format!("not a nonnegative integer: {s:?}")))
        .collect()
}

pub fn rational_list(list: &str) -> Result<Vec<Rational>> {
    list.split(',').map(|s| Ok(s.parse::<Rational>()?)).collect()
}

pub fn read_json(path: &str) -> Result<Value> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {path}"))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| anyhow!("missing field {key:?}"))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| anyhow!("{what} must be a nonnegative integer, got {v}"))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| anyhow!("{what} must be an array, got {v}"))
}

/// Integers, or strings holding an integer, `p/q` or `inf`.
fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => bail!("expected an integer or a string, got {other}"),
    }
}

fn multiplicity(v: &Value) -> Result<Multiplicity> {
    Ok(scalar_text(v)?.parse()?)
}

pub fn marked_curve(v: &Value) -> Result<MarkedCurve> {
    let genus = as_u64(field(v, "genus")?, "genus")?;
    let genus = u32::try_from(genus).context("genus too large")?;
    let records = as_array(field(v, "contacts")?, "contacts")?
        .iter()
        .map(|c| {
            let point = field(c, "point")?.as_str().ok_or_else(|| anyhow!("point must be a string"))?;
            let pairs = as_array(field(c, "pairs")?, "pairs")?
                .iter()
                .map(|p| match p.as_array().map(Vec::as_slice) {
                    Some([j, t]) => Ok((as_u64(j, "divisor index")? as usize, as_u64(t, "contact order")?)),
                    _ => bail!("each pair must be [j, t], got {p}"),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ContactRecord::new(point, pairs)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MarkedCurve::new(genus, records)?)
}

pub fn arrangement(v: &Value) -> Result<ArrangementOrbifold> {
    let n = as_u64(field(v, "n")?, "n")?;
    let n = u32::try_from(n).context("n too large")?;
    let hyperplanes = as_array(field(v, "hyperplanes")?, "hyperplanes")?
        .iter()
        .map(|h| {
            as_array(h, "hyperplane")?
                .iter()
                .map(|x| Ok(scalar_text(x)?.parse::<Rational>()?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mults = as_array(field(v, "mults")?, "mults")?.iter().map(multiplicity).collect::<Result<Vec<_>>>()?;
    Ok(ArrangementOrbifold::new(n, hyperplanes, mults)?)
}

pub enum Point {
    Exact(Vec<Rational>),
    Float(Vec<Complex64>),
}

/// `p0:p1:...`; entries are rationals, or decimals when any entry is not.
pub fn point(s: &str) -> Result<Point> {
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    if let Ok(exact) = parts.iter().map(|p| p.parse::<Rational>()).collect::<Result<Vec<_>, _>>() {
        return Ok(Point::Exact(exact));
    }
    let floats = parts
        .iter()
        .map(|p| {
            let x: f64 = p.parse().with_context(|| format!("bad coordinate {p:?}"))?;
            anyhow::ensure!(x.is_finite(), "coordinate {p:?} is not finite");
            Ok(Complex64::new(x, 0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::Float(floats))
}

pub fn base_records(v: &Value) -> Result<Vec<BaseDivisorRecord>> {
    as_array(v, "input")?
        .iter()
        .map(|r| {
            let label = field(r, "label")?.as_str().ok_or_else(|| anyhow!("label must be a string"))?;
            let comps = as_array(field(r, "components")?, "components")?
                .iter()
                .map(|c| Ok(FiberComponentData::new(as_u64(field(c, "t")?, "t")?, multiplicity(field(c, "m")?)?)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(BaseDivisorRecord::new(label, comps)?)
        })
        .collect()
}
