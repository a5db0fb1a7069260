//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! (anything whose `str()` reads as `p` or `p/q` is accepted on input),
//! infinite multiplicities as `math.inf`.

use num_complex::Complex64;
use orbicurve::curves::{curve_kind as core_curve_kind, ContactRecord, MarkedCurve};
use orbicurve::enumfrac::{self, FanoTail, UnitFractionTuple};
use orbicurve::fibration::{self, BaseDivisorRecord, FiberComponentData};
use orbicurve::rnc::{self, SolverConfig, VerificationReport};
use orbicurve::{ArrangementOrbifold, Multiplicity, OrbifoldType, Rational};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(orbicurve_py, OrbicurveError, PyValueError, "Raised for invalid input; `code` names the failure.");

fn err(e: orbicurve::Error) -> PyErr {
    let pe = OrbicurveError::new_err(e.to_string());
    Python::attach(|py| {
        let _ = pe.value(py).setattr("code", e.code());
    });
    pe
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse().map_err(err)
}

fn multiplicity(obj: &Bound<'_, PyAny>) -> PyResult<Multiplicity> {
    obj.str()?.to_str()?.parse().map_err(err)
}

fn rationals(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(rational).collect()
}

fn orbifold_type(n: u32, mults: &[Bound<'_, PyAny>]) -> PyResult<OrbifoldType> {
    let ms = mults.iter().map(multiplicity).collect::<PyResult<Vec<_>>>()?;
    OrbifoldType::new(n, ms).map_err(err)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn mult_to_py<'py>(py: Python<'py>, m: &Multiplicity) -> PyResult<Bound<'py, PyAny>> {
    match m.finite() {
        Some(r) => fraction(py, r),
        None => Ok(f64::INFINITY.into_pyobject(py)?.into_any()),
    }
}

fn tuple(terms: Vec<u64>) -> PyResult<UnitFractionTuple> {
    UnitFractionTuple::new(terms).map_err(err)
}

/// `"Fano"`, `"TrivialCanonical"` or `"GeneralType"`.
#[pyfunction]
fn classify(n: u32, mults: Vec<Bound<'_, PyAny>>) -> PyResult<&'static str> {
    Ok(orbicurve::classify(&orbifold_type(n, &mults)?).as_str())
}

#[pyfunction]
fn canonical_degree<'py>(py: Python<'py>, n: u32, mults: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &orbicurve::canonical_degree(&orbifold_type(n, &mults)?))
}

#[pyfunction]
fn sylvester_extend(start: Vec<u64>, steps: usize) -> PyResult<Vec<u64>> {
    Ok(enumfrac::sylvester_extend(&tuple(start)?, steps).map_err(err)?.terms().to_vec())
}

#[pyfunction]
fn compute_bound_bn(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &enumfrac::compute_bound_bn(n).map_err(err)?)
}

/// Largest admissible last term; `None` if there is none, `math.inf` if
/// every tail works.
#[pyfunction]
fn max_fano_tail(py: Python<'_>, prefix: Vec<u64>) -> PyResult<Py<PyAny>> {
    Ok(match enumfrac::max_fano_tail(&tuple(prefix)?) {
        FanoTail::Max(m) => m.into_pyobject(py)?.into_any().unbind(),
        FanoTail::Unbounded => f64::INFINITY.into_pyobject(py)?.into_any().unbind(),
        FanoTail::NoTail => py.None(),
    })
}

#[pyfunction]
fn subunit_prefixes(n: usize, cap: u64) -> Vec<Vec<u64>> {
    enumfrac::subunit_prefixes(n, cap).iter().map(|t| t.terms().to_vec()).collect()
}

#[pyfunction]
fn superunit_tuples(n: usize, cap: u64) -> Vec<Vec<u64>> {
    enumfrac::superunit_tuples(n, cap).iter().map(|t| t.terms().to_vec()).collect()
}

/// `(status, method)`, with `method` set only for `"Provable"`.
#[pyfunction]
fn uniruledness_verdict(n: u32, mults: Vec<Bound<'_, PyAny>>) -> PyResult<(&'static str, Option<&'static str>)> {
    let v = orbicurve::uniruledness_verdict(&orbifold_type(n, &mults)?).map_err(err)?;
    Ok((v.status(), v.method().map(|m| m.as_str())))
}

#[pyfunction]
fn rnc_actual_check(n: u32, mults: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    orbicurve::rnc_actual_check(&orbifold_type(n, &mults)?).map_err(err)
}

/// `(sporadic, families)`; families are `(prefix, min_tail)` pairs.
#[pyfunction]
fn enumerate_exceptional_p3() -> (Vec<Vec<u64>>, Vec<([u64; 4], u64)>) {
    let c = orbicurve::enumerate_exceptional_p3();
    (
        c.sporadic.iter().filter_map(|t| t.integer_mults()).collect(),
        c.families.iter().map(|f| (f.prefix, f.min_tail)).collect(),
    )
}

/// `records` is a list of `(point_id, [(divisor_index, contact_order), ...])`.
/// Returns `(kind, degree)`.
#[pyfunction]
#[pyo3(signature = (n, mults, genus, records, virtual_ = false))]
fn curve_kind<'py>(
    py: Python<'py>,
    n: u32,
    mults: Vec<Bound<'py, PyAny>>,
    genus: u32,
    records: Vec<(String, Vec<(usize, u64)>)>,
    virtual_: bool,
) -> PyResult<(&'static str, Bound<'py, PyAny>)> {
    let t = orbifold_type(n, &mults)?;
    let records = records
        .into_iter()
        .map(|(id, contacts)| ContactRecord::new(id, contacts))
        .collect::<orbicurve::Result<Vec<_>>>()
        .map_err(err)?;
    let c = MarkedCurve::new(genus, records).map_err(err)?;
    let r = core_curve_kind(&c, &t, virtual_).map_err(err)?;
    Ok((r.kind.as_str(), fraction(py, &r.degree)?))
}

fn base_record(label: String, comps: Vec<(u64, Bound<'_, PyAny>)>) -> PyResult<BaseDivisorRecord> {
    let comps = comps
        .iter()
        .map(|(t, m)| FiberComponentData::new(*t, multiplicity(m)?).map_err(err))
        .collect::<PyResult<Vec<_>>>()?;
    BaseDivisorRecord::new(label, comps).map_err(err)
}

/// `components` is a list of `(t, multiplicity)`.
#[pyfunction]
fn base_multiplicity<'py>(py: Python<'py>, components: Vec<(u64, Bound<'py, PyAny>)>) -> PyResult<Bound<'py, PyAny>> {
    let r = base_record(String::new(), components)?;
    mult_to_py(py, &fibration::base_multiplicity(&r))
}

/// `records` is a list of `(label, [(t, multiplicity), ...])`. Returns the
/// `(label, coefficient)` pairs of the orbifold base.
#[pyfunction]
fn orbifold_base<'py>(
    py: Python<'py>,
    records: Vec<(String, Vec<(u64, Bound<'py, PyAny>)>)>,
) -> PyResult<Vec<(String, Bound<'py, PyAny>)>> {
    let records = records.into_iter().map(|(l, c)| base_record(l, c)).collect::<PyResult<Vec<_>>>()?;
    fibration::orbifold_base(&records)
        .map_err(err)?
        .into_iter()
        .map(|(l, c)| Ok((l, fraction(py, &c)?)))
        .collect()
}

/// `(exponents, denominators)` pairs in descending lexicographic order.
#[pyfunction]
fn symdiff_generators(a: Vec<Bound<'_, PyAny>>, m: u64) -> PyResult<Vec<(Vec<u64>, Vec<u64>)>> {
    let gens = fibration::symdiff_generators(&rationals(&a)?, m).map_err(err)?;
    Ok(gens.into_iter().map(|g| (g.exponents, g.denominators)).collect())
}

#[pyfunction]
fn phi_map(y: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    rnc::phi_map(&y).map_err(err)
}

#[pyfunction]
fn phi_jacobian(y: Vec<Complex64>) -> PyResult<Vec<Vec<Complex64>>> {
    let j = rnc::phi_jacobian(&y).map_err(err)?;
    Ok(j.row_iter().map(|r| r.iter().copied().collect()).collect())
}

#[pyclass(frozen, name = "RncSolution")]
struct PyRncSolution {
    inner: rnc::RncSolution,
    report: VerificationReport,
}

#[pymethods]
impl PyRncSolution {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }
    #[getter]
    fn y(&self) -> Vec<Complex64> {
        self.inner.y.clone()
    }
    #[getter]
    fn a(&self) -> Vec<Complex64> {
        self.inner.a.clone()
    }
    #[getter]
    fn b(&self) -> Vec<Complex64> {
        self.inner.b.clone()
    }
    #[getter]
    fn leading_coefficient(&self) -> Complex64 {
        self.inner.leading_coefficient
    }
    /// Coordinate polynomials in the arrangement's coordinates, ascending
    /// powers of `t`.
    #[getter]
    fn polynomials(&self) -> Vec<Vec<Complex64>> {
        self.inner.polynomials.clone()
    }
    #[getter]
    fn standardized_polynomials(&self) -> Vec<Vec<Complex64>> {
        self.inner.standardized_polynomials.clone()
    }
    #[getter]
    fn homography<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let m = self.inner.homography.matrix();
        m.iter().map(|row| row.iter().map(|x| fraction(py, x)).collect()).collect()
    }
    #[getter]
    fn residual(&self) -> f64 {
        self.inner.residual_report
    }
    #[getter]
    fn is_real(&self) -> bool {
        self.inner.is_real
    }
    #[getter]
    fn restarts_used(&self) -> usize {
        self.inner.restarts_used
    }
    #[getter]
    fn passed(&self) -> bool {
        self.report.pass
    }
    #[getter]
    fn verification<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = &self.report;
        let d = PyDict::new(py);
        d.set_item("pass", r.pass)?;
        d.set_item("tolerance", r.tolerance)?;
        d.set_item("low_order_residual", r.low_order_residual)?;
        d.set_item("leading_ratio", r.leading_ratio)?;
        d.set_item("structure_error", r.structure_error)?;
        d.set_item("limit_point_error", r.limit_point_error)?;
        d.set_item("contact_error", r.contact_error)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "RncSolution(n={}, residual={:e}, passed={}, restarts_used={})",
            self.inner.n, self.inner.residual_report, self.report.pass, self.inner.restarts_used
        )
    }
}

/// Rational normal curve through `point` meeting each of the `n+2`
/// `hyperplanes` in one point. The point may be rational (ints, strings,
/// Fractions) or complex.
#[pyfunction]
#[pyo3(signature = (hyperplanes, point, mults = None, seed = 0, tol = 1e-8, max_restarts = None))]
fn solve_rnc(
    hyperplanes: Vec<Vec<Bound<'_, PyAny>>>,
    point: Vec<Bound<'_, PyAny>>,
    mults: Option<Vec<Bound<'_, PyAny>>>,
    seed: u64,
    tol: f64,
    max_restarts: Option<usize>,
) -> PyResult<PyRncSolution> {
    let hs = hyperplanes.iter().map(|h| rationals(h)).collect::<PyResult<Vec<_>>>()?;
    let n = hs.first().map_or(0, |h| h.len().saturating_sub(1)) as u32;
    let ms = match mults {
        Some(ms) => ms.iter().map(multiplicity).collect::<PyResult<Vec<_>>>()?,
        None => vec![Multiplicity::infinite(); hs.len()],
    };
    let arr = ArrangementOrbifold::new(n, hs, ms).map_err(err)?;
    let mut cfg = SolverConfig { rng_seed: seed, verify_tolerance: tol, ..SolverConfig::default() };
    if let Some(r) = max_restarts {
        cfg.max_restarts = r;
    }
    let (inner, p) = match rationals(&point) {
        Ok(p) => {
            let pc: Vec<Complex64> = p.iter().map(|x| Complex64::new(x.to_f64(), 0.0)).collect();
            (rnc::solve_rnc_rational(&arr, &p, &cfg).map_err(err)?, pc)
        }
        Err(_) => {
            let p = point.iter().map(|z| z.extract::<Complex64>()).collect::<PyResult<Vec<_>>>()?;
            (rnc::solve_rnc(&arr, &p, &cfg).map_err(err)?, p)
        }
    };
    let report = rnc::verify_rnc(&inner, &arr, &p, tol);
    Ok(PyRncSolution { inner, report })
}

#[pymodule]
fn orbicurve_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("OrbicurveError", m.py().get_type::<OrbicurveError>())?;
    m.add_class::<PyRncSolution>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_degree, m)?)?;
    m.add_function(wrap_pyfunction!(sylvester_extend, m)?)?;
    m.add_function(wrap_pyfunction!(compute_bound_bn, m)?)?;
    m.add_function(wrap_pyfunction!(max_fano_tail, m)?)?;
    m.add_function(wrap_pyfunction!(subunit_prefixes, m)?)?;
    m.add_function(wrap_pyfunction!(superunit_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(uniruledness_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(rnc_actual_check, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_exceptional_p3, m)?)?;
    m.add_function(wrap_pyfunction!(curve_kind, m)?)?;
    m.add_function(wrap_pyfunction!(base_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(orbifold_base, m)?)?;
    m.add_function(wrap_pyfunction!(symdiff_generators, m)?)?;
    m.add_function(wrap_pyfunction!(phi_map, m)?)?;
    m.add_function(wrap_pyfunction!(phi_jacobian, m)?)?;
    m.add_function(wrap_pyfunction!(solve_rnc, m)?)?;
    Ok(())
}
