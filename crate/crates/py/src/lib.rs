use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use jacobi_core::alexander::{w_ac, wheel_coefficients};
use jacobi_core::cabling::{torus_knot_integral, TorusKnot};
use jacobi_core::cache::Cache;
use jacobi_core::element::{ElementJson, GradedElement};
use jacobi_core::rational::{format_q, parse_q};
use jacobi_core::series::alexander_torus as alexander_series;
use jacobi_core::{verify, Engine as CoreEngine, EngineConfig, Error};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Consistency(_) | Error::DegenerateBasis { .. } | Error::Cache { .. } | Error::Io(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Computation context: quotient bases, caches and limits.
#[pyclass(frozen)]
struct Engine {
    inner: Arc<CoreEngine>,
}

/// A truncated element of the (framed or unframed) diagram space.
#[pyclass(frozen)]
struct Element {
    engine: Arc<CoreEngine>,
    x: GradedElement,
}

impl Element {
    fn wrap(&self, x: GradedElement) -> Element {
        Element { engine: self.engine.clone(), x }
    }
}

#[pymethods]
impl Element {
    #[getter]
    fn framed(&self) -> bool {
        self.x.framed()
    }

    #[getter]
    fn max_degree(&self) -> usize {
        self.x.max_degree()
    }

    /// Nonzero coordinates as `(degree, label, "p/q")`.
    fn terms(&self) -> PyResult<Vec<(usize, String, String)>> {
        let j = self.engine.to_json(&self.x).map_err(py_err)?;
        Ok(j.terms.into_iter().map(|t| (t.degree, t.basis_label, t.coeff)).collect())
    }

    fn to_json(&self) -> PyResult<String> {
        let j = self.engine.to_json(&self.x).map_err(py_err)?;
        serde_json::to_string(&j).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    fn truncate(&self, max_degree: usize) -> Element {
        self.wrap(self.x.truncate(max_degree))
    }

    /// Multiplies by a rational given as `"p/q"`.
    fn scale(&self, c: &str) -> PyResult<Element> {
        Ok(self.wrap(self.x.scale(&parse_q(c).map_err(py_err)?)))
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.x.add(&other.x).map_err(py_err)?))
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.x.sub(&other.x).map_err(py_err)?))
    }

    /// Connected sum.
    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.engine.connect_sum(&self.x, &other.x).map_err(py_err)?))
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.x == other.x
    }

    fn __repr__(&self) -> PyResult<String> {
        let terms: Vec<String> =
            self.terms()?.into_iter().map(|(d, l, c)| format!("[{d}] {c} {l}")).collect();
        Ok(format!("Element({})", if terms.is_empty() { "0".into() } else { terms.join(" + ") }))
    }
}

/// The invariant of one torus knot in its several forms.
#[pyclass(frozen, get_all)]
struct TorusKnotIntegral {
    m: i64,
    p: i64,
    framed: Py<Element>,
    deframed: Py<Element>,
    z: Py<Element>,
    log: Py<Element>,
}

impl Engine {
    fn wrap(&self, x: GradedElement) -> Element {
        Element { engine: self.inner.clone(), x }
    }
}

#[pymethods]
impl Engine {
    #[new]
    #[pyo3(signature = (cache_dir=None, in_memory=false, degree_limit=None))]
    fn new(cache_dir: Option<PathBuf>, in_memory: bool, degree_limit: Option<usize>) -> Self {
        let mut config = if in_memory { EngineConfig::in_memory() } else { EngineConfig::default() };
        if let Some(d) = cache_dir {
            config.cache = Some(Cache::new(d));
        }
        if let Some(d) = degree_limit {
            config.degree_limit = d;
        }
        Engine { inner: Arc::new(CoreEngine::new(config)) }
    }

    #[pyo3(signature = (max_degree, framed=false))]
    fn dims(&self, max_degree: usize, framed: bool) -> PyResult<Vec<usize>> {
        self.inner.dims(max_degree, framed).map_err(py_err)
    }

    #[pyo3(signature = (degree, framed=false))]
    fn basis_labels(&self, degree: usize, framed: bool) -> PyResult<Vec<String>> {
        Ok(self.inner.basis(degree, framed).map_err(py_err)?.labels().to_vec())
    }

    fn unit(&self, max_degree: usize, framed: bool) -> PyResult<Element> {
        Ok(self.wrap(self.inner.unit(max_degree, framed).map_err(py_err)?))
    }

    fn theta(&self, max_degree: usize) -> PyResult<Element> {
        Ok(self.wrap(self.inner.theta(max_degree).map_err(py_err)?))
    }

    fn basis_element(&self, degree: usize, label: &str, framed: bool, max_degree: usize) -> PyResult<Element> {
        Ok(self.wrap(self.inner.basis_element(degree, label, framed, max_degree).map_err(py_err)?))
    }

    fn element_from_json(&self, s: &str) -> PyResult<Element> {
        let j: ElementJson = serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(self.wrap(self.inner.from_json(&j).map_err(py_err)?))
    }

    fn exp(&self, x: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.exp_connect(&x.x).map_err(py_err)?))
    }

    fn log(&self, x: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.log_connect(&x.x).map_err(py_err)?))
    }

    fn inverse(&self, x: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.inverse_connect(&x.x).map_err(py_err)?))
    }

    fn is_group_like(&self, x: &Element) -> PyResult<bool> {
        self.inner.is_group_like(&x.x).map_err(py_err)
    }

    fn is_primitive(&self, x: &Element) -> PyResult<bool> {
        self.inner.is_primitive(&x.x).map_err(py_err)
    }

    fn disjoint_union(&self, x: &Element, y: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.disjoint_union(&x.x, &y.x).map_err(py_err)?))
    }

    fn adams(&self, m: i64, x: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.adams(m, &x.x).map_err(py_err)?))
    }

    fn project_unframed(&self, x: &Element) -> PyResult<Element> {
        Ok(self.wrap(self.inner.project_unframed(&x.x).map_err(py_err)?))
    }

    /// Symmetrized coordinates per degree as `{label: "p/q"}`.
    fn to_symmetrized(&self, x: &Element) -> PyResult<Vec<BTreeMap<String, String>>> {
        let s = self.inner.to_symmetrized(&x.x).map_err(py_err)?;
        s.iter()
            .enumerate()
            .map(|(n, part)| {
                let b = self.inner.symmetrized_basis(n).map_err(py_err)?;
                Ok(b.labels().iter().cloned().zip(part.iter().map(format_q)).collect())
            })
            .collect()
    }

    fn omega(&self, max_degree: usize) -> PyResult<Element> {
        Ok(self.wrap(self.inner.omega(max_degree).map_err(py_err)?))
    }

    /// `(round labels, symmetrized labels, rows of "p/q")`.
    fn appendix_a(&self, degree: usize) -> PyResult<(Vec<String>, Vec<String>, Vec<Vec<String>>)> {
        let c = self.inner.appendix_matrix(degree).map_err(py_err)?;
        let rows = c.matrix.to_rows().iter().map(|r| r.iter().map(format_q).collect()).collect();
        Ok((c.round_labels, c.symmetrized_labels, rows))
    }

    fn torus_knot(&self, py: Python<'_>, m: i64, p: i64, max_degree: usize) -> PyResult<TorusKnotIntegral> {
        let knot = TorusKnot::new(m, p).map_err(py_err)?;
        let k = py.detach(|| torus_knot_integral(&self.inner, knot, max_degree)).map_err(py_err)?;
        Ok(TorusKnotIntegral {
            m: knot.m(),
            p: knot.p(),
            framed: Py::new(py, self.wrap(k.framed))?,
            deframed: Py::new(py, self.wrap(k.deframed))?,
            z: Py::new(py, self.wrap(k.z))?,
            log: Py::new(py, self.wrap(k.log))?,
        })
    }

    /// `W_AC` as a list of `"p/q"` coefficients of `h^k`.
    #[pyo3(signature = (x, is_log=false))]
    fn w_ac(&self, x: &Element, is_log: bool) -> PyResult<Vec<String>> {
        let s = w_ac(&self.inner, &x.x, is_log).map_err(py_err)?;
        Ok(s.coeffs().iter().map(format_q).collect())
    }

    #[pyo3(signature = (x, is_log=false))]
    fn wheel_coefficients(&self, x: &Element, is_log: bool) -> PyResult<BTreeMap<usize, String>> {
        let w = wheel_coefficients(&self.inner, &x.x, is_log).map_err(py_err)?;
        Ok(w.iter().map(|(k, c)| (*k, format_q(c))).collect())
    }

    /// Runs acceptance suites; returns `(passed, report JSON)`.
    #[pyo3(signature = (suites=Vec::new()))]
    fn verify(&self, py: Python<'_>, suites: Vec<String>) -> PyResult<(bool, String)> {
        let selected: Vec<&str> = suites.iter().map(String::as_str).collect();
        let r = py.detach(|| verify::run(&self.inner, &selected)).map_err(py_err)?;
        let json = serde_json::to_string(&r).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok((r.passed(), json))
    }
}

/// The Alexander polynomial of `T(m, p)` at `t = e^h` as `"p/q"` coefficients.
#[pyfunction]
fn alexander_torus(m: i64, p: i64, order: usize) -> PyResult<Vec<String>> {
    Ok(alexander_series(m, p, order).map_err(py_err)?.coeffs().iter().map(format_q).collect())
}

#[pymodule]
fn jacobi(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Engine>()?;
    m.add_class::<Element>()?;
    m.add_class::<TorusKnotIntegral>()?;
    m.add_function(wrap_pyfunction!(alexander_torus, m)?)?;
    Ok(())
}
