//! Python bindings. Scalars, polynomials and rational functions cross the
//! boundary as strings in the same syntax the CLI accepts ("3/2",
//! "X^2 - 1", "(X - 1)/X"); certificates and reports come back as dicts.

use cremona_core::parse::{parse_poly, parse_rat, parse_ratfunc};
use cremona_core::{self as core, Certificate, Error};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (value.to_string(),))?.unbind())
}

fn serialize<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    to_py(py, &serde_json::to_value(value).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// Element (x, y) -> (x + t, g(x) y + f(x)) of the Jonquieres group.
#[pyclass(name = "JonqElement", module = "cremona", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyJonq(core::JonqElement);

#[pymethods]
impl PyJonq {
    #[new]
    #[pyo3(signature = (t = "0", g = "1", f = "0"))]
    fn new(t: &str, g: &str, f: &str) -> PyResult<Self> {
        let t = parse_rat(t).map_err(err)?;
        let g = parse_ratfunc(g, 'X').map_err(err)?;
        let f = parse_ratfunc(f, 'X').map_err(err)?;
        core::JonqElement::new(t, g, f).map(PyJonq).map_err(err)
    }

    #[classmethod]
    fn identity(_cls: &Bound<'_, PyType>) -> Self {
        PyJonq(core::JonqElement::identity())
    }

    #[classmethod]
    fn translation(_cls: &Bound<'_, PyType>, t: &str) -> PyResult<Self> {
        Ok(PyJonq(core::JonqElement::translation(parse_rat(t).map_err(err)?)))
    }

    #[classmethod]
    fn alpha(_cls: &Bound<'_, PyType>, f: &str) -> PyResult<Self> {
        Ok(PyJonq(core::JonqElement::alpha(parse_ratfunc(f, 'X').map_err(err)?)))
    }

    #[classmethod]
    fn mu(_cls: &Bound<'_, PyType>, g: &str) -> PyResult<Self> {
        core::JonqElement::mu(parse_ratfunc(g, 'X').map_err(err)?).map(PyJonq).map_err(err)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        core::JonqElement::from_json(&value).map(PyJonq).map_err(err)
    }

    #[getter]
    fn t(&self) -> String {
        self.0.t().to_string()
    }

    #[getter]
    fn g(&self) -> String {
        self.0.g().to_string()
    }

    #[getter]
    fn f(&self) -> String {
        self.0.f().to_string()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `self * other` applies `other` first.
    fn compose(&self, other: &PyJonq) -> Self {
        PyJonq(self.0.compose(&other.0))
    }

    fn __mul__(&self, other: &PyJonq) -> Self {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        PyJonq(self.0.inverse())
    }

    fn __pow__(&self, k: i64, _modulo: Option<Py<PyAny>>) -> Self {
        PyJonq(self.0.pow(k))
    }

    fn commutator(&self, other: &PyJonq) -> Self {
        PyJonq(self.0.commutator(&other.0))
    }

    /// "infinite" or the order as a decimal string.
    fn order(&self) -> String {
        self.0.order().to_string()
    }

    fn apply(&self, x: &str, y: &str) -> PyResult<(String, String)> {
        let (x, y) = (parse_rat(x).map_err(err)?, parse_rat(y).map_err(err)?);
        let (u, v) = self.0.apply((&x, &y)).map_err(err)?;
        Ok((u.to_string(), v.to_string()))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __eq__(&self, other: &PyJonq) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.to_json().to_string().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("JonqElement('{}', '{}', '{}')", self.0.t(), self.0.g(), self.0.f())
    }
}

/// Elementary automorphism (x, y) -> (alpha x + P(y), beta y + c).
#[pyclass(name = "ElementaryAut", module = "cremona", frozen, from_py_object)]
#[derive(Clone)]
struct PyElementary(core::ElementaryAut);

#[pymethods]
impl PyElementary {
    #[new]
    fn new(alpha: &str, beta: &str, c: &str, p: &str) -> PyResult<Self> {
        core::ElementaryAut::new(
            parse_rat(alpha).map_err(err)?,
            parse_rat(beta).map_err(err)?,
            parse_rat(c).map_err(err)?,
            parse_poly(p, 'y').map_err(err)?,
        )
        .map(PyElementary)
        .map_err(err)
    }

    /// Parses "alpha;beta;c;P(y)".
    #[classmethod]
    fn parse(_cls: &Bound<'_, PyType>, line: &str) -> PyResult<Self> {
        core::ElementaryAut::parse_line(line).map(PyElementary).map_err(err)
    }

    fn compose(&self, other: &PyElementary) -> Self {
        PyElementary(self.0.compose(&other.0))
    }

    fn __mul__(&self, other: &PyElementary) -> Self {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        PyElementary(self.0.inverse())
    }

    fn __pow__(&self, k: i64, _modulo: Option<Py<PyAny>>) -> Self {
        PyElementary(self.0.pow(k))
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Degree of the P-part, or None for P = 0.
    fn degree(&self) -> Option<usize> {
        self.0.degree().finite()
    }

    /// Matrix of size n + 3 as rows of "p/q" strings.
    fn matrix(&self, n: usize) -> PyResult<Vec<Vec<String>>> {
        if self.0.degree().finite().is_some_and(|d| d > n) {
            return Err(PyValueError::new_err("degree exceeds representation"));
        }
        let m = core::elementary::matrix_of(&self.0, n);
        Ok(m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
    }

    fn __eq__(&self, other: &PyElementary) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ElementaryAut.parse('{}')", self.0)
    }
}

/// Evaluates a word such as "[s(1),a(X^2)]*m(X)".
#[pyfunction]
fn eval_word(word: &str) -> PyResult<PyJonq> {
    core::eval_word(word).map(PyJonq).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, seed = 42, trials = 100))]
fn gamma_class(py: Python<'_>, n: usize, seed: u64, trials: usize) -> PyResult<Py<PyAny>> {
    let cert = core::certificates::gamma_class_with(n, seed, trials).map_err(err)?;
    serialize(py, &Certificate::Class(cert))
}

#[pyfunction]
#[pyo3(signature = (seed = 42, trials = 1000))]
fn derived_length(py: Python<'_>, seed: u64, trials: usize) -> PyResult<Py<PyAny>> {
    let cert = core::derived_length_g(seed, trials).map_err(err)?;
    serialize(py, &Certificate::Solvability(cert))
}

#[pyfunction]
fn nonlinearity_report(py: Python<'_>, max_n: usize) -> PyResult<Py<PyAny>> {
    let report = core::nonlinearity_report(max_n).map_err(err)?;
    serialize(py, &Certificate::Nonlinearity(report))
}

/// Re-verifies a certificate dict (or list of them); returns the failures.
#[pyfunction]
fn check_certificate(py: Python<'_>, doc: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    let text: String = py.import("json")?.call_method1("dumps", (doc,))?.extract()?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(Certificate::check_json(&value).map_err(err)?.failures)
}

#[pyfunction]
fn heisenberg_profile(py: Python<'_>, p: u64) -> PyResult<Py<PyAny>> {
    serialize(py, &core::heisenberg_profile(p).map_err(err)?)
}

#[pyfunction]
fn birkhoff_min_dim(p: u64) -> PyResult<u64> {
    core::birkhoff_min_dim(p).map_err(err)
}

#[pyfunction]
fn min_dim_lower_bound(c: u64) -> PyResult<u64> {
    core::min_dim_lower_bound(c).map_err(err)
}

/// Applies the difference operator k times to a polynomial in X.
#[pyfunction]
fn delta_iter(poly: &str, k: usize) -> PyResult<String> {
    Ok(parse_poly(poly, 'X').map_err(err)?.delta_iter(k).to_string())
}

/// Linearizes the generators and checks the result on random words.
#[pyfunction]
#[pyo3(signature = (gens, trials = 100, seed = 42))]
fn linearize(py: Python<'_>, gens: Vec<PyElementary>, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let gens: Vec<_> = gens.into_iter().map(|g| g.0).collect();
    let lin = core::linearize(&gens).map_err(err)?;
    let check = core::elementary::check_representation(&gens, &lin, trials, seed).map_err(err)?;
    let value = serde_json::json!({
        "degree": lin.degree,
        "matrices": lin.matrices.iter().map(core::Matrix::to_json).collect::<Vec<_>>(),
        "check": check,
        "passed": check.passed(),
    });
    to_py(py, &value)
}

#[pymodule]
fn cremona(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyJonq>()?;
    m.add_class::<PyElementary>()?;
    m.add_function(wrap_pyfunction!(eval_word, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_class, m)?)?;
    m.add_function(wrap_pyfunction!(derived_length, m)?)?;
    m.add_function(wrap_pyfunction!(nonlinearity_report, m)?)?;
    m.add_function(wrap_pyfunction!(check_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(heisenberg_profile, m)?)?;
    m.add_function(wrap_pyfunction!(birkhoff_min_dim, m)?)?;
    m.add_function(wrap_pyfunction!(min_dim_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(delta_iter, m)?)?;
    m.add_function(wrap_pyfunction!(linearize, m)?)?;
    Ok(())
}
