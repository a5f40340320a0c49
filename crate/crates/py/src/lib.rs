//! Python bindings: digraphs, the Rédei–Berge function by any route,
//! Hamiltonian counts and the underlying combinatorics.

use num_bigint::BigInt;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use redei::combinatorics::{character as chi, partitions_of, Partition};
use redei::digraph as dg;
use redei::hamilton::{self, CycleRoute};
use redei::matrix::{det_bareiss, permanent_ryser, RingMatrix};
use redei::redei::{self as rb, ChowRoute, Route};
use redei::symfun::SymFun;
use redei::{Basis, Error, Rational};

fn err(e: Error) -> PyErr {
    match e {
        Error::Guard { .. } => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(parts: Vec<u32>) -> Partition {
    Partition::new(parts)
}

/// A coefficient as a Python int when integral, else as an exact `"p/q"` string.
fn coeff(py: Python<'_>, c: &Rational) -> PyResult<Py<PyAny>> {
    if c.is_integer() {
        Ok(c.to_integer().into_pyobject(py)?.into_any().unbind())
    } else {
        Ok(c.to_string().into_pyobject(py)?.into_any().unbind())
    }
}

fn key<'py>(py: Python<'py>, l: &Partition) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, l.parts())
}

fn symfun_dict<'py>(py: Python<'py>, f: &SymFun) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (l, c) in f.terms() {
        out.set_item(key(py, l)?, coeff(py, c)?)?;
    }
    Ok(out)
}

/// A digraph on `n` vertices; edges are 1-indexed `(u, v)` pairs.
#[pyclass(name = "Digraph", module = "redei_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDigraph(dg::Digraph);

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        dg::Digraph::from_one_based(n, &edges).map(PyDigraph).map_err(err)
    }

    /// Parses the text (`n` then `u v` lines) or JSON format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        dg::Digraph::parse(text).map(PyDigraph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    fn complement(&self) -> Self {
        PyDigraph(self.0.complement())
    }

    fn opposite(&self) -> Self {
        PyDigraph(self.0.opposite())
    }

    fn is_acyclic(&self) -> bool {
        self.0.is_acyclic()
    }

    fn is_tournament(&self) -> bool {
        self.0.is_tournament()
    }

    fn fingerprint(&self) -> String {
        self.0.fingerprint()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (n, p, seed = 0))]
fn random_digraph(n: usize, p: f64, seed: u64) -> PyResult<PyDigraph> {
    dg::random_digraph(n, p, seed).map(PyDigraph).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn random_tournament(n: usize, seed: u64) -> PyResult<PyDigraph> {
    dg::random_tournament(n, seed).map(PyDigraph).map_err(err)
}

#[pyfunction]
fn star_digraph(sizes: Vec<usize>) -> PyResult<PyDigraph> {
    dg::Digraph::star_from_sizes(&sizes).map(PyDigraph).map_err(err)
}

#[pyfunction]
fn directed_path(n: usize) -> PyResult<PyDigraph> {
    dg::directed_path_digraph(n).map(PyDigraph).map_err(err)
}

/// Every route tag.
#[pyfunction]
fn routes() -> Vec<&'static str> {
    Route::ALL.iter().map(|r| r.tag()).collect()
}

#[pyfunction]
fn applicable_routes(d: &PyDigraph) -> Vec<&'static str> {
    rb::applicable_routes(&d.0).iter().map(|r| r.tag()).collect()
}

/// `U_D` as `{partition: coefficient}` in `basis` (p, s, h, e, m, mtilde).
#[pyfunction]
#[pyo3(signature = (d, basis = "p", route = "powersum-GS"))]
fn redei_berge<'py>(py: Python<'py>, d: &PyDigraph, basis: &str, route: &str) -> PyResult<Bound<'py, PyDict>> {
    let basis: Basis = basis.parse().map_err(err)?;
    let route: Route = route.parse().map_err(err)?;
    let graph = d.0.clone();
    let value = py
        .detach(move || rb::compute_u(&graph, route).and_then(|r| r.value.convert(basis)))
        .map_err(err)?;
    symfun_dict(py, &value)
}

/// `U_D` by every applicable route; raises if any two disagree.
#[pyfunction]
#[pyo3(signature = (d, basis = "p"))]
fn redei_berge_all_routes<'py>(py: Python<'py>, d: &PyDigraph, basis: &str) -> PyResult<Bound<'py, PyDict>> {
    let basis: Basis = basis.parse().map_err(err)?;
    let graph = d.0.clone();
    let results = py
        .detach(move || rb::compute_all(&graph, &rb::applicable_routes(&graph)))
        .map_err(err)?;
    let first = results
        .first()
        .ok_or_else(|| PyOverflowError::new_err("no route fits within the size guards"))?;
    symfun_dict(py, &first.value.convert(basis).map_err(err)?)
}

#[pyfunction]
fn schur_coefficient(d: &PyDigraph, parts: Vec<u32>) -> PyResult<BigInt> {
    rb::schur_coeff_jt(&d.0, &partition(parts)).map_err(err)
}

/// Chow's `Ξ_D` as `{(z-partition, y-partition): coefficient}` over `p(z) p(y)`.
#[pyfunction]
fn chow_xi<'py>(py: Python<'py>, d: &PyDigraph) -> PyResult<Bound<'py, PyDict>> {
    let xi = rb::chow_xi(&d.0, ChowRoute::Direct).map_err(err)?;
    let out = PyDict::new(py);
    for ((z, y), c) in xi.terms() {
        out.set_item((key(py, z)?, key(py, y)?), coeff(py, c)?)?;
    }
    Ok(out)
}

/// Number of Hamiltonian paths.
#[pyfunction]
fn ham(py: Python<'_>, d: &PyDigraph) -> PyResult<BigInt> {
    let graph = d.0.clone();
    py.detach(move || hamilton::ham_dp(&graph)).map_err(err)
}

#[pyfunction]
fn ham_detper(py: Python<'_>, d: &PyDigraph) -> PyResult<BigInt> {
    let graph = d.0.clone();
    py.detach(move || hamilton::ham_detper(&graph)).map_err(err)
}

/// Number of directed Hamiltonian cycles.
#[pyfunction]
fn ham_cycles(py: Python<'_>, d: &PyDigraph) -> PyResult<BigInt> {
    let graph = d.0.clone();
    py.detach(move || hamilton::ham_cycles(&graph, CycleRoute::FormulaB)).map_err(err)
}

#[pyfunction]
fn partitions(py: Python<'_>, n: usize) -> PyResult<Vec<Bound<'_, PyTuple>>> {
    partitions_of(n).map_err(err)?.iter().map(|p| key(py, p)).collect()
}

/// The symmetric-group character `χ^λ(μ)`.
#[pyfunction]
fn character(lam: Vec<u32>, mu: Vec<u32>) -> PyResult<i64> {
    chi(&partition(lam), &partition(mu)).map_err(err)
}

#[pyfunction]
fn permanent(rows: Vec<Vec<i64>>) -> PyResult<BigInt> {
    let m = RingMatrix::from_rows(rows).map_err(err)?;
    permanent_ryser(&m).map_err(err)
}

#[pyfunction]
fn determinant(rows: Vec<Vec<i64>>) -> PyResult<BigInt> {
    Ok(det_bareiss(&RingMatrix::from_rows(rows).map_err(err)?))
}

#[pymodule]
fn redei_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(random_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(random_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(star_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(directed_path, m)?)?;
    m.add_function(wrap_pyfunction!(routes, m)?)?;
    m.add_function(wrap_pyfunction!(applicable_routes, m)?)?;
    m.add_function(wrap_pyfunction!(redei_berge, m)?)?;
    m.add_function(wrap_pyfunction!(redei_berge_all_routes, m)?)?;
    m.add_function(wrap_pyfunction!(schur_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(chow_xi, m)?)?;
    m.add_function(wrap_pyfunction!(ham, m)?)?;
    m.add_function(wrap_pyfunction!(ham_detper, m)?)?;
    m.add_function(wrap_pyfunction!(ham_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(permanent, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    Ok(())
}
