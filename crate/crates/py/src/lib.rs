//! Python bindings for the distance Seidel spectral library.
//!
//! Exposes a `Graph` class plus the family constructors and graph
//! operations. Rich reports (spectral summaries, bound verification,
//! predicted spectra) cross the boundary as JSON strings so the Python side
//! can `json.loads` them without a bespoke object mapping.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dseidel::bounds::{bounds_report, kab_edge_deletion};
use dseidel::eigen::jacobi_eigenvalues;
use dseidel::families::{closed_form_spectrum, FamilySpec};
use dseidel::graph::Graph;
use dseidel::ops::{construct, predict, OpKind};
use dseidel::poly::char_poly_exact;
use dseidel::seidel::{
    cospectral, ds_matrix, spectral_summary, wiener_identity_check, DEFAULT_TOL,
};

fn to_py(e: dseidel::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite simple graph with distance Seidel spectral methods.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Build a graph from a vertex count and an edge list.
    #[new]
    #[pyo3(signature = (n, edges = vec![]))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v).map_err(to_py)?;
        }
        Ok(PyGraph { inner: g })
    }

    /// Parse one line of graph6.
    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_graph6(line.trim()).map_err(to_py)?,
        })
    }

    /// graph6 encoding of the graph.
    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    /// Number of vertices.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Number of edges.
    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    /// Vertex degrees in vertex order.
    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn diameter(&self) -> PyResult<i64> {
        self.inner.diameter().map_err(to_py)
    }

    /// Distance Seidel eigenvalues in descending order.
    fn spectrum(&self) -> PyResult<Vec<f64>> {
        let ds = ds_matrix(&self.inner).map_err(to_py)?;
        Ok(jacobi_eigenvalues(&ds.to_f64()))
    }

    /// Sum of the absolute distance Seidel eigenvalues.
    fn energy(&self) -> PyResult<f64> {
        Ok(spectral_summary(&self.inner, DEFAULT_TOL)
            .map_err(to_py)?
            .energy)
    }

    /// Largest absolute distance Seidel eigenvalue.
    fn spectral_radius(&self) -> PyResult<f64> {
        Ok(spectral_summary(&self.inner, DEFAULT_TOL)
            .map_err(to_py)?
            .radius)
    }

    /// Exact characteristic polynomial of the distance Seidel matrix, as
    /// decimal coefficient strings from the leading term down.
    fn char_poly(&self) -> PyResult<Vec<String>> {
        let ds = ds_matrix(&self.inner).map_err(to_py)?;
        Ok(char_poly_exact(&ds).to_dec_strings())
    }

    /// Full spectral summary as a JSON string.
    #[pyo3(signature = (tol = None))]
    fn summary_json(&self, tol: Option<f64>) -> PyResult<String> {
        let s = spectral_summary(&self.inner, tol.unwrap_or(DEFAULT_TOL)).map_err(to_py)?;
        serde_json::to_string(&s).map_err(json_err)
    }

    /// Bound verification report as a JSON string.
    #[pyo3(signature = (tol = None))]
    fn bounds_json(&self, tol: Option<f64>) -> PyResult<String> {
        let r = bounds_report(&self.inner, tol.unwrap_or(DEFAULT_TOL)).map_err(to_py)?;
        serde_json::to_string(&r).map_err(json_err)
    }

    /// Residual of the Wiener-index identity; 0 on every connected graph.
    fn wiener_residual(&self) -> PyResult<i64> {
        Ok(wiener_identity_check(&self.inner).map_err(to_py)?.residual)
    }

    /// Whether both graphs have the same exact distance Seidel
    /// characteristic polynomial.
    fn cospectral(&self, other: &PyGraph) -> PyResult<bool> {
        cospectral(&self.inner, &other.inner).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, graph6={:?})",
            self.inner.n(),
            self.inner.edge_count(),
            self.inner.to_graph6()
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// Construct a named family member. Names: kn, kn-e, kab, kab-e, star,
/// cycle, wheel, split, friendship, multipartite, cocktail.
#[pyfunction]
fn family(name: &str, params: Vec<usize>) -> PyResult<PyGraph> {
    let spec = FamilySpec::from_cli(name, &params).map_err(to_py)?;
    Ok(PyGraph {
        inner: spec.construct().map_err(to_py)?,
    })
}

/// Closed-form distance Seidel spectrum of a family member, as
/// (eigenvalue, multiplicity) pairs in descending order.
#[pyfunction]
fn family_spectrum(name: &str, params: Vec<usize>) -> PyResult<Vec<(f64, usize)>> {
    let spec = FamilySpec::from_cli(name, &params).map_err(to_py)?;
    let s = closed_form_spectrum(&spec).map_err(to_py)?;
    Ok(s.entries.iter().map(|e| (e.value, e.mult)).collect())
}

/// Apply a graph operation. Names: join, join-union, double, prism, lex-k2,
/// edc.
#[pyfunction]
fn operation(py: Python<'_>, name: &str, inputs: Vec<Py<PyGraph>>) -> PyResult<PyGraph> {
    let op = OpKind::from_cli(name).map_err(to_py)?;
    let graphs: Vec<Graph> = inputs.iter().map(|g| g.borrow(py).inner.clone()).collect();
    Ok(PyGraph {
        inner: construct(op, &graphs).map_err(to_py)?,
    })
}

/// Predicted spectrum of an operation's output, computed from the operands
/// alone, as a JSON string.
#[pyfunction]
fn predict_operation(py: Python<'_>, name: &str, inputs: Vec<Py<PyGraph>>) -> PyResult<String> {
    let op = OpKind::from_cli(name).map_err(to_py)?;
    let graphs: Vec<Graph> = inputs.iter().map(|g| g.borrow(py).inner.clone()).collect();
    let p = predict(op, &graphs).map_err(to_py)?;
    serde_json::to_string(&p).map_err(json_err)
}

/// Energies of K_{a,b} before and after deleting one edge, as a JSON
/// string with an `increased` flag.
#[pyfunction]
fn edge_deletion(a: usize, b: usize) -> PyResult<String> {
    let rec = kab_edge_deletion(a, b).map_err(to_py)?;
    serde_json::to_string(&rec).map_err(json_err)
}

/// Distance Seidel spectra, energies, bounds, and graph operations.
#[pymodule]
fn dseidel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(family_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(operation, m)?)?;
    m.add_function(wrap_pyfunction!(predict_operation, m)?)?;
    m.add_function(wrap_pyfunction!(edge_deletion, m)?)?;
    Ok(())
}
