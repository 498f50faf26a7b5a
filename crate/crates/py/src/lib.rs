//! Python bindings. Graphs cross the boundary as `Graph` objects or graph6
//! strings, orientations as bitstrings, and structured results as plain
//! dictionaries and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;
use serde::Serialize;

use wordrep_core::characterization::with_orientation_witness;
use wordrep_core::graph::{enumerate_graphs, parse_graph6};
use wordrep_core::orientation::{
    count_semi_transitive_extensions, find_semi_transitive_orientation, find_shortcut, is_semi_transitive,
};
use wordrep_core::split::{classify_all, split_partition};
use wordrep_core::word::{alternation_graph, find_representant};
use wordrep_core::{FamilyId, OrientedGraph, Word};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Convert through JSON so nested results arrive as dicts and lists.
fn to_python<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "wordrep", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyGraph(wordrep_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        wordrep_core::Graph::from_edges(n, &edges).map(PyGraph).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text.trim()).map(PyGraph).map_err(value_error)
    }

    /// A named graph or family member, e.g. `"T1"` or `"K_TRIANGLE(6)"`.
    #[staticmethod]
    fn named(tag: &str) -> PyResult<Self> {
        let id: FamilyId = tag.parse().map_err(value_error)?;
        wordrep_core::families::named(&id).map(PyGraph).map_err(value_error)
    }

    fn graph6(&self) -> String {
        self.0.to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn is_split(&self) -> bool {
        split_partition(&self.0).is_some()
    }

    /// `(clique, independent)` of the split partition, or `None`.
    fn split_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        split_partition(&self.0).map(|sp| (sp.clique().to_vec(), sp.independent().to_vec()))
    }

    fn is_word_representable(&self) -> bool {
        wordrep_core::orientation::is_word_representable(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.0.to_string())
    }

    fn __reduce__<'py>(slf: &Bound<'py, Self>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyTuple>)> {
        let py = slf.py();
        let ctor = py.get_type::<PyGraph>().getattr("from_graph6")?;
        Ok((ctor, PyTuple::new(py, [slf.get().0.to_string()])?))
    }
}

/// Verdict dictionary: `representable`, `reason` and `witness`.
#[pyfunction]
#[pyo3(signature = (graph, witness = false))]
fn classify<'py>(py: Python<'py>, graph: &PyGraph, witness: bool) -> PyResult<Bound<'py, PyAny>> {
    let mut verdict = wordrep_core::classify(&graph.0);
    if witness {
        verdict = with_orientation_witness(verdict, &graph.0);
    }
    to_python(py, &verdict)
}

/// Bitstring of a semi-transitive orientation, or `None`.
#[pyfunction]
fn semi_transitive_orientation(graph: &PyGraph) -> Option<String> {
    find_semi_transitive_orientation(&graph.0).map(|og| og.bitstring())
}

fn oriented(graph: &PyGraph, bits: &str) -> PyResult<OrientedGraph> {
    OrientedGraph::from_bitstring(&graph.0, bits).map_err(value_error)
}

#[pyfunction]
fn is_semi_transitive_orientation(graph: &PyGraph, bits: &str) -> PyResult<bool> {
    Ok(is_semi_transitive(&oriented(graph, bits)?))
}

/// Shortcut witness of an acyclic orientation as a dict, or `None`.
#[pyfunction]
fn shortcut<'py>(py: Python<'py>, graph: &PyGraph, bits: &str) -> PyResult<Option<Bound<'py, PyAny>>> {
    let og = oriented(graph, bits)?;
    match find_shortcut(&og).map_err(value_error)? {
        Some(w) => Ok(Some(to_python(py, &w)?)),
        None => Ok(None),
    }
}

#[pyfunction]
#[pyo3(signature = (graph, fixed = Vec::new()))]
fn count_semi_transitive_orientations(graph: &PyGraph, fixed: Vec<(usize, usize)>) -> PyResult<u64> {
    count_semi_transitive_extensions(&graph.0, &fixed).map_err(value_error)
}

/// A/B/C reports for the independent vertices of a split graph under the
/// given orientation.
#[pyfunction]
fn vertex_types<'py>(py: Python<'py>, graph: &PyGraph, bits: &str) -> PyResult<Bound<'py, PyAny>> {
    let og = oriented(graph, bits)?;
    let sp = split_partition(&graph.0).ok_or_else(|| value_error("graph is not split"))?;
    to_python(py, &classify_all(&sp, &og).map_err(value_error)?)
}

#[pyfunction]
fn enumerate(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(enumerate_graphs(n).map_err(value_error)?.into_iter().map(PyGraph).collect())
}

/// The graph on `0..n` whose edges are the alternating letter pairs.
#[pyfunction]
fn word_graph(word: Vec<usize>, n: usize) -> PyResult<PyGraph> {
    alternation_graph(&Word::new(word), n).map(PyGraph).map_err(value_error)
}

#[pyfunction]
fn represents(word: Vec<usize>, graph: &PyGraph) -> bool {
    wordrep_core::word::represents(&Word::new(word), &graph.0)
}

#[pyfunction]
#[pyo3(signature = (graph, max_k = 3))]
fn representant(graph: &PyGraph, max_k: usize) -> Option<Vec<usize>> {
    find_representant(&graph.0, max_k).map(|w| w.letters().to_vec())
}

#[pymodule]
fn wordrep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(semi_transitive_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(is_semi_transitive_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(shortcut, m)?)?;
    m.add_function(wrap_pyfunction!(count_semi_transitive_orientations, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_types, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(word_graph, m)?)?;
    m.add_function(wrap_pyfunction!(represents, m)?)?;
    m.add_function(wrap_pyfunction!(representant, m)?)?;
    Ok(())
}
