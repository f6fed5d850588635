//! Python bindings. Triples and pairs are frozen value classes; every function
//! taking one also accepts a plain tuple. Paths are strings such as "A:5.5".

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use eisenstein_forest::forest::{self, TripleParent};
use eisenstein_forest::stern_brocot::{self, ParentResult};
use eisenstein_forest::{eisenstein, oracle, Error, ForestNode, Pair, PathCode, Triple, TwinForm};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Overflow => PyOverflowError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(
    name = "Triple",
    module = "eisenforest",
    skip_from_py_object,
    frozen,
    eq,
    ord,
    hash
)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyTriple(Triple);

#[pymethods]
impl PyTriple {
    #[new]
    fn new(a: i128, b: i128, c: i128) -> Self {
        PyTriple(Triple::new(a, b, c))
    }

    #[getter]
    fn a(&self) -> i128 {
        self.0.a
    }

    #[getter]
    fn b(&self) -> i128 {
        self.0.b
    }

    #[getter]
    fn c(&self) -> i128 {
        self.0.c
    }

    fn astuple(&self) -> (i128, i128, i128) {
        (self.0.a, self.0.b, self.0.c)
    }

    fn __repr__(&self) -> String {
        format!("Triple({}, {}, {})", self.0.a, self.0.b, self.0.c)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(
    name = "Pair",
    module = "eisenforest",
    skip_from_py_object,
    frozen,
    eq,
    ord,
    hash
)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyPair(Pair);

#[pymethods]
impl PyPair {
    #[new]
    fn new(n: i128, m: i128) -> Self {
        PyPair(Pair::new(n, m))
    }

    #[getter]
    fn n(&self) -> i128 {
        self.0.n
    }

    #[getter]
    fn m(&self) -> i128 {
        self.0.m
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    fn astuple(&self) -> (i128, i128) {
        (self.0.n, self.0.m)
    }

    fn __repr__(&self) -> String {
        format!("Pair({}, {})", self.0.n, self.0.m)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(
    name = "ForestNode",
    module = "eisenforest",
    skip_from_py_object,
    frozen,
    eq
)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyForestNode {
    #[pyo3(get)]
    tree_triple: PyTriple,
    #[pyo3(get)]
    twin_triple: PyTriple,
    #[pyo3(get)]
    pair: PyPair,
    #[pyo3(get)]
    path: String,
    #[pyo3(get)]
    depth: usize,
}

#[pymethods]
impl PyForestNode {
    fn __repr__(&self) -> String {
        format!(
            "ForestNode(path={:?}, tree_triple={}, twin_triple={}, pair={})",
            self.path, self.tree_triple.0, self.twin_triple.0, self.pair.0
        )
    }
}

impl From<ForestNode> for PyForestNode {
    fn from(node: ForestNode) -> Self {
        PyForestNode {
            tree_triple: PyTriple(node.tree_triple),
            twin_triple: PyTriple(node.twin_triple),
            pair: PyPair(node.pair),
            path: node.path.to_string(),
            depth: node.depth,
        }
    }
}

#[pyclass(
    name = "VerificationReport",
    module = "eisenforest",
    skip_from_py_object,
    frozen,
    get_all
)]
#[derive(Debug, Clone)]
pub struct PyVerificationReport {
    bound: i128,
    node_count: usize,
    forest_count: usize,
    oracle_count: usize,
    missing: Vec<PyTriple>,
    duplicated: Vec<PyTriple>,
    unexpected: Vec<PyTriple>,
    ok: bool,
}

#[pymethods]
impl PyVerificationReport {
    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(bound={}, ok={}, node_count={}, forest_count={}, oracle_count={})",
            self.bound,
            if self.ok { "True" } else { "False" },
            self.node_count,
            self.forest_count,
            self.oracle_count
        )
    }

    fn __bool__(&self) -> bool {
        self.ok
    }
}

fn triple_arg(obj: &Bound<'_, PyAny>) -> PyResult<Triple> {
    if let Ok(t) = obj.cast::<PyTriple>() {
        return Ok(t.get().0);
    }
    let (a, b, c): (i128, i128, i128) = obj.extract()?;
    Ok(Triple::new(a, b, c))
}

fn pair_arg(obj: &Bound<'_, PyAny>) -> PyResult<Pair> {
    if let Ok(p) = obj.cast::<PyPair>() {
        return Ok(p.get().0);
    }
    let (n, m): (i128, i128) = obj.extract()?;
    Ok(Pair::new(n, m))
}

fn path_arg(path: &str) -> PyResult<PathCode> {
    path.parse().map_err(to_py_err)
}

fn triples(list: Vec<Triple>) -> Vec<PyTriple> {
    list.into_iter().map(PyTriple).collect()
}

#[pyfunction]
fn is_eisenstein(t: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(eisenstein::is_eisenstein(&triple_arg(t)?))
}

#[pyfunction]
fn is_primitive_eisenstein(t: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(eisenstein::is_primitive_eisenstein(&triple_arg(t)?))
}

#[pyfunction]
fn twin(t: &Bound<'_, PyAny>) -> PyResult<PyTriple> {
    eisenstein::twin(&triple_arg(t)?)
        .map(PyTriple)
        .map_err(to_py_err)
}

/// Returns `(tree_form, twin_form)`.
#[pyfunction]
fn triple_from_pair(p: &Bound<'_, PyAny>) -> PyResult<(PyTriple, PyTriple)> {
    let tt = eisenstein::triple_from_pair(&pair_arg(p)?).map_err(to_py_err)?;
    Ok((PyTriple(tt.tree), PyTriple(tt.twin)))
}

/// Returns `(pair, form)` with form "tree" or "twin".
#[pyfunction]
fn pair_from_triple(t: &Bound<'_, PyAny>) -> PyResult<(PyPair, &'static str)> {
    let (pair, form) = eisenstein::pair_from_triple(&triple_arg(t)?).map_err(to_py_err)?;
    let form = match form {
        TwinForm::TreeForm => "tree",
        TwinForm::TwinOfTreeForm => "twin",
    };
    Ok((PyPair(pair), form))
}

#[pyfunction]
fn is_forest_pair(p: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(stern_brocot::is_forest_pair(&pair_arg(p)?))
}

#[pyfunction]
fn children_pair(p: &Bound<'_, PyAny>) -> PyResult<Vec<PyPair>> {
    let children = stern_brocot::children_pair(&pair_arg(p)?).map_err(to_py_err)?;
    Ok(children.into_iter().map(PyPair).collect())
}

/// `(parent, step)`, or `None` at a root.
#[pyfunction]
fn parent_pair(p: &Bound<'_, PyAny>) -> PyResult<Option<(PyPair, u8)>> {
    Ok(
        match stern_brocot::parent_pair(&pair_arg(p)?).map_err(to_py_err)? {
            ParentResult::IsRoot(_) => None,
            ParentResult::Parent { pair, step } => Some((PyPair(pair), step.get())),
        },
    )
}

#[pyfunction]
fn path_of_pair(p: &Bound<'_, PyAny>) -> PyResult<String> {
    stern_brocot::path_of_pair(&pair_arg(p)?)
        .map(|c| c.to_string())
        .map_err(to_py_err)
}

#[pyfunction]
fn pair_of_path(path: &str) -> PyResult<PyPair> {
    stern_brocot::pair_of_path(&path_arg(path)?)
        .map(PyPair)
        .map_err(to_py_err)
}

#[pyfunction]
fn roots() -> (PyTriple, PyTriple) {
    let (a, b) = forest::roots();
    (PyTriple(a), PyTriple(b))
}

#[pyfunction]
fn children_triple(t: &Bound<'_, PyAny>) -> PyResult<Vec<PyTriple>> {
    let children = forest::children_triple(&triple_arg(t)?).map_err(to_py_err)?;
    Ok(triples(children.to_vec()))
}

/// `(parent, step)`, or `None` at a root.
#[pyfunction]
fn parent_triple(t: &Bound<'_, PyAny>) -> PyResult<Option<(PyTriple, u8)>> {
    Ok(
        match forest::parent_triple(&triple_arg(t)?).map_err(to_py_err)? {
            TripleParent::IsRoot(_) => None,
            TripleParent::Parent { triple, step } => Some((PyTriple(triple), step.get())),
        },
    )
}

#[pyfunction]
fn path_of_triple(t: &Bound<'_, PyAny>) -> PyResult<String> {
    forest::path_of_triple(&triple_arg(t)?)
        .map(|c| c.to_string())
        .map_err(to_py_err)
}

#[pyfunction]
fn triple_of_path(path: &str) -> PyResult<PyForestNode> {
    forest::triple_of_path(&path_arg(path)?)
        .map(PyForestNode::from)
        .map_err(to_py_err)
}

#[pyfunction]
fn enumerate_forest(py: Python<'_>, max_a: i128) -> Vec<PyForestNode> {
    let nodes = py.detach(|| forest::enumerate_forest(max_a));
    nodes.into_iter().map(PyForestNode::from).collect()
}

#[pyfunction]
#[pyo3(signature = (max_a, include_equilateral = false))]
fn enumerate_all_triples(
    py: Python<'_>,
    max_a: i128,
    include_equilateral: bool,
) -> PyResult<Vec<PyTriple>> {
    py.detach(|| forest::enumerate_all_triples(max_a, include_equilateral))
        .map(triples)
        .map_err(to_py_err)
}

#[pyfunction]
fn brute_triples(py: Python<'_>, max_a: i128) -> Vec<PyTriple> {
    triples(
        py.detach(|| oracle::brute_triples(max_a))
            .into_iter()
            .collect(),
    )
}

#[pyfunction]
fn brute_pairs(py: Python<'_>, max_m: i128) -> Vec<PyPair> {
    py.detach(|| oracle::brute_pairs(max_m))
        .into_iter()
        .map(PyPair)
        .collect()
}

#[pyfunction]
fn verify_bijection(py: Python<'_>, max_a: i128) -> PyVerificationReport {
    let r = py.detach(|| oracle::verify_bijection(max_a));
    PyVerificationReport {
        bound: r.bound,
        node_count: r.node_count,
        forest_count: r.forest_count,
        oracle_count: r.oracle_count,
        missing: triples(r.missing),
        duplicated: triples(r.duplicated),
        unexpected: triples(r.unexpected),
        ok: r.ok,
    }
}

#[pymodule]
fn eisenforest(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTriple>()?;
    m.add_class::<PyPair>()?;
    m.add_class::<PyForestNode>()?;
    m.add_class::<PyVerificationReport>()?;
    m.add_function(wrap_pyfunction!(is_eisenstein, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive_eisenstein, m)?)?;
    m.add_function(wrap_pyfunction!(twin, m)?)?;
    m.add_function(wrap_pyfunction!(triple_from_pair, m)?)?;
    m.add_function(wrap_pyfunction!(pair_from_triple, m)?)?;
    m.add_function(wrap_pyfunction!(is_forest_pair, m)?)?;
    m.add_function(wrap_pyfunction!(children_pair, m)?)?;
    m.add_function(wrap_pyfunction!(parent_pair, m)?)?;
    m.add_function(wrap_pyfunction!(path_of_pair, m)?)?;
    m.add_function(wrap_pyfunction!(pair_of_path, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(children_triple, m)?)?;
    m.add_function(wrap_pyfunction!(parent_triple, m)?)?;
    m.add_function(wrap_pyfunction!(path_of_triple, m)?)?;
    m.add_function(wrap_pyfunction!(triple_of_path, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_forest, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_all_triples, m)?)?;
    m.add_function(wrap_pyfunction!(brute_triples, m)?)?;
    m.add_function(wrap_pyfunction!(brute_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bijection, m)?)?;
    Ok(())
}
