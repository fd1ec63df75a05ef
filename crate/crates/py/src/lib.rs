//! Python bindings: graphs, products, transforms, exact solvers, packings,
//! closed forms and coloring patterns.

use std::time::Duration;

use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use injcolor_core::coloring::{self, Coloring, ColoringMode};
use injcolor_core::error::Error;
use injcolor_core::formulas::{self, FormulaValue};
use injcolor_core::graph::{self as graph_core, GraphFamily};
use injcolor_core::io;
use injcolor_core::packing::{self, PackingMode};
use injcolor_core::patterns::{self, BuiltinPattern};
use injcolor_core::products::{self, ProductKind};
use injcolor_core::transforms::{self, TransformMode};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } => PyTimeoutError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(py_err)
}

fn budget(seconds: Option<f64>) -> PyResult<Option<Duration>> {
    match seconds {
        Some(s) if !s.is_finite() || s < 0.0 => Err(PyValueError::new_err(format!(
            "budget must be nonnegative, got {s}"
        ))),
        Some(s) => Ok(Some(Duration::from_secs_f64(s))),
        None => Ok(None),
    }
}

fn coloring(colors: Vec<u32>) -> PyResult<Coloring> {
    Coloring::new(colors).map_err(py_err)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "injcolor", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: graph_core::Graph,
}

impl From<graph_core::Graph> for PyGraph {
    fn from(inner: graph_core::Graph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(graph_core::Graph::from_edges(n, &edges)
            .map_err(py_err)?
            .into())
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        family(GraphFamily::Path { n })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        family(GraphFamily::Cycle { n })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        family(GraphFamily::Complete { n })
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        family(GraphFamily::Star { n })
    }

    #[staticmethod]
    #[pyo3(signature = (n, seed = 0))]
    fn random_tree(n: usize, seed: u64) -> PyResult<Self> {
        family(GraphFamily::RandomTree { n, seed })
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed = 0))]
    fn random_gnp(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        family(GraphFamily::RandomGnp { n, p, seed })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(io::graph_from_json(text).map_err(py_err)?.into())
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.inner, None)
    }

    fn to_dot(&self, colors: Option<Vec<u32>>) -> PyResult<String> {
        let c = colors.map(coloring).transpose()?;
        io::to_dot(&self.inner, c.as_ref()).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(py_err(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

fn family(f: GraphFamily) -> PyResult<PyGraph> {
    Ok(graph_core::build_named(&f).map_err(py_err)?.into())
}

/// `kind` is one of cartesian, direct, strong, lexicographic, corona.
#[pyfunction]
fn product(kind: &str, g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    let kind: ProductKind = parse(kind)?;
    Ok(products::product(kind, &g.inner, &h.inner)
        .map_err(py_err)?
        .into())
}

/// `mode` is one of two-step, closed-neighborhood, square.
#[pyfunction]
fn transform(mode: &str, g: &PyGraph) -> PyResult<PyGraph> {
    let mode: TransformMode = parse(mode)?;
    Ok(transforms::neighborhood_graph(mode, &g.inner).into())
}

/// `(value, colors)`; raises `TimeoutError` when the budget runs out.
#[pyfunction]
#[pyo3(signature = (mode, g, budget_seconds = None))]
fn chromatic(mode: &str, g: &PyGraph, budget_seconds: Option<f64>) -> PyResult<(u32, Vec<u32>)> {
    let mode: ColoringMode = parse(mode)?;
    let (value, c) = coloring::chi(mode, &g.inner, budget(budget_seconds)?).map_err(py_err)?;
    Ok((value, c.colors().to_vec()))
}

/// `None` when valid, otherwise a description of the first violation.
#[pyfunction]
fn verify(mode: &str, g: &PyGraph, colors: Vec<u32>) -> PyResult<Option<String>> {
    let mode: ColoringMode = parse(mode)?;
    let found = coloring::verify(mode, &g.inner, &coloring(colors)?).map_err(py_err)?;
    Ok(found.map(|v| v.to_string()))
}

#[pyfunction]
fn max_packing(mode: &str, g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let mode: PackingMode = parse(mode)?;
    packing::max_packing(mode, &g.inner).map_err(py_err)
}

#[pyfunction]
fn min_partition(mode: &str, g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    let mode: PackingMode = parse(mode)?;
    Ok(packing::min_partition(mode, &g.inner)
        .map_err(py_err)?
        .classes)
}

#[pyfunction]
fn check_two_step_factorization(g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    Ok(transforms::check_two_step_factorization(&g.inner, &h.inner)
        .map_err(py_err)?
        .holds)
}

/// `(value, trace)`.
#[pyfunction]
fn chi_i_direct_cycles(m: usize, n: usize) -> PyResult<(u32, Vec<String>)> {
    let r = formulas::chi_i_direct_cycles(m, n).map_err(py_err)?;
    Ok((
        r.value.exact().expect("direct-cycles value is exact"),
        r.trace,
    ))
}

/// The candidate values of `χᵢ(G ⊙ H)`.
#[pyfunction]
#[pyo3(signature = (g, h, budget_seconds = None))]
fn corona_value_set(g: &PyGraph, h: &PyGraph, budget_seconds: Option<f64>) -> PyResult<Vec<u32>> {
    let r =
        formulas::corona_value_set(&g.inner, &h.inner, budget(budget_seconds)?).map_err(py_err)?;
    Ok(match r.value {
        FormulaValue::Candidates { values } => values,
        FormulaValue::Exact { value } => vec![value],
        FormulaValue::Interval { lower, upper } => (lower..=upper).collect(),
    })
}

/// `(member, witness)` where `witness = (a, b)` with `a·r + b·s = t`.
#[pyfunction]
fn sylvester(r: u64, s: u64, t: u64) -> (bool, Option<(u64, u64)>) {
    let result = formulas::sylvester(r, s, t);
    (result.member, result.witness)
}

/// Cells of a built-in grid: A, B, C, D, PAT11(k), PAT44(s,t) or CE.
#[pyfunction]
fn pattern(name: &str) -> PyResult<Vec<Vec<u32>>> {
    let name: BuiltinPattern = parse(name)?;
    Ok(patterns::builtin(name).map_err(py_err)?.cells)
}

#[pyfunction]
fn five_coloring_strong(k: usize, n: usize) -> PyResult<Vec<Vec<u32>>> {
    Ok(patterns::five_coloring_strong(k, n).map_err(py_err)?.cells)
}

/// `(C_m × C_n, colors)` with an optimal injective coloring.
#[pyfunction]
fn direct_cycle_coloring(m: usize, n: usize) -> PyResult<(PyGraph, Vec<u32>)> {
    let (g, c) = patterns::direct_cycle_coloring(m, n).map_err(py_err)?;
    Ok((g.into(), c.colors().to_vec()))
}

#[pymodule]
fn injcolor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(transform, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(max_packing, m)?)?;
    m.add_function(wrap_pyfunction!(min_partition, m)?)?;
    m.add_function(wrap_pyfunction!(check_two_step_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(chi_i_direct_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(corona_value_set, m)?)?;
    m.add_function(wrap_pyfunction!(sylvester, m)?)?;
    m.add_function(wrap_pyfunction!(pattern, m)?)?;
    m.add_function(wrap_pyfunction!(five_coloring_strong, m)?)?;
    m.add_function(wrap_pyfunction!(direct_cycle_coloring, m)?)?;
    Ok(())
}
