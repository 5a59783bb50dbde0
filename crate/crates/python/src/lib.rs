//! Python module `coalition`: graphs, partitions, coalition numbers and path
//! censuses backed by `coalition-core`.

// The pyo3 0.22 method macros trip this lint on every `PyResult` return.
#![allow(clippy::useless_conversion)]

use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use coalition_core as core;
use coalition_core::catalog::{classify_cp, make_named};
use coalition_core::io::{parse_edge_list, parse_graph6, to_graph6};

fn value_err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "coalition", frozen)]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = core::Graph::from_edge_list(n, edges).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// Named graph such as `"P5"`, `"C7"`, `"K1,3"`, `"K1uK2"` or `"S(2,1)"`.
    #[staticmethod]
    fn named(spec: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: make_named(spec).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph6(text).map_err(value_err)?,
        })
    }

    /// Parses the `n m` header plus `u v` lines format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_edge_list(text).map_err(value_err)?,
        })
    }

    fn graph6(&self) -> String {
        to_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn domination_number(&self) -> PyResult<usize> {
        core::domination_number(&self.inner).map_err(value_err)
    }

    fn upper_bound(&self) -> PyResult<usize> {
        core::upper_bound(&self.inner).map_err(value_err)
    }

    /// `C(G)`; `method` is `"bnb"` or `"enumerate"`.
    #[pyo3(signature = (method = "bnb", node_limit = None, time_limit = None))]
    fn coalition_number(
        &self,
        method: &str,
        node_limit: Option<u64>,
        time_limit: Option<f64>,
    ) -> PyResult<SolverResult> {
        let method = match method {
            "bnb" => core::Method::BranchAndBound,
            "enumerate" => core::Method::Enumerate,
            other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
        };
        let mut cfg = core::SolverConfig::new(method);
        if let Some(n) = node_limit {
            cfg = cfg.with_node_limit(n);
        }
        if let Some(s) = time_limit {
            let d = Duration::try_from_secs_f64(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
            cfg = cfg.with_time_limit(d);
        }
        match core::coalition_number_with(&self.inner, &cfg) {
            Ok(r) => Ok(SolverResult::from(r)),
            Err(core::SolverError::Graph(e)) => Err(value_err(e)),
            Err(core::SolverError::LimitExceeded(r)) => Err(PyTimeoutError::new_err(format!(
                "search limit exceeded; best value found {}",
                r.value
            ))),
        }
    }

    /// Every coalition partition, as lists of blocks.
    fn coalition_partitions(&self) -> PyResult<Vec<Vec<Vec<usize>>>> {
        let all = core::coalition_partitions(&self.inner).map_err(value_err)?;
        Ok(all.iter().map(blocks_of).collect())
    }

    /// Validity verdict and per-block status for `partition`.
    fn validate(&self, partition: Vec<Vec<usize>>) -> PyResult<Validity> {
        let p = to_partition(self.inner.order(), partition)?;
        let v = core::validate_partition(&self.inner, &p).map_err(value_err)?;
        Ok(Validity {
            valid: v.is_valid(),
            blocks: v.blocks.iter().map(status_name).collect(),
        })
    }

    /// Coalition graph of a coalition partition.
    fn coalition_graph(&self, partition: Vec<Vec<usize>>) -> PyResult<PyGraph> {
        let p = to_partition(self.inner.order(), partition)?;
        let cg = core::coalition_graph(&self.inner, &p).map_err(value_err)?;
        Ok(PyGraph { inner: cg.graph })
    }

    /// Family member name of this graph, or `"Outside"`.
    fn classify(&self) -> &'static str {
        classify_cp(&self.inner).name()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.order(), self.edges())
    }
}

fn blocks_of(p: &core::VertexPartition) -> Vec<Vec<usize>> {
    p.blocks().iter().map(|b| b.iter().collect()).collect()
}

fn to_partition(n: usize, blocks: Vec<Vec<usize>>) -> PyResult<core::VertexPartition> {
    let sets = blocks
        .into_iter()
        .map(|b| {
            let mut s = core::VertexSet::default();
            for v in b {
                if v >= n {
                    return Err(PyValueError::new_err(format!("vertex {v} out of range")));
                }
                s.insert(v);
            }
            Ok(s)
        })
        .collect::<PyResult<Vec<_>>>()?;
    core::VertexPartition::new(n, sets).map_err(value_err)
}

fn status_name(s: &core::BlockStatus) -> String {
    match s {
        core::BlockStatus::SingletonDominating => "dominating".into(),
        core::BlockStatus::HasPartner(_) => "partnered".into(),
        core::BlockStatus::Orphan => "orphan".into(),
        core::BlockStatus::OversizeDominating => "oversize".into(),
    }
}

#[pyclass(module = "coalition", frozen, get_all)]
struct SolverResult {
    value: usize,
    witness: Option<Vec<Vec<usize>>>,
    upper_bound: usize,
    partitions_examined: u64,
    nodes_pruned: u64,
    elapsed: f64,
}

impl From<core::SolverResult> for SolverResult {
    fn from(r: core::SolverResult) -> Self {
        SolverResult {
            value: r.value,
            witness: r.witness.as_ref().map(blocks_of),
            upper_bound: r.upper_bound,
            partitions_examined: r.stats.partitions_examined,
            nodes_pruned: r.stats.nodes_pruned,
            elapsed: r.stats.elapsed.as_secs_f64(),
        }
    }
}

#[pymethods]
impl SolverResult {
    fn __repr__(&self) -> String {
        match &self.witness {
            Some(w) => format!("SolverResult(value={}, witness={w:?})", self.value),
            None => format!("SolverResult(value={}, witness=None)", self.value),
        }
    }
}

#[pyclass(module = "coalition", frozen, get_all)]
struct Validity {
    valid: bool,
    /// One of `dominating`, `partnered`, `orphan`, `oversize` per block.
    blocks: Vec<String>,
}

#[pymethods]
impl Validity {
    fn __bool__(&self) -> bool {
        self.valid
    }

    fn __repr__(&self) -> String {
        format!(
            "Validity(valid={}, blocks={:?})",
            if self.valid { "True" } else { "False" },
            self.blocks
        )
    }
}

#[pyclass(module = "coalition", frozen, get_all)]
struct Census {
    k: usize,
    nc: usize,
    /// Realised family members in table order.
    classes: Vec<String>,
    /// Lexicographically least witness per realised member.
    witnesses: Vec<(String, Vec<Vec<usize>>)>,
    partitions_scanned: u64,
    valid_partitions: u64,
    outside: u64,
}

#[pymethods]
impl Census {
    fn __repr__(&self) -> String {
        format!("Census(k={}, nc={}, classes={:?})", self.k, self.nc, self.classes)
    }
}

/// Exhaustive census of the coalition partitions of the path on `k` vertices.
#[pyfunction]
fn census_path(py: Python<'_>, k: usize) -> PyResult<Census> {
    let r = py.allow_threads(|| core::census_path(k)).map_err(value_err)?;
    Ok(Census {
        k: r.k,
        nc: r.nc(),
        classes: r.realizable().iter().map(|c| c.name().to_string()).collect(),
        witnesses: r
            .witnesses
            .iter()
            .map(|(c, w)| (c.name().to_string(), blocks_of(w)))
            .collect(),
        partitions_scanned: r.partitions_scanned,
        valid_partitions: r.valid_partitions,
        outside: r.outside_count(),
    })
}

/// Replays the explicit path constructions; returns the failing
/// `(name, k, reason)` triples.
#[pyfunction]
fn verify_constructions(py: Python<'_>, k_max: usize) -> PyResult<Vec<(String, usize, String)>> {
    let rep = py
        .allow_threads(|| core::census::verify_constructions(k_max))
        .map_err(value_err)?;
    Ok(rep
        .failures()
        .map(|c| (c.id.name().to_string(), c.k, format!("{:?}", c.outcome)))
        .collect())
}

/// Number of set partitions of an `n`-set.
#[pyfunction]
fn bell(n: usize) -> PyResult<u64> {
    if n > 24 {
        return Err(PyRuntimeError::new_err("Bell number overflows u64 beyond n = 24"));
    }
    Ok(core::bell(n))
}

#[pymodule]
fn coalition(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<SolverResult>()?;
    m.add_class::<Validity>()?;
    m.add_class::<Census>()?;
    m.add_function(wrap_pyfunction!(census_path, m)?)?;
    m.add_function(wrap_pyfunction!(verify_constructions, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    Ok(())
}
