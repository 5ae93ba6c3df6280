//! Python bindings: `import edslab`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use eds_lab::enumeration::{ConstraintSpec, FreeTrees};
use eds_lab::formats;
use eds_lab::harness::{self, ParamFilter, TheoremId, Verifier};
use eds_lab::invariants::{self, InvariantRecord};
use eds_lab::{FamilySpec, FormulaId, Invariant, TransformOp};

type Rows = Vec<(String, u64)>;

fn err(e: eds_lab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Tree", module = "edslab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyTree {
    inner: eds_lab::Tree,
}

#[pymethods]
impl PyTree {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = eds_lab::Tree::from_edges(n, &edges).map_err(err)?;
        Ok(PyTree { inner })
    }

    /// Builds a named family member, e.g. `Tree.family("broom:4,1,5")`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        Ok(PyTree { inner: spec.build().map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        Ok(PyTree { inner: formats::parse_graph6(s).map_err(err)? })
    }

    #[staticmethod]
    fn from_code(code: &str) -> PyResult<Self> {
        let code: eds_lab::CanonicalCode = code.parse().map_err(err)?;
        Ok(PyTree { inner: code.to_tree() })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn graph6(&self) -> String {
        formats::to_graph6(&self.inner)
    }

    fn canonical_code(&self) -> String {
        eds_lab::canonical_code(&self.inner).to_string()
    }

    fn isomorphic(&self, other: &PyTree) -> bool {
        eds_lab::isomorphic(&self.inner, &other.inner)
    }

    fn eds(&self) -> u64 {
        invariants::eds(&self.inner)
    }

    fn eccentricities(&self) -> Vec<u64> {
        invariants::eccentricities(&self.inner).into_inner()
    }

    fn transmissions(&self) -> Vec<u64> {
        invariants::transmissions(&self.inner).into_inner()
    }

    fn domination_number(&self) -> usize {
        eds_lab::domination_number(&self.inner)
    }

    fn matching_number(&self) -> usize {
        eds_lab::matching_number(&self.inner)
    }

    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = InvariantRecord::of(&self.inner);
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("eds", r.eds)?;
        d.set_item("wiener", r.wiener)?;
        d.set_item("degree_distance", r.degree_distance)?;
        d.set_item("ecc_connectivity", r.ecc_connectivity)?;
        d.set_item("total_eccentricity", r.total_eccentricity)?;
        d.set_item("radius", r.radius)?;
        d.set_item("diameter", r.diameter)?;
        d.set_item("center", r.center)?;
        d.set_item("leaf_count", r.leaf_count)?;
        d.set_item("bipartition", r.bipartition)?;
        Ok(d)
    }

    /// Applies `egt`, `rho`, `slide` or `t1`; returns `(tree, eds_before, eds_after, relation)`.
    fn transform(&self, op: &str, args: Vec<usize>) -> PyResult<(PyTree, u64, u64, String)> {
        let op: TransformOp = op.parse().map_err(err)?;
        let (out, _) = op.apply(&self.inner, &args).map_err(err)?;
        Ok((PyTree { inner: out.result }, out.eds_before, out.eds_after, out.relation.name().to_string()))
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Tree(n={}, code='{}')", self.inner.order(), eds_lab::canonical_code(&self.inner))
    }
}

fn constraint(leaves: Option<usize>, gamma: Option<usize>, beta: Option<usize>, bipartition: Option<(usize, usize)>) -> ConstraintSpec {
    ConstraintSpec { leaf_count: leaves, domination: gamma, matching: beta, bipartition }
}

/// Canonical codes of all free trees of order `n` matching the filters.
#[pyfunction]
#[pyo3(signature = (n, leaves=None, gamma=None, beta=None, bipartition=None))]
fn free_trees(
    n: usize,
    leaves: Option<usize>,
    gamma: Option<usize>,
    beta: Option<usize>,
    bipartition: Option<(usize, usize)>,
) -> PyResult<Vec<String>> {
    let spec = constraint(leaves, gamma, beta, bipartition);
    Ok(FreeTrees::new(n)
        .map_err(err)?
        .filter(|c| spec.accepts(&c.to_tree()))
        .map(|c| c.to_string())
        .collect())
}

/// Evaluates a closed form; returns `(value, valid)`.
#[pyfunction]
fn formula(name: &str, args: Vec<i128>) -> PyResult<(i128, bool)> {
    let id: FormulaId = name.parse().map_err(err)?;
    let e = id.evaluate(&args).map_err(err)?;
    Ok((e.value, e.valid))
}

/// Bottom and top `(code, value)` rows of an invariant over a class.
#[pyfunction]
#[pyo3(signature = (n, invariant="eds", bottom=3, top=3, leaves=None, gamma=None, beta=None, bipartition=None))]
#[allow(clippy::too_many_arguments)]
fn extremal_scan(
    n: usize,
    invariant: &str,
    bottom: usize,
    top: usize,
    leaves: Option<usize>,
    gamma: Option<usize>,
    beta: Option<usize>,
    bipartition: Option<(usize, usize)>,
) -> PyResult<(Rows, Rows)> {
    let inv: Invariant = invariant.parse().map_err(err)?;
    let t = harness::extremal_scan(n, constraint(leaves, gamma, beta, bipartition), inv, bottom, top).map_err(err)?;
    let rows = |v: Vec<harness::ScanRow>| v.into_iter().map(|r| (r.code.to_string(), r.value)).collect();
    Ok((rows(t.bottom), rows(t.top)))
}

/// Runs a verifier and returns the reports as JSON lines.
#[pyfunction]
#[pyo3(signature = (theorem, order, params="", jobs=0))]
fn verify(py: Python<'_>, theorem: &str, order: &str, params: &str, jobs: usize) -> PyResult<Vec<String>> {
    let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(err)?]
    };
    let orders = harness::parse_order_range(order).map_err(err)?;
    let filter: ParamFilter = params.parse().map_err(err)?;
    let reports = py
        .detach(|| Verifier::new(jobs).and_then(|v| v.verify_many(&ids, orders, &filter)))
        .map_err(err)?;
    reports
        .iter()
        .map(|r| serde_json::to_string(r).map_err(|e| PyValueError::new_err(e.to_string())))
        .collect()
}

#[pymodule]
fn edslab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(free_trees, m)?)?;
    m.add_function(wrap_pyfunction!(formula, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_scan, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
