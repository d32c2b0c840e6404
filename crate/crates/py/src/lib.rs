//! Python bindings: diagrams, warping summaries, the oracle, the families
//! and the knot-table verifier.

use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use warpdeg::codes::{gauss_to_dt, gauss_to_pd, parse_any, Notation};
use warpdeg::oracle::{kauffman_bracket, min_changes_to_monotone_capped, MONOTONE_SEARCH_CAP};
use warpdeg::table::{e_hat_bounds, knot_e, knot_md, verify_families, verify_table, Table};
use warpdeg::{families, warping, OrientedDiagram};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn notation(name: Option<&str>) -> PyResult<Option<Notation>> {
    name.map(|n| n.parse::<Notation>().map_err(value_error)).transpose()
}

/// An oriented knot diagram.
#[pyclass(name = "Diagram", module = "warpdeg_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyDiagram {
    inner: OrientedDiagram,
}

#[pyclass(name = "Summary", module = "warpdeg_py", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PySummary {
    pub c: usize,
    pub d_fwd: usize,
    pub d_rev: usize,
    pub e: usize,
    pub spn: usize,
    pub polynomial: Vec<usize>,
}

#[pymethods]
impl PySummary {
    fn __repr__(&self) -> String {
        format!("Summary(c={}, d_fwd={}, d_rev={}, e={}, spn={})", self.c, self.d_fwd, self.d_rev, self.e, self.spn)
    }
}

#[pyclass(name = "OracleResult", module = "warpdeg_py", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyOracleResult {
    pub min_changes: usize,
    pub witness: Vec<usize>,
    pub nodes_searched: u64,
}

#[pymethods]
impl PyDiagram {
    /// Parse a Gauss, DT or PD code; the notation is detected when omitted.
    #[new]
    #[pyo3(signature = (code, notation=None))]
    fn new(code: &str, notation: Option<&str>) -> PyResult<Self> {
        let gauss = parse_any(code, self::notation(notation)?).map_err(value_error)?;
        Ok(Self { inner: OrientedDiagram::from_gauss(&gauss) })
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    fn profile(&self) -> Vec<usize> {
        warping::profile(&self.inner).degrees().to_vec()
    }

    fn warping_degree(&self) -> usize {
        warping::warping_degree(&self.inner)
    }

    fn is_monotone(&self) -> bool {
        warping::is_monotone(&self.inner)
    }

    fn is_alternating(&self) -> bool {
        self.inner.is_alternating()
    }

    fn summary(&self) -> PyResult<PySummary> {
        let s = warping::summary(&self.inner).map_err(value_error)?;
        Ok(PySummary { c: s.c, d_fwd: s.d_fwd, d_rev: s.d_rev, e: s.e, spn: s.spn, polynomial: s.polynomial })
    }

    fn reverse(&self) -> Self {
        Self { inner: self.inner.reverse() }
    }

    fn mirror(&self) -> Self {
        Self { inner: self.inner.mirror() }
    }

    fn rotate(&self, k: i64) -> Self {
        Self { inner: self.inner.rotate(k) }
    }

    fn change_crossings(&self, ids: Vec<usize>) -> PyResult<Self> {
        Ok(Self { inner: self.inner.change_crossings(&ids).map_err(value_error)? })
    }

    /// Encode as `gauss`, `dt` or `pd`.
    #[pyo3(signature = (notation="gauss"))]
    fn code(&self, notation: &str) -> PyResult<String> {
        let g = self.inner.to_gauss();
        match notation.parse::<Notation>().map_err(value_error)? {
            Notation::Gauss => Ok(g.to_string()),
            Notation::Dt => gauss_to_dt(&g).map(|c| c.to_string()).map_err(value_error),
            Notation::Pd => gauss_to_pd(&g).map(|c| c.to_string()).map_err(value_error),
        }
    }

    /// Normalized Kauffman bracket as `(exponent of A, coefficient)` pairs.
    fn bracket(&self) -> PyResult<Vec<(i64, i64)>> {
        Ok(kauffman_bracket(&self.inner).map_err(value_error)?.terms().collect())
    }

    fn determinant(&self) -> PyResult<i64> {
        Ok(kauffman_bracket(&self.inner).map_err(value_error)?.determinant())
    }

    /// Brute-force search for the fewest crossing changes giving a monotone
    /// diagram.
    #[pyo3(signature = (budget=None, cap=None))]
    fn min_changes_to_monotone(&self, budget: Option<usize>, cap: Option<usize>) -> PyResult<PyOracleResult> {
        let budget = budget.unwrap_or(self.inner.crossing_count());
        let r = min_changes_to_monotone_capped(&self.inner, budget, cap.unwrap_or(MONOTONE_SEARCH_CAP))
            .map_err(value_error)?;
        Ok(PyOracleResult { min_changes: r.min_changes, witness: r.witness, nodes_searched: r.nodes_searched })
    }

    fn __repr__(&self) -> String {
        format!("Diagram('{}')", self.inner.to_gauss())
    }

    fn __str__(&self) -> String {
        self.inner.to_gauss().to_string()
    }
}

/// Re-encode a code in another notation.
#[pyfunction]
#[pyo3(signature = (code, to, source=None))]
fn convert(code: &str, to: &str, source: Option<&str>) -> PyResult<String> {
    PyDiagram::new(code, source)?.code(to)
}

#[pyfunction]
fn twist_minimal(n: i64) -> PyResult<PyDiagram> {
    Ok(PyDiagram { inner: families::twist_minimal(n).map_err(value_error)? })
}

#[pyfunction]
fn rational_pq(p: i64, q: i64) -> PyResult<PyDiagram> {
    Ok(PyDiagram { inner: families::rational_pq(p, q).map_err(value_error)? })
}

#[pyfunction]
fn ozawa_twist(n: i64) -> PyResult<PyDiagram> {
    Ok(PyDiagram { inner: families::ozawa_twist(n).map_err(value_error)? })
}

fn load_table(path: Option<PathBuf>) -> PyResult<Table> {
    match path {
        Some(p) => Table::load(&p).map_err(value_error),
        None => Ok(Table::bundled()),
    }
}

/// Per-knot aggregates: `(name, c, (e, exact), (md, exact), (e_hat_lower, e_hat_upper))`.
#[pyfunction]
#[pyo3(signature = (path=None))]
#[allow(clippy::type_complexity)]
fn knot_table(path: Option<PathBuf>) -> PyResult<Vec<(String, usize, (usize, bool), (usize, bool), (usize, usize))>> {
    let table = load_table(path)?;
    Ok(table
        .entries
        .iter()
        .map(|e| (e.name.clone(), e.crossing_number, knot_e(e), knot_md(e), e_hat_bounds(e)))
        .collect())
}

/// Verify a table and the families. Returns `(passed, [(name, scope, passed, details)])`.
#[pyfunction]
#[pyo3(signature = (path=None, seed=0x5eed))]
#[allow(clippy::type_complexity)]
fn verify(path: Option<PathBuf>, seed: u64) -> PyResult<(bool, Vec<(String, String, bool, String)>)> {
    let mut report = verify_table(&load_table(path)?);
    report.extend(verify_families(seed));
    let passed = report.passed();
    Ok((passed, report.checks.into_iter().map(|c| (c.name, c.scope, c.passed, c.details)).collect()))
}

#[pymodule]
pub fn warpdeg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PySummary>()?;
    m.add_class::<PyOracleResult>()?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(twist_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(rational_pq, m)?)?;
    m.add_function(wrap_pyfunction!(ozawa_twist, m)?)?;
    m.add_function(wrap_pyfunction!(knot_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
