//! Python bindings: exact matrices, verification reports, bundles and the
//! CLI operations as methods.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use hopfgc::bundle::Bundle;
use hopfgc::cli::{self, Format, Reports};
use hopfgc::{Error, Field};

create_exception!(pyhopfgc, HopfgcError, PyException);

fn err(e: Error) -> PyErr {
    HopfgcError::new_err(e.to_string())
}

fn field_of(spec: Option<&str>) -> PyResult<Option<Field>> {
    spec.map(|s| s.parse::<Field>().map_err(err)).transpose()
}

/// An exact matrix over Q or GF(p). Entries are given as ints or strings
/// such as `"-3/4"`.
#[pyclass(name = "Matrix", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyMatrix(hopfgc::Matrix);

#[derive(FromPyObject)]
enum Entry {
    Int(i64),
    Text(String),
}

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (rows, field = "q", cols = None))]
    fn new(rows: Vec<Vec<Entry>>, field: &str, cols: Option<usize>) -> PyResult<Self> {
        let f: Field = field.parse().map_err(err)?;
        let cols = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
        let mut data = Vec::new();
        for row in &rows {
            if row.len() != cols {
                return Err(HopfgcError::new_err("rows of unequal length"));
            }
            for e in row {
                data.push(match e {
                    Entry::Int(n) => f.from_i64(*n),
                    Entry::Text(s) => f.parse_scalar(s).map_err(err)?,
                });
            }
        }
        hopfgc::Matrix::new(f, rows.len(), cols, data)
            .map(PyMatrix)
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (n, field = "q"))]
    fn identity(n: usize, field: &str) -> PyResult<Self> {
        Ok(PyMatrix(hopfgc::Matrix::identity(
            field.parse().map_err(err)?,
            n,
        )))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().spec_string()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn transpose(&self) -> Self {
        PyMatrix(self.0.transpose())
    }

    fn kron(&self, other: &PyMatrix) -> Self {
        PyMatrix(self.0.kron(&other.0))
    }

    fn inverse(&self) -> Option<Self> {
        self.0.inverse().map(PyMatrix)
    }

    /// Columns spanning the kernel.
    fn kernel(&self) -> Self {
        PyMatrix(self.0.kernel_matrix())
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.0.mul(&other.0).map(PyMatrix).map_err(err)
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.0.add(&other.0).map(PyMatrix).map_err(err)
    }

    fn __sub__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.0.sub(&other.0).map(PyMatrix).map_err(err)
    }

    /// Entries as strings, row by row.
    fn to_list(&self) -> Vec<Vec<String>> {
        self.0.to_strings()
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = self
            .0
            .to_strings()
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        format!("Matrix([{}], field={:?})", rows.join(", "), self.field())
    }
}

/// Outcome of a verification: one check per law and index tuple.
#[pyclass(name = "Report", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyReport(hopfgc::Report);

#[pymethods]
impl PyReport {
    #[getter]
    fn title(&self) -> String {
        self.0.title.clone()
    }

    #[getter]
    fn all_passed(&self) -> bool {
        self.0.all_passed()
    }

    #[getter]
    fn failed_laws(&self) -> Vec<String> {
        self.0.failed_laws().into_iter().collect()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    /// `(law, index, passed, witness)` for every check.
    fn checks(&self) -> Vec<(String, Vec<String>, bool, Option<String>)> {
        self.0
            .checks
            .iter()
            .map(|c| (c.law.clone(), c.index.clone(), c.passed, c.witness.clone()))
            .collect()
    }

    fn to_text(&self) -> String {
        self.0.clone().normalized().to_text()
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.0.clone().normalized()).expect("reports serialize")
    }

    fn __bool__(&self) -> bool {
        self.0.all_passed()
    }

    fn __repr__(&self) -> String {
        format!(
            "<Report {:?}: {} checks, failed {:?}>",
            self.0.title,
            self.0.checks.len(),
            self.0.failed_laws()
        )
    }
}

fn wrap(reports: Reports) -> BTreeMap<String, PyReport> {
    reports.into_iter().map(|(k, r)| (k, PyReport(r))).collect()
}

/// A JSON bundle of groups and entries.
#[pyclass(name = "Bundle", skip_from_py_object)]
#[derive(Clone)]
pub struct PyBundle(Bundle);

#[pymethods]
impl PyBundle {
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        cli::load(&path).map(PyBundle).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Bundle::from_json(text).map(PyBundle).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn field(&self) -> PyResult<String> {
        Ok(self.0.declared_field().map_err(err)?.spec_string())
    }

    fn ids(&self) -> Vec<String> {
        self.0.entries.keys().cloned().collect()
    }

    fn kind(&self, id: &str) -> PyResult<&'static str> {
        Ok(self.0.entry(id).map_err(err)?.kind())
    }

    #[pyo3(signature = (target = None, field = None, workers = 1))]
    fn verify(
        &self,
        py: Python<'_>,
        target: Option<&str>,
        field: Option<&str>,
        workers: usize,
    ) -> PyResult<BTreeMap<String, PyReport>> {
        let f = field_of(field)?;
        let b = &self.0;
        py.detach(|| cli::cmd_verify(b, target, f, workers))
            .map(wrap)
            .map_err(err)
    }

    #[pyo3(signature = (target, field = None))]
    fn dualize(&self, target: &str, field: Option<&str>) -> PyResult<PyBundle> {
        cli::cmd_dualize(&self.0, target, field_of(field)?)
            .map(PyBundle)
            .map_err(err)
    }

    /// Coinvariants and `M ≅ M^coH ⊗ H` for a Hopf module entry.
    #[pyo3(signature = (target, field = None, matrices = false))]
    fn fthm(
        &self,
        target: &str,
        field: Option<&str>,
        matrices: bool,
    ) -> PyResult<BTreeMap<String, PyReport>> {
        cli::cmd_fthm(&self.0, target, field_of(field)?, matrices)
            .map(wrap)
            .map_err(err)
    }

    /// YD and center checks, or a conjugacy-class lift.
    #[pyo3(signature = (target, registry = "standard", field = None))]
    fn yd_check(
        &self,
        target: &str,
        registry: &str,
        field: Option<&str>,
    ) -> PyResult<BTreeMap<String, PyReport>> {
        cli::cmd_yd(&self.0, target, field_of(field)?, registry)
            .map(wrap)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("<Bundle {} entries>", self.0.entries.len())
    }
}

/// Every built-in corpus entry as its own bundle.
#[pyfunction]
#[pyo3(signature = (field = "q"))]
fn corpus(field: &str) -> PyResult<BTreeMap<String, PyBundle>> {
    let f: Field = field.parse().map_err(err)?;
    Ok(cli::corpus_bundles(f)
        .into_iter()
        .map(|(id, b)| (id, PyBundle(b)))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (group = None))]
fn set_demo(group: Option<&str>) -> PyResult<BTreeMap<String, PyReport>> {
    cli::cmd_set_demo(group).map(wrap).map_err(err)
}

/// Reports rendered as the CLI prints them, `text` or `json`.
#[pyfunction]
#[pyo3(signature = (reports, format = "text"))]
fn render(reports: BTreeMap<String, PyReport>, format: &str) -> PyResult<String> {
    let format = match format {
        "text" => Format::Text,
        "json" => Format::Json,
        other => return Err(HopfgcError::new_err(format!("unknown format {other:?}"))),
    };
    let reports: Reports = reports.into_iter().map(|(k, r)| (k, r.0)).collect();
    Ok(cli::render(&reports, format))
}

#[pymodule]
fn pyhopfgc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HopfgcError", m.py().get_type::<HopfgcError>())?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyBundle>()?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    m.add_function(wrap_pyfunction!(set_demo, m)?)?;
    m.add_function(wrap_pyfunction!(render, m)?)?;
    Ok(())
}
