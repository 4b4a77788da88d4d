//! Python bindings. Algebras, modules and stratifications are exposed as
//! classes; reports come back as plain dicts.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule as PyMod;
use serde_json::Value;

use stratalg::algebra::{is_symmetric, Algebra};
use stratalg::homological::{ext_dim, global_dimension};
use stratalg::json::{algebra_to_string, module_to_string, parse_algebra, parse_module};
use stratalg::module::{dualize, hom_dim, is_isomorphic, Module as RustModule};
use stratalg::serre::{basic_projective, check_serrecoapprox_equivalence, nakayama, projective_injective_vertices, Coapp};
use stratalg::strat::{StratOrder, Stratified as RustStratified};
use stratalg::tilting::{dc_tilting, ringel_dual, tilting_data};
use stratalg::zoo;

create_exception!(stratalg_py, StratalgError, PyValueError);

const CAP: usize = 20;

fn err(e: stratalg::Error) -> PyErr {
    StratalgError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (v.to_string(),))?.unbind())
}

#[pyclass(name = "Algebra", module = "stratalg_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAlgebra {
    inner: Arc<Algebra>,
}

impl PyAlgebra {
    fn vertices(&self, labels: &[String]) -> PyResult<Vec<usize>> {
        labels.iter().map(|l| self.inner.vertex(l).map_err(err)).collect()
    }
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: parse_algebra(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn zoo(name: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: zoo::zoo_get(name).map_err(err)?.algebra,
        })
    }

    fn to_json(&self) -> String {
        algebra_to_string(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.vertex_labels().to_vec()
    }

    fn basis(&self) -> Vec<String> {
        self.inner.basis_names()
    }

    fn cartan(&self) -> Vec<Vec<usize>> {
        self.inner.cartan_matrix()
    }

    fn centre_dim(&self) -> usize {
        self.inner.centre().dim()
    }

    fn is_symmetric(&self) -> bool {
        is_symmetric(&self.inner).symmetric
    }

    /// `None` when the global dimension exceeds `cap`.
    #[pyo3(signature = (cap = CAP))]
    fn global_dimension(&self, cap: usize) -> Option<usize> {
        global_dimension(&self.inner, cap).finite()
    }

    fn projective_injective(&self) -> Vec<String> {
        let vs = projective_injective_vertices(&self.inner);
        vs.iter().map(|&v| self.inner.vertex_label(v).to_string()).collect()
    }

    fn opposite(&self) -> Self {
        PyAlgebra {
            inner: self.inner.opposite(),
        }
    }

    fn projective(&self, label: &str) -> PyResult<PyRepModule> {
        let v = self.inner.vertex(label).map_err(err)?;
        Ok(RustModule::projective(&self.inner, v).into())
    }

    fn injective(&self, label: &str) -> PyResult<PyRepModule> {
        let v = self.inner.vertex(label).map_err(err)?;
        Ok(RustModule::injective(&self.inner, v).into())
    }

    fn simple(&self, label: &str) -> PyResult<PyRepModule> {
        let v = self.inner.vertex(label).map_err(err)?;
        Ok(RustModule::simple(&self.inner, v).into())
    }

    /// Conditions (i), (ii), (iii) for the basic projective on `q`.
    fn serre_conditions(&self, py: Python<'_>, q: Vec<String>) -> PyResult<Py<PyAny>> {
        let qm = basic_projective(&self.inner, &self.vertices(&q)?);
        let r = check_serrecoapprox_equivalence(&self.inner, &qm).map_err(err)?;
        to_py(
            py,
            &serde_json::json!({ "i": r.cond_i, "ii": r.cond_ii, "iii": r.cond_iii, "allEqual": r.all_equal }),
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        *self.inner == *other.inner
    }

    fn __repr__(&self) -> String {
        format!("Algebra(vertices={:?}, dim={})", self.inner.vertex_labels(), self.inner.dim())
    }
}

#[pyclass(name = "Module", module = "stratalg_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRepModule {
    inner: RustModule,
}

impl From<RustModule> for PyRepModule {
    fn from(inner: RustModule) -> Self {
        PyRepModule { inner }
    }
}

#[pymethods]
impl PyRepModule {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(parse_module(text).map_err(err)?.into())
    }

    fn to_json(&self) -> String {
        module_to_string(&self.inner)
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    #[getter]
    fn algebra(&self) -> PyAlgebra {
        PyAlgebra {
            inner: self.inner.algebra().clone(),
        }
    }

    fn hom_dim(&self, other: &Self) -> PyResult<usize> {
        self.inner.check_same_algebra(&other.inner).map_err(err)?;
        Ok(hom_dim(&self.inner, &other.inner))
    }

    #[pyo3(signature = (other, n, cap = CAP))]
    fn ext_dim(&self, other: &Self, n: usize, cap: usize) -> PyResult<usize> {
        self.inner.check_same_algebra(&other.inner).map_err(err)?;
        ext_dim(&self.inner, &other.inner, n, cap).map_err(err)
    }

    fn is_isomorphic(&self, other: &Self) -> PyResult<bool> {
        self.inner.check_same_algebra(&other.inner).map_err(err)?;
        is_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    /// Vector space dual, a module over the opposite algebra.
    fn dual(&self) -> Self {
        dualize(&self.inner).into()
    }

    fn nakayama(&self) -> Self {
        nakayama(&self.inner).into()
    }

    /// `Coapp_Q^k` for the basic projective with heads `q`.
    fn coapp(&self, q: Vec<String>, k: usize) -> PyResult<Self> {
        let alg = PyAlgebra {
            inner: self.inner.algebra().clone(),
        };
        let c = Coapp::from_vertices(&alg.vertices(&q)?);
        Ok(c.power(&self.inner, k).into())
    }

    fn direct_sum(&self, other: &Self) -> PyResult<Self> {
        self.inner.check_same_algebra(&other.inner).map_err(err)?;
        let alg = self.inner.algebra();
        Ok(RustModule::direct_sum(alg, &[self.inner.clone(), other.inner.clone()]).into())
    }

    fn __repr__(&self) -> String {
        format!("Module(dims={:?})", self.inner.dims())
    }
}

#[pyclass(name = "Stratified", module = "stratalg_py", frozen)]
struct PyStratified {
    inner: RustStratified,
}

impl PyStratified {
    fn vertex(&self, label: &str) -> PyResult<usize> {
        self.inner.algebra().vertex(label).map_err(err)
    }
}

#[pymethods]
impl PyStratified {
    /// `pairs` lists `(λ, μ)` with `λ ⪯ μ`.
    #[new]
    fn new(alg: &PyAlgebra, pairs: Vec<(String, String)>) -> PyResult<Self> {
        let order = StratOrder::from_pairs(alg.inner.vertex_labels(), &pairs).map_err(err)?;
        Ok(PyStratified {
            inner: RustStratified::new(&alg.inner, order).map_err(err)?,
        })
    }

    #[staticmethod]
    fn zoo(name: &str) -> PyResult<Self> {
        let e = zoo::zoo_get(name).map_err(err)?;
        Ok(PyStratified {
            inner: RustStratified::new(&e.algebra, e.order).map_err(err)?,
        })
    }

    fn standardly_stratified(&self) -> bool {
        self.inner.is_standardly_stratified()
    }

    fn quasi_hereditary(&self) -> PyResult<bool> {
        self.inner.is_quasi_hereditary().map_err(err)
    }

    fn properly_stratified(&self) -> PyResult<bool> {
        self.inner.is_properly_stratified().map_err(err)
    }

    fn standard(&self, label: &str) -> PyResult<PyRepModule> {
        Ok(self.inner.standard(self.vertex(label)?).clone().into())
    }

    fn proper_standard(&self, label: &str) -> PyResult<PyRepModule> {
        Ok(self.inner.proper_standard(self.vertex(label)?).clone().into())
    }

    fn costandard(&self, label: &str) -> PyResult<PyRepModule> {
        Ok(self.inner.costandard(self.vertex(label)?).clone().into())
    }

    fn proper_costandard(&self, label: &str) -> PyResult<PyRepModule> {
        Ok(self.inner.proper_costandard(self.vertex(label)?).clone().into())
    }

    /// Indecomposable tilting modules in vertex order.
    fn tilting(&self) -> PyResult<Vec<PyRepModule>> {
        let td = tilting_data(&self.inner).map_err(err)?;
        Ok(td.modules.into_iter().map(Into::into).collect())
    }

    fn ringel_dual(&self) -> PyResult<PyAlgebra> {
        let td = tilting_data(&self.inner).map_err(err)?;
        Ok(PyAlgebra {
            inner: ringel_dual(&td).map_err(err)?.presented.algebra,
        })
    }

    /// Summands of the tilting module with the double centraliser property.
    fn dc_tilting(&self) -> PyResult<Vec<PyRepModule>> {
        let td = tilting_data(&self.inner).map_err(err)?;
        let dc = dc_tilting(&td).map_err(err)?;
        Ok(dc.x_summands.into_iter().map(Into::into).collect())
    }
}

#[pyfunction]
fn zoo_list() -> Vec<&'static str> {
    zoo::zoo_list()
}

#[pyfunction]
fn zoo_report(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    let e = zoo::zoo_get(name).map_err(err)?;
    to_py(py, &zoo::zoo_report(&e).map_err(err)?)
}

/// Raises `StratalgError` naming the first field that differs from the pinned value.
#[pyfunction]
fn zoo_verify(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    to_py(py, &zoo::zoo_verify(name).map_err(err)?)
}

/// Full report for an algebra with an order and the head vertices of `Q`.
#[pyfunction]
#[pyo3(signature = (alg, pairs, q = None))]
fn analyze(py: Python<'_>, alg: &PyAlgebra, pairs: Vec<(String, String)>, q: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
    let order = StratOrder::from_pairs(alg.inner.vertex_labels(), &pairs).map_err(err)?;
    let qv = match q {
        Some(q) => alg.vertices(&q)?,
        None => projective_injective_vertices(&alg.inner),
    };
    to_py(py, &zoo::analyze(&alg.inner, &order, &qv).map_err(err)?)
}

#[pymodule]
fn stratalg_py(m: &Bound<'_, PyMod>) -> PyResult<()> {
    m.add("StratalgError", m.py().get_type::<StratalgError>())?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyRepModule>()?;
    m.add_class::<PyStratified>()?;
    m.add_function(wrap_pyfunction!(zoo_list, m)?)?;
    m.add_function(wrap_pyfunction!(zoo_report, m)?)?;
    m.add_function(wrap_pyfunction!(zoo_verify, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
