//! Python bindings: contexts, modules and the stable-category operations.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use mstab_core::adjoint::{adjunction_check, AdjointContext, AdjointTriple};
use mstab_core::exact::axiom_audit;
use mstab_core::json::{ContextSpec, ModuleSpec};
use mstab_core::stable::{self, StableHomSummary, DEFAULT_BUDGET};
use mstab_core::{builtin, FpMatrix, ModuleRep, Side};

fn py_err(e: mstab_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or_default().into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn rows(m: &FpMatrix) -> Vec<Vec<u32>> {
    m.to_rows()
}

/// A finite-dimensional module over one side of a context.
#[pyclass(name = "Module", module = "mstab", skip_from_py_object)]
#[derive(Clone)]
struct PyModuleRep {
    inner: ModuleRep,
}

#[pymethods]
impl PyModuleRep {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn prime(&self) -> u32 {
        self.inner.prime().get()
    }

    /// "A" for the big category, "B" for the small one.
    #[getter]
    fn side(&self) -> &'static str {
        match self.inner.side() {
            Side::A => "A",
            Side::B => "B",
        }
    }

    /// Generator matrices, row-major.
    fn actions(&self) -> Vec<Vec<Vec<u32>>> {
        self.inner.actions().iter().map(rows).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&ModuleSpec::from_module(&self.inner)).expect("module specs serialize")
    }

    fn __repr__(&self) -> String {
        format!("<Module {}>", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// An adjoint triple: a group/subgroup pair or a Frobenius algebra.
#[pyclass(name = "Context", module = "mstab")]
struct PyContext {
    inner: AdjointContext,
}

impl PyContext {
    fn wrap(&self, m: ModuleRep) -> PyModuleRep {
        PyModuleRep { inner: m }
    }
}

#[pymethods]
impl PyContext {
    /// Built-in context such as "C3:1:p3", "S3:A3:p3" or "trunc3:p3".
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyContext { inner: builtin::context(name).map_err(py_err)? })
    }

    /// Context from the JSON file format.
    #[staticmethod]
    #[pyo3(signature = (text, name="custom"))]
    fn from_json(text: &str, name: &str) -> PyResult<Self> {
        let spec: ContextSpec = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyContext { inner: spec.build(name).map_err(py_err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn prime(&self) -> u32 {
        self.inner.prime().get()
    }

    #[getter]
    fn index(&self) -> usize {
        self.inner.index()
    }

    /// Built-in module by name ("triv", "J2", "perm", "B:regular", ...).
    fn module(&self, name: &str) -> PyResult<PyModuleRep> {
        Ok(self.wrap(builtin::module(&self.inner, name).map_err(py_err)?))
    }

    /// Module from the JSON file format, validated against this context.
    fn module_from_json(&self, text: &str) -> PyResult<PyModuleRep> {
        let spec: ModuleSpec = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(self.wrap(spec.build(&self.inner).map_err(py_err)?))
    }

    fn induce(&self, y: &PyModuleRep) -> PyResult<PyModuleRep> {
        Ok(self.wrap(self.inner.induce(&y.inner).map_err(py_err)?))
    }

    fn restrict(&self, x: &PyModuleRep) -> PyResult<PyModuleRep> {
        Ok(self.wrap(self.inner.restrict(&x.inner).map_err(py_err)?))
    }

    /// Matrix of the unit `X -> M L X`.
    fn unit(&self, x: &PyModuleRep) -> PyResult<Vec<Vec<u32>>> {
        Ok(rows(self.inner.unit(&x.inner).map_err(py_err)?.matrix()))
    }

    /// Matrix of the counit `M R X -> X`.
    fn counit(&self, x: &PyModuleRep) -> PyResult<Vec<Vec<u32>>> {
        Ok(rows(self.inner.counit(&x.inner).map_err(py_err)?.matrix()))
    }

    fn is_relatively_projective(&self, x: &PyModuleRep) -> PyResult<bool> {
        Ok(stable::is_relatively_projective(&self.inner, &x.inner).map_err(py_err)?.is_some())
    }

    /// `{"dim_hom", "dim_factoring", "dim_stable", "representatives"}`.
    fn stable_hom<'py>(&self, py: Python<'py>, x: &PyModuleRep, y: &PyModuleRep) -> PyResult<Bound<'py, PyAny>> {
        let sh = stable::stable_hom(&self.inner, &x.inner, &y.inner).map_err(py_err)?;
        to_py(py, &serde_json::to_value(StableHomSummary::from(&sh)).expect("serializable"))
    }

    fn syzygy(&self, x: &PyModuleRep) -> PyResult<PyModuleRep> {
        Ok(self.wrap(stable::relative_syzygy(&self.inner, &x.inner).map_err(py_err)?.module))
    }

    fn cosyzygy(&self, x: &PyModuleRep) -> PyResult<PyModuleRep> {
        Ok(self.wrap(stable::relative_cosyzygy(&self.inner, &x.inner).map_err(py_err)?.module))
    }

    /// "yes", "no-certified" or "inconclusive".
    #[pyo3(signature = (x, y, seed=0, budget=DEFAULT_BUDGET))]
    fn stable_iso(&self, x: &PyModuleRep, y: &PyModuleRep, seed: u64, budget: u64) -> PyResult<&'static str> {
        let v = stable::is_stably_isomorphic(&self.inner, &x.inner, &y.inner, seed, budget).map_err(py_err)?;
        Ok(v.label())
    }

    /// One dict per axiom: `{"axiom", "checked", "failed", "failure_seeds"}`.
    #[pyo3(signature = (samples=200, seed=0))]
    fn audit<'py>(&self, py: Python<'py>, samples: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = axiom_audit(&self.inner, samples, seed).map_err(py_err)?;
        to_py(py, &serde_json::to_value(&report).expect("serializable"))
    }

    #[pyo3(signature = (samples=20, seed=0))]
    fn adjunction_check<'py>(&self, py: Python<'py>, samples: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = adjunction_check(&self.inner, samples, seed).map_err(py_err)?;
        to_py(py, &serde_json::to_value(&report).expect("serializable"))
    }

    fn __repr__(&self) -> String {
        format!("<Context {} index {}>", self.inner.name(), self.inner.index())
    }
}

/// A nondegenerate form on a built-in algebra ("kC2:p2", "upper2:p2", ...), or None.
#[pyfunction]
#[pyo3(signature = (name, seed=0))]
fn frobenius_form(name: &str, seed: u64) -> PyResult<Option<Vec<u32>>> {
    let alg = builtin::algebra(name).map_err(py_err)?;
    mstab_core::is_frobenius_algebra(&alg, seed).map_err(py_err)
}

#[pymodule]
fn mstab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyContext>()?;
    m.add_class::<PyModuleRep>()?;
    m.add_function(wrap_pyfunction!(frobenius_form, m)?)?;
    Ok(())
}
