//! Python bindings. Results with many fields come back as plain dicts
//! mirroring the JSON the CLI prints.

use econkit::calculus as calc;
use econkit::{econ, finmath, leontief, linsolve, simplex, Category};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

create_exception!(pyeconkit, EconkitError, PyException, "Base class of all econkit errors.");
create_exception!(pyeconkit, InputError, EconkitError, "Malformed input or violated precondition.");
create_exception!(pyeconkit, NoSolutionError, EconkitError, "Singular, infeasible or otherwise unsolvable.");
create_exception!(pyeconkit, NumericalError, EconkitError, "Pole, divergence or iteration limit.");

fn err(e: econkit::Error) -> PyErr {
    let msg = e.to_string();
    match e.category() {
        Category::Input => InputError::new_err(msg),
        Category::NoSolution => NoSolutionError::new_err(msg),
        Category::Numerical => NumericalError::new_err(msg),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_f64()) {
            (Some(i), _) if !n.is_f64() => i.into_pyobject(py)?.into_any(),
            (_, Some(f)) => f.into_pyobject(py)?.into_any(),
            _ => py.None().into_bound(py),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let items = items.iter().map(|i| value_to_py(py, i)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, v) in map {
                d.set_item(k, value_to_py(py, v)?)?;
            }
            d.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(v).map_err(|e| InputError::new_err(e.to_string()))?;
    value_to_py(py, &json)
}

#[pyclass(name = "Matrix", module = "pyeconkit", skip_from_py_object)]
#[derive(Clone)]
struct PyMatrix {
    inner: econkit::Matrix,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<f64>>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: econkit::Matrix::from_rows(&rows).map_err(err)?,
        })
    }

    /// Parses the comma-separated matrix text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: econkit::text::parse_matrix(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: econkit::Matrix::identity(n).map_err(err)?,
        })
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    fn to_list(&self) -> Vec<Vec<f64>> {
        self.inner.to_rows()
    }

    fn to_text(&self) -> String {
        econkit::text::format_matrix(&self.inner)
    }

    fn transpose(&self) -> Self {
        PyMatrix {
            inner: self.inner.transpose(),
        }
    }

    fn det(&self) -> PyResult<f64> {
        linsolve::determinant(&self.inner).map_err(err)
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: linsolve::inverse(&self.inner).map_err(err)?,
        })
    }

    fn rank(&self) -> usize {
        linsolve::rank(&self.inner)
    }

    /// Eigenvalues and unit eigenvectors of a symmetric matrix, n ≤ 3.
    fn eigen(&self) -> PyResult<Vec<(f64, Vec<f64>)>> {
        let pairs = linsolve::eigen_sym(&self.inner).map_err(err)?;
        Ok(pairs.into_iter().map(|p| (p.value, p.vector.into_entries())).collect())
    }

    fn __matmul__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __add__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __sub__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: self.inner.sub(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, lambda: f64) -> Self {
        PyMatrix {
            inner: self.inner.scale(lambda),
        }
    }

    fn __rmul__(&self, lambda: f64) -> Self {
        self.__mul__(lambda)
    }

    fn __eq__(&self, other: PyRef<'_, PyMatrix>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?})", self.inner.to_rows())
    }
}

#[pyclass(name = "Expr", module = "pyeconkit", skip_from_py_object)]
#[derive(Clone)]
struct PyExpr {
    inner: calc::Expr,
}

fn wrap(inner: calc::Expr) -> PyExpr {
    PyExpr { inner }
}

#[pymethods]
impl PyExpr {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(wrap(calc::parse(text).map_err(err)?))
    }

    fn __call__(&self, x: f64) -> PyResult<f64> {
        self.inner.eval(x).map_err(err)
    }

    #[pyo3(signature = (order = 1))]
    fn diff(&self, order: usize) -> Self {
        wrap(calc::nth_derivative(&self.inner, order))
    }

    fn elasticity(&self, x: f64) -> PyResult<f64> {
        calc::elasticity(&self.inner, x).map_err(err)
    }

    fn second_elasticity(&self, x: f64) -> PyResult<f64> {
        calc::second_elasticity(&self.inner, x).map_err(err)
    }

    /// A primitive from the integration table, or None.
    fn antiderivative(&self) -> Option<Self> {
        calc::antiderivative(&self.inner).map(wrap)
    }

    fn integrate(&self, a: f64, b: f64) -> PyResult<f64> {
        calc::integrate(&self.inner, a, b).map_err(err)
    }

    #[pyo3(signature = (lo, hi, tol = calc::DEFAULT_TOL))]
    fn roots(&self, lo: f64, hi: f64, tol: f64) -> PyResult<Vec<f64>> {
        calc::roots(&self.inner, lo, hi, tol).map_err(err)
    }

    /// Curve sketch of a rational function as a dict.
    fn report<'py>(&self, py: Python<'py>, lo: f64, hi: f64) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &calc::curve_report(&self.inner, lo, hi).map_err(err)?)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Expr({:?})", self.inner.to_string())
    }

    fn __eq__(&self, other: PyRef<'_, PyExpr>) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "LinearProgram", module = "pyeconkit")]
struct PyLinearProgram {
    inner: simplex::LinearProgram,
}

#[pymethods]
impl PyLinearProgram {
    /// `sense` is "max" (A x ≤ b) or "min" (A x ≥ b).
    #[new]
    #[pyo3(signature = (c, a, b, sense = "max", d = 0.0))]
    fn new(c: Vec<f64>, a: Vec<Vec<f64>>, b: Vec<f64>, sense: &str, d: f64) -> PyResult<Self> {
        let sense = match sense {
            "max" => simplex::Sense::Max,
            "min" => simplex::Sense::Min,
            other => return Err(InputError::new_err(format!("sense must be 'max' or 'min', got {other:?}"))),
        };
        Ok(PyLinearProgram {
            inner: simplex::LinearProgram::new(sense, c, d, a, b).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyLinearProgram {
            inner: simplex::LinearProgram::from_json(text).map_err(err)?,
        })
    }

    /// Simplex result {status, x, z, slacks, iterations}.
    fn solve<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &simplex::solve_simplex(&self.inner).map_err(err)?)
    }

    /// Vertex enumeration for two variables.
    fn graph<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &simplex::vertex_oracle(&self.inner).map_err(err)?)
    }
}

/// Classifies and solves A·x = b.
#[pyfunction]
fn solve<'py>(py: Python<'py>, a: PyRef<'_, PyMatrix>, b: Vec<f64>) -> PyResult<Bound<'py, PyAny>> {
    let b = econkit::Vector::new(b).map_err(err)?;
    let sys = linsolve::LinearSystem::new(a.inner.clone(), b).map_err(err)?;
    to_py(py, &linsolve::solve(&sys))
}

/// Input-output model of a deliveries table: q, P and (1−P)⁻¹.
#[pyfunction]
fn leontief_table<'py>(
    py: Python<'py>,
    deliveries: PyRef<'_, PyMatrix>,
    final_demand: Vec<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let y = econkit::Vector::new(final_demand).map_err(err)?;
    let table = leontief::DeliveriesTable::new(deliveries.inner.clone(), y).map_err(err)?;
    let tm = leontief::model_from_table(&table).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("q", tm.total_output.entries().to_vec())?;
    d.set_item("P", PyMatrix { inner: tm.model.input_output().clone() })?;
    d.set_item(
        "total_demand",
        PyMatrix {
            inner: tm.model.total_demand_matrix().map_err(err)?,
        },
    )?;
    Ok(d.into_any())
}

/// Total output q = (1−P)⁻¹·y.
#[pyfunction]
fn total_output(p: PyRef<'_, PyMatrix>, y: Vec<f64>) -> PyResult<Vec<f64>> {
    let model = leontief::LeontiefModel::new(p.inner.clone()).map_err(err)?;
    let y = econkit::Vector::new(y).map_err(err)?;
    Ok(model.total_output(&y).map_err(err)?.values)
}

#[pyfunction]
fn compound(k0: f64, q: f64, n: f64) -> f64 {
    finmath::compound(k0, q, n)
}

/// (q_eff, p_eff) for a nominal percentage compounded m times a year.
#[pyfunction]
fn effective_rate(p_nom: f64, m: u32) -> PyResult<(f64, f64)> {
    finmath::effective_rate(p_nom, m).map_err(err)
}

#[pyfunction]
fn master_formula(k0: f64, q: f64, r: f64, n: u32) -> PyResult<f64> {
    finmath::master_formula(k0, q, r, n).map_err(err)
}

/// Redemption plan; give exactly one of `t` (percent) and `annuity`.
#[pyfunction]
#[pyo3(signature = (r0, p, t = None, annuity = None, horizon = None))]
fn redemption_plan<'py>(
    py: Python<'py>,
    r0: f64,
    p: f64,
    t: Option<f64>,
    annuity: Option<f64>,
    horizon: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let repayment = match (t, annuity) {
        (Some(t), None) => finmath::Repayment::Rate(t),
        (None, Some(a)) => finmath::Repayment::Annuity(a),
        _ => return Err(InputError::new_err("give exactly one of t and annuity")),
    };
    to_py(py, &finmath::redemption_plan(r0, p, repayment, horizon).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (k0, p, m, a, horizon = None))]
fn pension_plan<'py>(py: Python<'py>, k0: f64, p: f64, m: u32, a: f64, horizon: Option<u32>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &finmath::pension_plan(k0, p, m, a, horizon).map_err(err)?)
}

/// Depreciation over `n` years; give exactly one of `linear` (useful life)
/// and `declining` (percent).
#[pyfunction]
#[pyo3(signature = (k0, n, linear = None, declining = None))]
fn depreciation<'py>(
    py: Python<'py>,
    k0: f64,
    n: u32,
    linear: Option<u32>,
    declining: Option<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let method = match (linear, declining) {
        (Some(life), None) => finmath::Depreciation::Linear(life),
        (None, Some(p)) => finmath::Depreciation::Declining(p),
        _ => return Err(InputError::new_err("give exactly one of linear and declining")),
    };
    to_py(py, &finmath::depreciation(k0, method, n).map_err(err)?)
}

#[pyfunction]
fn cost_analysis<'py>(py: Python<'py>, a3: f64, a2: f64, a1: f64, a0: f64) -> PyResult<Bound<'py, PyAny>> {
    let c = econ::CostModel::new(a3, a2, a1, a0).map_err(err)?;
    to_py(py, &econ::cost_analysis(&c).map_err(err)?)
}

/// Break-even, profit limit and maximum for price `p(x)` and cubic costs.
#[pyfunction]
fn profit_analysis<'py>(
    py: Python<'py>,
    price: PyRef<'_, PyExpr>,
    cost: (f64, f64, f64, f64),
    lo: f64,
    hi: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let c = econ::CostModel::new(cost.0, cost.1, cost.2, cost.3).map_err(err)?;
    let m = econ::MarketModel::new(price.inner.clone(), c, (lo, hi)).map_err(err)?;
    to_py(py, &econ::profit_analysis(&m).map_err(err)?)
}

#[pyfunction]
fn market_strategies<'py>(
    py: Python<'py>,
    demand: PyRef<'_, PyExpr>,
    supply: PyRef<'_, PyExpr>,
    p_u: f64,
    p_o: f64,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &econ::market_strategies(&demand.inner, &supply.inner, p_u, p_o).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (x, a = 1.0))]
fn psych_value(x: f64, a: f64) -> PyResult<f64> {
    econ::psych_value(x, a).map_err(err)
}

#[pymodule]
fn pyeconkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("EconkitError", py.get_type::<EconkitError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("NoSolutionError", py.get_type::<NoSolutionError>())?;
    m.add("NumericalError", py.get_type::<NumericalError>())?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyExpr>()?;
    m.add_class::<PyLinearProgram>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(leontief_table, m)?)?;
    m.add_function(wrap_pyfunction!(total_output, m)?)?;
    m.add_function(wrap_pyfunction!(compound, m)?)?;
    m.add_function(wrap_pyfunction!(effective_rate, m)?)?;
    m.add_function(wrap_pyfunction!(master_formula, m)?)?;
    m.add_function(wrap_pyfunction!(redemption_plan, m)?)?;
    m.add_function(wrap_pyfunction!(pension_plan, m)?)?;
    m.add_function(wrap_pyfunction!(depreciation, m)?)?;
    m.add_function(wrap_pyfunction!(cost_analysis, m)?)?;
    m.add_function(wrap_pyfunction!(profit_analysis, m)?)?;
    m.add_function(wrap_pyfunction!(market_strategies, m)?)?;
    m.add_function(wrap_pyfunction!(psych_value, m)?)?;
    Ok(())
}
