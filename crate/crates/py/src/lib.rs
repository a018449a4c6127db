//! Python bindings. Rationals cross the boundary as `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use qf48::basis::{basis_rank as rank_of, descriptors, MIN_PRECISION};
use qf48::decompose::{compare_with_paper_tables, decompose_form};
use qf48::exact_arith::{format_rational, Rational};
use qf48::formulas;
use qf48::oracle;
use qf48::report;
use qf48::tables::Table;
use qf48::theta::{self, catalogue as form_catalogue, classify_character, form_theta_product, Space};

const DEFAULT_PRECISION: usize = 200;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(r),))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn parse_space(s: &str) -> PyResult<Space> {
    s.parse().map_err(value_error)
}

fn check_precision(p: usize) -> PyResult<()> {
    if p < MIN_PRECISION {
        return Err(value_error(format!("precision must be at least {MIN_PRECISION}")));
    }
    Ok(())
}

/// A diagonal quaternary form, e.g. `QuadForm("q1:1,1,1,4")`.
#[pyclass(name = "QuadForm", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyQuadForm(theta::QuadForm);

#[pymethods]
impl PyQuadForm {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.0.family()
    }

    #[getter]
    fn coefficients(&self) -> Vec<u32> {
        self.0.coefficients()
    }

    /// Name of the space the theta product lies in (`chi0`, `chi8`, ...).
    #[getter]
    fn space(&self) -> PyResult<String> {
        classify_character(&self.0).map(|s| s.to_string()).map_err(value_error)
    }

    /// Number of integer solutions of `Q(x) = n`, by enumeration.
    fn count(&self, n: u64) -> u64 {
        oracle::count(&self.0, n)
    }

    /// Coefficients `0..precision` of the theta product.
    #[pyo3(signature = (precision = DEFAULT_PRECISION))]
    fn theta<'py>(&self, py: Python<'py>, precision: usize) -> PyResult<Bound<'py, PyList>> {
        fractions(py, form_theta_product(&self.0, precision).coeffs())
    }

    #[pyo3(signature = (precision = DEFAULT_PRECISION))]
    fn decompose(&self, precision: usize) -> PyResult<PyDecomposition> {
        check_precision(precision)?;
        let dec = decompose_form(&self.0, precision).map_err(value_error)?;
        Ok(PyDecomposition {
            space: dec.space,
            coefficients: dec.coefficients,
            verified_to: dec.verified_to,
        })
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadForm('{}')", self.0)
    }
}

/// Coordinates of a theta product in the ordered basis of its space.
#[pyclass(name = "Decomposition", frozen)]
struct PyDecomposition {
    space: Space,
    coefficients: Vec<Rational>,
    verified_to: usize,
}

#[pymethods]
impl PyDecomposition {
    #[getter]
    fn space(&self) -> String {
        self.space.to_string()
    }

    #[getter]
    fn coefficients<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, &self.coefficients)
    }

    #[getter]
    fn verified_to(&self) -> usize {
        self.verified_to
    }

    /// Basis element names, aligned with `coefficients`.
    #[getter]
    fn basis(&self) -> Vec<String> {
        descriptors(self.space).iter().map(ToString::to_string).collect()
    }

    /// `Σ α_i A_i(n)`; `n` may exceed the precision used to solve.
    fn coefficient_at<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
        let basis = qf48::basis::build_basis(self.space, (n + 1).max(MIN_PRECISION)).map_err(value_error)?;
        let value: Rational = self
            .coefficients
            .iter()
            .zip(basis.iter())
            .map(|(a, f)| a * f.coeff(n))
            .sum();
        fraction(py, &value)
    }

    fn __repr__(&self) -> String {
        let cs: Vec<String> = self.coefficients.iter().map(format_rational).collect();
        format!("Decomposition({}, [{}])", self.space, cs.join(", "))
    }
}

#[pyfunction]
fn kronecker_symbol(d: i64, n: i64) -> i32 {
    qf48::kronecker_symbol(d, n)
}

/// Every form in the catalogue, as spec strings.
#[pyfunction]
fn catalogue() -> Vec<String> {
    form_catalogue().iter().map(|f| f.form.to_string()).collect()
}

#[pyfunction]
#[pyo3(signature = (space, precision = DEFAULT_PRECISION))]
fn basis_rank(space: &str, precision: usize) -> PyResult<usize> {
    check_precision(precision)?;
    rank_of(parse_space(space)?, precision).map_err(value_error)
}

#[pyfunction]
fn basis_names(space: &str) -> PyResult<Vec<String>> {
    Ok(descriptors(parse_space(space)?).iter().map(ToString::to_string).collect())
}

/// Expands a series spec such as `phi(1,2)`, `E2(chi-4,chi-4,3)`, `D24`
/// or `q2:1,2`.
#[pyfunction]
#[pyo3(signature = (spec, precision = DEFAULT_PRECISION))]
fn expand<'py>(py: Python<'py>, spec: &str, precision: usize) -> PyResult<Bound<'py, PyList>> {
    let series = report::parse_series(spec, precision).map_err(value_error)?;
    fractions(py, series.coeffs())
}

/// Evaluates a named formula (`N2_1_2`, `N3_1_3_1_sample`,
/// `N1_1_2_4_4_closed`, `N3_3_6_2_recomputed`, ...) at `n`.
#[pyfunction]
#[pyo3(signature = (name, n, precision = DEFAULT_PRECISION))]
fn evaluate<'py>(py: Python<'py>, name: &str, n: u64, precision: usize) -> PyResult<Bound<'py, PyAny>> {
    let v = formulas::evaluate(name, n, precision).map_err(value_error)?;
    fraction(py, &v)
}

/// Table comparison as the JSON string the CLI would print.
#[pyfunction]
#[pyo3(signature = (tables = vec!["2".to_string(), "3".to_string(), "C".to_string()], precision = DEFAULT_PRECISION))]
fn verify_tables(tables: Vec<String>, precision: usize) -> PyResult<String> {
    check_precision(precision)?;
    let which = tables
        .iter()
        .map(|t| Table::parse_label(t).ok_or_else(|| value_error(format!("unknown table `{t}`"))))
        .collect::<PyResult<Vec<_>>>()?;
    let reports = compare_with_paper_tables(&which, precision).map_err(value_error)?;
    serde_json::to_string(&reports).map_err(value_error)
}

#[pymodule]
fn pyqf48(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuadForm>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(kronecker_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(catalogue, m)?)?;
    m.add_function(wrap_pyfunction!(basis_rank, m)?)?;
    m.add_function(wrap_pyfunction!(basis_names, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    Ok(())
}
