//! Python bindings: recurrence schemes, polynomial evaluation, Turán
//! determinants and the theorem verifiers, mirroring the CLI surface.
//!
//! Report-shaped results (certificates, scans, density estimates) come back
//! as JSON strings so Python can `json.loads` them without a conversion
//! layer on this side.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use turankit::bounds;
use turankit::grid::{interior_grid, unit_grid, Spacing};
use turankit::polyeval;
use turankit::reference;
use turankit::schemes::{FamilyDescriptor, OrthonormalScheme, RecurrenceScheme};
use turankit::turan;

fn err(e: turankit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn spacing(name: &str) -> PyResult<Spacing> {
    name.parse::<Spacing>().map_err(PyValueError::new_err)
}

/// A normalized three-term recurrence table (`alpha_n + gamma_n = 1`).
#[pyclass(name = "Scheme")]
struct PyScheme {
    inner: RecurrenceScheme,
}

#[pymethods]
impl PyScheme {
    /// Parse a family descriptor (JSON or `name:args` shorthand).
    #[staticmethod]
    #[pyo3(signature = (descriptor, max_n = 1000))]
    fn parse(descriptor: &str, max_n: usize) -> PyResult<Self> {
        let desc = FamilyDescriptor::parse(descriptor).map_err(err)?;
        Ok(Self { inner: desc.build(max_n).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (a, max_n = 1000))]
    fn jacobi(a: f64, max_n: usize) -> PyResult<Self> {
        Ok(Self { inner: RecurrenceScheme::jacobi_with_max(a, max_n).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (q, beta, max_n = 1000))]
    fn q_ultra(q: f64, beta: f64, max_n: usize) -> PyResult<Self> {
        Ok(Self { inner: RecurrenceScheme::q_ultra_with_max(q, beta, max_n).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (epsilon, max_n = 1000))]
    fn remark28(epsilon: f64, max_n: usize) -> PyResult<Self> {
        Ok(Self { inner: RecurrenceScheme::remark28_with_max(epsilon, max_n).map_err(err)? })
    }

    #[staticmethod]
    fn custom_table(alphas: Vec<f64>) -> PyResult<Self> {
        Ok(Self { inner: RecurrenceScheme::custom_table(alphas).map_err(err)? })
    }

    fn label(&self) -> String {
        self.inner.descriptor().label()
    }

    fn max_n(&self) -> usize {
        self.inner.max_n()
    }

    fn alpha(&self, n: usize) -> PyResult<f64> {
        self.inner.try_alpha(n).map_err(err)
    }

    fn gamma(&self, n: usize) -> PyResult<f64> {
        self.inner.try_gamma(n).map_err(err)
    }

    /// Values `p_0(x), ..., p_n(x)` of the normalized sequence.
    fn eval_p(&self, n: usize, x: f64) -> PyResult<Vec<f64>> {
        Ok(polyeval::eval_p(&self.inner, n, x).map_err(err)?.values)
    }

    /// Values of the second-kind sequence `q_n = (p_{n+2}-p_n)/(x^2-1)`.
    fn eval_q(&self, n: usize, x: f64) -> PyResult<Vec<f64>> {
        Ok(polyeval::eval_q(&self.inner, n, x).map_err(err)?.values)
    }

    fn eval_qtilde(&self, n: usize, x: f64) -> PyResult<Vec<f64>> {
        Ok(polyeval::eval_qtilde(&self.inner, n, x).map_err(err)?.values)
    }

    /// Turán determinant `p_n^2 - p_{n-1} p_{n+1}` (stabilized form).
    fn turan_delta(&self, n: usize, x: f64) -> PyResult<f64> {
        turan::turan_delta(&self.inner, n, x).map_err(err)
    }

    /// `Delta_n(x)/(1-x^2)`, finite at the endpoints.
    fn normalized_turan(&self, n: usize, x: f64) -> PyResult<f64> {
        turan::normalized_turan(&self.inner, n, x).map_err(err)
    }

    fn delta_zero(&self, n: usize) -> PyResult<f64> {
        turan::delta_zero(&self.inner, n).map_err(err)
    }

    fn to_orthonormal(&self) -> PyResult<PyOrthonormal> {
        Ok(PyOrthonormal { inner: self.inner.to_orthonormal().map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Scheme({})", self.label())
    }
}

/// Orthonormal recurrence table `x P_n = lambda_n P_{n+1} + lambda_{n-1} P_{n-1}`.
#[pyclass(name = "Orthonormal")]
struct PyOrthonormal {
    inner: OrthonormalScheme,
}

#[pymethods]
impl PyOrthonormal {
    #[staticmethod]
    #[pyo3(signature = (lambdas, limit = None))]
    fn from_table(lambdas: Vec<f64>, limit: Option<f64>) -> PyResult<Self> {
        Ok(Self { inner: OrthonormalScheme::from_table(lambdas, limit).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (lambda0, max_n = 1000))]
    fn flat_tail(lambda0: f64, max_n: usize) -> PyResult<Self> {
        Ok(Self { inner: OrthonormalScheme::remark36_with_max(lambda0, max_n).map_err(err)? })
    }

    fn max_n(&self) -> usize {
        self.inner.max_n()
    }

    /// `lambda` is a Python keyword, hence the trailing underscore.
    #[pyo3(name = "lambda_")]
    fn lambda(&self, n: usize) -> PyResult<f64> {
        self.inner.check_n(n).map_err(err)?;
        Ok(self.inner.lambda(n))
    }

    fn eval(&self, n: usize, x: f64) -> PyResult<Vec<f64>> {
        Ok(polyeval::eval_orthonormal(&self.inner, n, x).map_err(err)?.values)
    }

    /// `lambda_{n-1}(P_{n-1}^2 + P_n^2) - x P_{n-1} P_n`.
    fn script_d(&self, n: usize, x: f64) -> PyResult<f64> {
        turan::script_d_n(&self.inner, n, x).map_err(err)
    }

    fn to_scheme(&self) -> PyResult<PyScheme> {
        Ok(PyScheme { inner: self.inner.to_scheme().map_err(err)? })
    }

    /// Infimum scan of `P_n^2 + P_{n-1}^2` against `lambda_0^2/(2L^2)`,
    /// returned as a JSON report.
    #[pyo3(signature = (n_max, grid_count = 200))]
    fn lb_scan(&self, n_max: usize, grid_count: usize) -> PyResult<String> {
        let scan = bounds::lb_infimum_scan(&self.inner, n_max, grid_count).map_err(err)?;
        Ok(serde_json::to_string(&scan).expect("scan serializes"))
    }

    /// Density estimate via the Máté–Nevai limit, as a JSON report.
    #[pyo3(signature = (n, grid_points = 201, grid_spacing = "uniform"))]
    fn density(&self, n: usize, grid_points: usize, grid_spacing: &str) -> PyResult<String> {
        let grid = interior_grid(grid_points, spacing(grid_spacing)?);
        let est = bounds::density_estimate(&self.inner, n, &grid).map_err(err)?;
        Ok(est.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Orthonormal(max_n={})", self.inner.max_n())
    }
}

/// Verify a theorem/identity on a family. Returns `(verdict, report_json)`
/// where `verdict` is "pass", "fail" or "inapplicable".
#[pyfunction]
#[pyo3(signature = (theorem, family, n_max = 50, grid_points = 201, tol = None))]
fn verify(
    theorem: &str,
    family: &str,
    n_max: usize,
    grid_points: usize,
    tol: Option<f64>,
) -> PyResult<(String, String)> {
    let desc = FamilyDescriptor::parse(family).map_err(err)?;
    let grid = interior_grid(grid_points, Spacing::Uniform);
    let verdict_name = |v: bounds::Verdict| {
        match v {
            bounds::Verdict::Pass => "pass",
            bounds::Verdict::Fail => "fail",
            bounds::Verdict::Inapplicable => "inapplicable",
        }
        .to_string()
    };
    match theorem {
        "thm2" | "thm2a" | "prop29" => {
            let s = desc.build(n_max + 4).map_err(err)?;
            let cert = match theorem {
                "thm2" => bounds::verify_thm2_lower(&s, n_max, &grid, tol.unwrap_or(1e-10)),
                "thm2a" => bounds::verify_thm2a_upper(&s, n_max, &grid, tol.unwrap_or(1e-10)),
                _ => bounds::verify_prop29(&s, n_max, &grid, tol.unwrap_or(1e-11)),
            }
            .map_err(err)?;
            Ok((verdict_name(cert.verdict), cert.to_json()))
        }
        "prop21" | "fund" | "turanturan" => {
            let s = desc.build(n_max + 4).map_err(err)?;
            let base = tol.unwrap_or(1e-10);
            let rep = match theorem {
                "prop21" => turan::check_prop21(&s, (2, n_max), &grid, base),
                "fund" => turan::check_fundamental(&s, (1, n_max), &grid, base),
                _ => turan::check_turanturan(&s, (1, n_max), &grid, base),
            }
            .map_err(err)?;
            let verdict = if rep.pass { "pass" } else { "fail" };
            Ok((verdict.into(), serde_json::to_string(&rep).expect("report serializes")))
        }
        "lb" => {
            let l = desc.build_orthonormal(n_max + 2).map_err(err)?;
            let scan = bounds::lb_infimum_scan(&l, n_max, grid_points).map_err(err)?;
            Ok((verdict_name(scan.verdict), serde_json::to_string(&scan).unwrap()))
        }
        "thm41" => match desc {
            FamilyDescriptor::QUltra { q, beta } => {
                let cert =
                    bounds::verify_thm41(q, beta, n_max, &grid, tol.unwrap_or(1e-9)).map_err(err)?;
                Ok((verdict_name(cert.verdict), cert.to_json()))
            }
            _ => Err(PyValueError::new_err("thm41 needs a qultra family")),
        },
        "cor12" => match desc {
            FamilyDescriptor::Jacobi { alpha } => {
                let rep = reference::check_cor12(alpha, n_max, &grid).map_err(err)?;
                let verdict = if rep.pass { "pass" } else { "fail" };
                let json = format!(
                    r#"{{"a": {}, "reversed": {}, "min_margin": {}, "pass": {}}}"#,
                    rep.a, rep.reversed, rep.min_margin, rep.pass
                );
                Ok((verdict.into(), json))
            }
            _ => Err(PyValueError::new_err("cor12 needs a jacobi family")),
        },
        "nonmono" => {
            let s = desc.build(n_max + 4).map_err(err)?;
            let g = unit_grid(grid_points, Spacing::Uniform);
            let scan = bounds::detect_nonmonotonicity(&s, n_max, &g).map_err(err)?;
            let verdict = if scan.is_monotone { "pass" } else { "fail" };
            Ok((verdict.into(), serde_json::to_string(&scan).unwrap()))
        }
        other => Err(PyValueError::new_err(format!("unknown theorem tag `{other}`"))),
    }
}

/// Batch Turán scan; returns CSV text with columns n,x,delta,normalized.
#[pyfunction]
#[pyo3(signature = (family, n_max = 50, grid_points = 201, grid_spacing = "uniform"))]
fn scan_csv(
    family: &str,
    n_max: usize,
    grid_points: usize,
    grid_spacing: &str,
) -> PyResult<String> {
    let desc = FamilyDescriptor::parse(family).map_err(err)?;
    let s = desc.build(n_max + 4).map_err(err)?;
    let grid = interior_grid(grid_points, spacing(grid_spacing)?);
    Ok(turan::TuranScan::run(&s, n_max, &grid).map_err(err)?.to_csv())
}

/// Endpoint reference values `(f_n(0), f_n(1))` for symmetric Jacobi weight.
#[pyfunction]
fn jacobi_endpoints(a: f64, n: usize) -> PyResult<(f64, f64)> {
    reference::f_endpoints(a, n).map_err(err)
}

#[pymodule]
fn turankit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScheme>()?;
    m.add_class::<PyOrthonormal>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(scan_csv, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_endpoints, m)?)?;
    Ok(())
}
