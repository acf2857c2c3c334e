//! Python bindings for the `landau` crate.
//!
//! Build with `--features extension-module` and import as `landau`.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use landau::bounds::{self, AuditMode};
use landau::maps::PlanarMap;
use landau::radii::{
    self, remark_chain as chain, ChainStatus, GridPoint, RadiusSpec, RemarkId, SolverOptions,
    TheoremId, TheoremParams,
};
use landau::verify::{self, CorpusName, CorpusParams, ScanOptions};

fn err(e: landau::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn opts(tol: f64) -> SolverOptions {
    SolverOptions {
        tol,
        ..SolverOptions::default()
    }
}

/// Univalence radius `rho` and schlicht radius `sigma` of one radius equation.
#[pyclass(name = "RadiusResult", frozen, get_all, module = "landau")]
struct PyRadiusResult {
    rho: f64,
    sigma: f64,
    residual: f64,
    iterations: u32,
    unconstrained: bool,
    nonpositive_sigma: bool,
}

#[pymethods]
impl PyRadiusResult {
    fn __repr__(&self) -> String {
        format!(
            "RadiusResult(rho={:?}, sigma={:?}, residual={:?}, unconstrained={})",
            self.rho,
            self.sigma,
            self.residual,
            if self.unconstrained { "True" } else { "False" }
        )
    }
}

impl From<radii::RadiusResult> for PyRadiusResult {
    fn from(r: radii::RadiusResult) -> Self {
        Self {
            rho: r.rho,
            sigma: r.sigma,
            residual: r.residual,
            iterations: r.iterations,
            unconstrained: r.unconstrained,
            nonpositive_sigma: r.nonpositive_sigma,
        }
    }
}

#[pyfunction]
#[pyo3(signature = (theorem, M=None, M1=None, M2=None, tol=1e-13))]
#[allow(non_snake_case)]
fn theorem_radius(
    theorem: &str,
    M: Option<f64>,
    M1: Option<f64>,
    M2: Option<f64>,
    tol: f64,
) -> PyResult<PyRadiusResult> {
    let id: TheoremId = theorem.parse().map_err(err)?;
    let p = TheoremParams {
        m: M,
        m1: M1,
        m2: M2,
    };
    radii::theorem_radius_with(id, p, opts(tol))
        .map(Into::into)
        .map_err(err)
}

/// Smallest root of `lam - 2 m1 r - c1 r^2/(1-r)^2 - c2 (2r - r^2)/(1-r)^2`.
#[pyfunction]
#[pyo3(signature = (lam, m1, c1, c2, tol=1e-13))]
fn family1_radius(lam: f64, m1: f64, c1: f64, c2: f64, tol: f64) -> PyResult<PyRadiusResult> {
    radii::family1_solve(&RadiusSpec::family1(lam, m1, c1, c2), opts(tol))
        .map(Into::into)
        .map_err(err)
}

/// Closed-form radius of `alpha (1-r)^2 = beta (4r - 3r^2)`.
#[pyfunction]
fn family2_radius(alpha: f64, beta: f64) -> PyResult<PyRadiusResult> {
    radii::family2_solve(&RadiusSpec::family2(alpha, beta))
        .map(Into::into)
        .map_err(err)
}

#[pyfunction]
fn m0() -> f64 {
    bounds::m0()
}

#[pyfunction]
fn m0_prime() -> f64 {
    bounds::m0_prime()
}

#[pyfunction]
fn lambda0(m: f64) -> PyResult<f64> {
    bounds::lambda0(m).map_err(err)
}

#[pyfunction]
fn big_k(m: f64) -> PyResult<f64> {
    bounds::big_k(m).map_err(err)
}

#[pyfunction]
fn bound_bounded(m: f64) -> f64 {
    bounds::bound_bounded(m)
}

#[pyfunction]
fn bound_jacobian_normalized(m: f64) -> PyResult<f64> {
    bounds::bound_jacobian_normalized(m).map_err(err)
}

#[pyfunction]
fn bound_sum_normalized(m: f64, lam: f64) -> PyResult<f64> {
    bounds::bound_sum_normalized(m, lam).map_err(err)
}

#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.as_str()).collect()
}

#[pyfunction]
fn remark_ids() -> Vec<&'static str> {
    RemarkId::ALL.iter().map(|t| t.as_str()).collect()
}

#[pyfunction]
fn corpus_names() -> Vec<&'static str> {
    CorpusName::ALL.iter().map(|t| t.as_str()).collect()
}

/// Evaluate a remark chain; one dict per grid value.
#[pyfunction]
#[pyo3(signature = (remark, grid, M1=None, tol=1e-13))]
#[allow(non_snake_case)]
fn remark_chain<'py>(
    py: Python<'py>,
    remark: &str,
    grid: Vec<f64>,
    M1: Option<f64>,
    tol: f64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let id: RemarkId = remark.parse().map_err(err)?;
    let points: Vec<GridPoint> = grid
        .iter()
        .map(|&p| GridPoint { param: p, m1: M1 })
        .collect();
    let report = chain(id, &points, opts(tol)).map_err(err)?;
    report
        .rows
        .iter()
        .map(|row| {
            let d = PyDict::new(py);
            d.set_item("param", row.param)?;
            d.set_item("M1", row.m1)?;
            d.set_item("radii", row.radii.clone())?;
            d.set_item("sigmas", row.sigmas.clone())?;
            d.set_item("radii_hold", row.radii_hold)?;
            d.set_item("sigmas_hold", row.sigmas_hold)?;
            d.set_item("tail_equal", row.tail_equal)?;
            let status = match row.status {
                ChainStatus::Pass => "pass",
                ChainStatus::Fail => "fail",
                ChainStatus::Exploratory => "exploratory",
            };
            d.set_item("status", status)?;
            Ok(d)
        })
        .collect()
}

/// A named corpus mapping with its hypothesis already checked.
#[pyclass(name = "CorpusMap", frozen, module = "landau")]
struct PyCorpusMap {
    inner: verify::CorpusEntry,
}

#[pymethods]
impl PyCorpusMap {
    #[new]
    #[pyo3(signature = (name, M=None, M1=None, M2=None, a=None, n=None, m=None))]
    #[allow(non_snake_case)]
    fn new(
        name: &str,
        M: Option<f64>,
        M1: Option<f64>,
        M2: Option<f64>,
        a: Option<f64>,
        n: Option<u32>,
        m: Option<u32>,
    ) -> PyResult<Self> {
        let name: CorpusName = name.parse().map_err(err)?;
        let params = CorpusParams {
            m: M,
            m1: M1,
            m2: M2,
            a,
            n,
            power: m,
        };
        verify::corpus(name, params)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    fn __repr__(&self) -> String {
        format!("CorpusMap({})", self.inner.label())
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.inner.eval(z)
    }

    /// `(F_z, F_zbar)` at `z`.
    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        self.inner.wirtinger(z)
    }

    /// `(lambda, Lambda, J)` at `z`.
    fn distortion(&self, z: Complex64) -> (f64, f64, f64) {
        let t = self.inner.distortion(z);
        (t.lambda, t.big_lambda, t.jacobian)
    }

    /// `[(n, a_n, b_n)]` for `1 <= n <= n_max` from samples on `|z| = r`.
    #[pyo3(signature = (n_max=16, r=bounds::DEFAULT_RADIUS, samples=bounds::DEFAULT_SAMPLES))]
    fn coefficients(
        &self,
        n_max: usize,
        r: f64,
        samples: usize,
    ) -> PyResult<Vec<(usize, Complex64, Complex64)>> {
        let coeffs =
            bounds::extract_coefficients(|z| self.inner.eval(z), n_max, r, samples).map_err(err)?;
        Ok(coeffs.into_iter().map(|c| (c.n, c.a, c.b)).collect())
    }

    /// Run every declared coefficient audit; one dict per audit.
    #[pyo3(signature = (n_max=16))]
    fn audits<'py>(&self, py: Python<'py>, n_max: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let audits = self.inner.run_audits(n_max).map_err(err)?;
        audits
            .iter()
            .map(|a| {
                let d = PyDict::new(py);
                d.set_item("map", &a.map_name)?;
                d.set_item("mode", a.mode.as_str())?;
                d.set_item("M", a.m)?;
                d.set_item("min_slack", a.min_slack())?;
                d.set_item("pass", a.passes())?;
                let rows: Vec<(usize, f64, f64, f64)> = a
                    .rows
                    .iter()
                    .map(|r| (r.n, r.modulus_sum, r.bound, r.slack))
                    .collect();
                d.set_item("rows", rows)?;
                Ok(d)
            })
            .collect()
    }

    #[pyo3(signature = (r, grid_n=verify::DEFAULT_GRID_N))]
    fn injectivity_scan<'py>(
        &self,
        py: Python<'py>,
        r: f64,
        grid_n: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let rep = verify::injectivity_scan(|z| self.inner.eval(z), r, grid_n).map_err(err)?;
        injectivity_dict(py, &rep)
    }

    #[pyo3(signature = (r, sigma, n_boundary=verify::DEFAULT_BOUNDARY_SAMPLES, n_targets=verify::DEFAULT_TARGETS))]
    fn schlicht_scan<'py>(
        &self,
        py: Python<'py>,
        r: f64,
        sigma: f64,
        n_boundary: usize,
        n_targets: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let rep = verify::schlicht_scan(|z| self.inner.eval(z), r, sigma, n_boundary, n_targets)
            .map_err(err)?;
        coverage_dict(py, &rep)
    }

    #[pyo3(signature = (r, grid_n=verify::DEFAULT_GRID_N))]
    fn min_jacobian(&self, r: f64, grid_n: usize) -> PyResult<(f64, Complex64)> {
        let scan = verify::min_jacobian(&self.inner, r, grid_n).map_err(err)?;
        Ok((scan.min, Complex64::new(scan.argmin[0], scan.argmin[1])))
    }
}

fn injectivity_dict<'py>(
    py: Python<'py>,
    rep: &verify::InjectivityReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("radius", rep.radius)?;
    d.set_item("grid_n", rep.grid_n)?;
    d.set_item("pass", rep.pass)?;
    d.set_item(
        "witness",
        rep.witness
            .map(|[p, q]| (Complex64::new(p[0], p[1]), Complex64::new(q[0], q[1]))),
    )?;
    d.set_item("min_separation_ratio", rep.min_separation_ratio)?;
    Ok(d)
}

fn coverage_dict<'py>(
    py: Python<'py>,
    rep: &verify::CoverageReport,
) -> PyResult<Bound<'py, PyDict>> {
    let pts = |v: &[[f64; 2]]| {
        v.iter()
            .map(|p| Complex64::new(p[0], p[1]))
            .collect::<Vec<_>>()
    };
    let d = PyDict::new(py);
    d.set_item("radius", rep.radius)?;
    d.set_item("sigma", rep.sigma)?;
    d.set_item("n_targets", rep.n_targets)?;
    d.set_item("uncovered", pts(&rep.uncovered))?;
    d.set_item("indeterminate", pts(&rep.indeterminate))?;
    d.set_item("orientation", rep.orientation)?;
    d.set_item("max_winding_deviation", rep.max_winding_deviation)?;
    d.set_item("pass", rep.pass)?;
    Ok(d)
}

/// Injectivity and coverage scans for a theorem configuration or, with
/// `classical=True`, for the classical Landau extremal.
#[pyfunction]
#[pyo3(signature = (theorem=None, M=None, M1=None, M2=None, classical=false, grid_n=verify::DEFAULT_GRID_N, tol=1e-13))]
#[allow(non_snake_case, clippy::too_many_arguments)]
fn verify_configuration<'py>(
    py: Python<'py>,
    theorem: Option<&str>,
    M: Option<f64>,
    M1: Option<f64>,
    M2: Option<f64>,
    classical: bool,
    grid_n: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = match (classical, theorem) {
        (true, None) => {
            let m = M.ok_or_else(|| PyValueError::new_err("classical configuration needs M"))?;
            verify::classical_configuration(m).map_err(err)?
        }
        (false, Some(t)) => {
            let id: TheoremId = t.parse().map_err(err)?;
            verify::theorem_configuration(
                id,
                TheoremParams {
                    m: M,
                    m1: M1,
                    m2: M2,
                },
                opts(tol),
            )
            .map_err(err)?
        }
        _ => {
            return Err(PyValueError::new_err(
                "pass exactly one of theorem or classical=True",
            ))
        }
    };
    let scan = ScanOptions {
        grid_n,
        ..ScanOptions::default()
    };
    let rep = verify::run_verification(&cfg, scan).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("map", &rep.map)?;
    d.set_item("rho", rep.rho)?;
    d.set_item("sigma", rep.sigma)?;
    d.set_item("scan_radius", cfg.scan_radius)?;
    d.set_item("injectivity", injectivity_dict(py, &rep.injectivity)?)?;
    match &rep.coverage {
        Some(c) => d.set_item("coverage", coverage_dict(py, c)?)?,
        None => d.set_item("coverage", py.None())?,
    }
    d.set_item("min_jacobian", rep.min_jacobian.min)?;
    d.set_item("pass", rep.pass)?;
    Ok(d)
}

/// Parse an audit mode name, for scripts that want to validate input early.
#[pyfunction]
fn audit_mode(name: &str) -> PyResult<&'static str> {
    name.parse::<AuditMode>().map(|m| m.as_str()).map_err(err)
}

#[pymodule]
#[pyo3(name = "landau")]
fn landau_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRadiusResult>()?;
    m.add_class::<PyCorpusMap>()?;
    m.add_function(wrap_pyfunction!(theorem_radius, m)?)?;
    m.add_function(wrap_pyfunction!(family1_radius, m)?)?;
    m.add_function(wrap_pyfunction!(family2_radius, m)?)?;
    m.add_function(wrap_pyfunction!(remark_chain, m)?)?;
    m.add_function(wrap_pyfunction!(m0, m)?)?;
    m.add_function(wrap_pyfunction!(m0_prime, m)?)?;
    m.add_function(wrap_pyfunction!(lambda0, m)?)?;
    m.add_function(wrap_pyfunction!(big_k, m)?)?;
    m.add_function(wrap_pyfunction!(bound_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(bound_jacobian_normalized, m)?)?;
    m.add_function(wrap_pyfunction!(bound_sum_normalized, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    m.add_function(wrap_pyfunction!(remark_ids, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify_configuration, m)?)?;
    m.add_function(wrap_pyfunction!(audit_mode, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
