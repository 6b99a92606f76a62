//! Python bindings. Importable as `bandforge` once built with maturin.

use bandforge::render::{
    export_obj, render_overhead_svg, render_unfolding_svg, report_json, FigureStyle, SweepReport,
    ValidateReport, VerifyReport,
};
use bandforge::{
    convex_clip, curvature_pair, develop_band, mc_overlap_estimate, overlap, place_top,
    reduce_by_symmetry, solve_params, sweep, validate, verdict_matrix, ConvexPolygon2, Preset,
    PrismatoidParams, SweepSpec, Tolerances, Vec2,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn tolerances(scale: Option<f64>) -> PyResult<Tolerances> {
    match scale {
        None => Ok(Tolerances::from_env()),
        Some(f) if f.is_finite() && f > 0.0 => Ok(Tolerances::scaled(f)),
        Some(f) => Err(PyValueError::new_err(format!(
            "tolerance scale must be positive, got {f}"
        ))),
    }
}

fn polygon(points: Vec<(f64, f64)>) -> PyResult<ConvexPolygon2> {
    ConvexPolygon2::new(points.into_iter().map(|(x, y)| Vec2::new(x, y)).collect())
        .map_err(value_error)
}

/// Shape parameters `(s, h, y, z)`.
#[pyclass(name = "Params", module = "bandforge", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyParams {
    inner: PrismatoidParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (s=1.0, h=0.05, y=0.5, z=0.1))]
    fn new(s: f64, h: f64, y: f64, z: f64) -> Self {
        Self {
            inner: PrismatoidParams::new(s, h, y, z),
        }
    }

    /// Named parameter set: fig3, fig1b, fig1a, acute or control.
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        let preset: Preset = name.parse().map_err(value_error)?;
        Ok(Self {
            inner: preset.params().map_err(value_error)?,
        })
    }

    /// Bulge that makes the top face a regular hexagon.
    #[staticmethod]
    fn regular_bulge(s: f64) -> f64 {
        PrismatoidParams::regular_bulge(s)
    }

    #[getter]
    fn s(&self) -> f64 {
        self.inner.s
    }

    #[getter]
    fn h(&self) -> f64 {
        self.inner.h
    }

    #[getter]
    fn y(&self) -> f64 {
        self.inner.y
    }

    #[getter]
    fn z(&self) -> f64 {
        self.inner.z
    }

    fn scaled(&self, factor: f64) -> Self {
        Self {
            inner: self.inner.scaled(factor),
        }
    }

    fn __repr__(&self) -> String {
        let p = self.inner;
        format!("Params(s={}, h={}, y={}, z={})", p.s, p.h, p.y, p.z)
    }
}

/// A validated prismatoid.
#[pyclass(name = "Prismatoid", module = "bandforge", frozen)]
struct PyPrismatoid {
    inner: bandforge::Prismatoid,
}

#[pymethods]
impl PyPrismatoid {
    /// Raises `ValueError` when the shape is degenerate or not convex.
    #[new]
    fn new(params: PyParams) -> PyResult<Self> {
        let inner = bandforge::Prismatoid::construct(params.inner);
        let report = validate(&inner);
        if !report.valid() {
            return Err(PyValueError::new_err(format!(
                "invalid prismatoid: {}",
                report.issues.join("; ")
            )));
        }
        Ok(Self { inner })
    }

    #[getter]
    fn params(&self) -> PyParams {
        PyParams {
            inner: self.inner.params,
        }
    }

    /// Twelve `(x, y, z)` tuples: `a_0..a_5` then `b_0..b_5`.
    fn vertices(&self) -> Vec<(f64, f64, f64)> {
        (0..12)
            .map(|i| {
                let v = self.inner.vertex(i);
                (v.x, v.y, v.z)
            })
            .collect()
    }

    /// `(delta, epsilon)` in radians.
    fn curvatures(&self) -> PyResult<(f64, f64)> {
        let c = curvature_pair(&self.inner).map_err(value_error)?;
        Ok((c.delta, c.epsilon))
    }

    fn validate_json(&self) -> String {
        let report = validate(&self.inner);
        report_json(&ValidateReport {
            params: self.inner.params,
            valid: report.valid(),
            report,
        })
    }

    /// All 36 cut × attachment cells.
    #[pyo3(signature = (tolerance_scale=None))]
    fn verify(&self, tolerance_scale: Option<f64>) -> PyResult<PyVerifyReport> {
        let m = verdict_matrix(&self.inner, &tolerances(tolerance_scale)?).map_err(value_error)?;
        let classes = reduce_by_symmetry(&m).map_err(value_error)?;
        Ok(PyVerifyReport {
            inner: VerifyReport::new(&m, &classes),
        })
    }

    /// Overlap verdict and area for a single cell.
    #[pyo3(signature = (cut, attach, tolerance_scale=None))]
    fn cell(
        &self,
        cut: usize,
        attach: usize,
        tolerance_scale: Option<f64>,
    ) -> PyResult<(String, f64)> {
        let dev = develop_band(&self.inner, cut).map_err(value_error)?;
        let placement = place_top(&dev, attach).map_err(value_error)?;
        let r = overlap(&placement, &dev, &tolerances(tolerance_scale)?);
        Ok((r.verdict.to_string(), r.total_area))
    }

    /// Developed band for `cut`, optionally with the top face folded out
    /// across edge `attach`.
    #[pyo3(signature = (cut, attach=None))]
    fn unfolding_svg(&self, cut: usize, attach: Option<usize>) -> PyResult<String> {
        let style = FigureStyle::default();
        let dev = develop_band(&self.inner, cut).map_err(value_error)?;
        Ok(match attach {
            Some(j) => {
                let placement = place_top(&dev, j).map_err(value_error)?;
                let r = overlap(&placement, &dev, &Tolerances::from_env());
                render_unfolding_svg(&dev, Some(&placement), Some(&r), &style)
            }
            None => render_unfolding_svg(&dev, None, None, &style),
        })
    }

    fn overhead_svg(&self) -> String {
        render_overhead_svg(&self.inner, &FigureStyle::default())
    }

    fn to_obj(&self) -> String {
        export_obj(&self.inner)
    }
}

#[pyclass(name = "VerifyReport", module = "bandforge", frozen)]
struct PyVerifyReport {
    inner: VerifyReport,
}

#[pymethods]
impl PyVerifyReport {
    /// True when every cell is OVERLAP.
    #[getter]
    fn counterexample(&self) -> bool {
        self.inner.counterexample
    }

    #[getter]
    fn threshold(&self) -> f64 {
        self.inner.threshold
    }

    /// `(cut, attach, verdict, area)` for each of the 36 cells.
    fn cells(&self) -> Vec<(usize, usize, String, f64)> {
        self.inner
            .matrix
            .iter()
            .map(|c| (c.cut, c.attach, c.verdict.to_string(), c.area))
            .collect()
    }

    /// `(label, verdict)` for each of the six symmetry classes.
    fn classes(&self) -> Vec<(String, String)> {
        self.inner
            .classes
            .iter()
            .map(|c| (c.class.clone(), c.verdict.to_string()))
            .collect()
    }

    fn to_json(&self) -> String {
        report_json(&self.inner)
    }
}

/// Solves `(h, z)` so that `ε = target_epsilon_deg` and `δ/ε = ratio`.
#[pyfunction]
#[pyo3(signature = (target_epsilon_deg, ratio=0.5, s=1.0, y=0.5))]
fn solve(target_epsilon_deg: f64, ratio: f64, s: f64, y: f64) -> PyResult<PyParams> {
    let solved = solve_params(target_epsilon_deg.to_radians(), ratio, s, y).map_err(value_error)?;
    Ok(PyParams {
        inner: solved.params,
    })
}

/// Sweep over `grid = "hmin:hmax:steps,zmin:zmax:steps"` as a JSON report.
#[pyfunction]
#[pyo3(signature = (grid, s=1.0, y=0.5, tolerance_scale=None))]
fn sweep_json(grid: &str, s: f64, y: f64, tolerance_scale: Option<f64>) -> PyResult<String> {
    let spec = SweepSpec::parse_grid(grid, s, y).map_err(value_error)?;
    let result = sweep(&spec, &tolerances(tolerance_scale)?);
    Ok(report_json(&SweepReport::from(&result)))
}

/// Intersection area of two counter-clockwise convex polygons.
#[pyfunction]
fn clip_area(p: Vec<(f64, f64)>, q: Vec<(f64, f64)>) -> PyResult<f64> {
    Ok(convex_clip(&polygon(p)?, &polygon(q)?).map_or(0.0, |c| c.area()))
}

/// Monte-Carlo intersection area: `(area, std_error)`.
#[pyfunction]
#[pyo3(signature = (p, q, samples=1_000_000, seed=0))]
fn mc_area(
    p: Vec<(f64, f64)>,
    q: Vec<(f64, f64)>,
    samples: u64,
    seed: u64,
) -> PyResult<(f64, f64)> {
    let e = mc_overlap_estimate(&polygon(p)?, &polygon(q)?, samples, seed);
    Ok((e.area, e.std_error))
}

#[pymodule]
#[pyo3(name = "bandforge")]
fn pybandforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyPrismatoid>()?;
    m.add_class::<PyVerifyReport>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_json, m)?)?;
    m.add_function(wrap_pyfunction!(clip_area, m)?)?;
    m.add_function(wrap_pyfunction!(mc_area, m)?)?;
    m.add("PRESETS", Preset::ALL.map(Preset::name).to_vec())?;
    Ok(())
}
