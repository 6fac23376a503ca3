//! Python bindings. Angles are radians throughout.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use surveil::approach::{Phase1Heading, StrategyPlan};
use surveil::export;
use surveil::scenario::Scenario;
use surveil::{
    ContactBearing, EngagementParams, IntervalPick, RegionLabel, SimOptions, SweepReport,
    Trajectory, WorldState,
};

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "EngagementParams", frozen)]
struct PyParams {
    inner: EngagementParams,
}

#[pymethods]
impl PyParams {
    #[new]
    fn new(alpha: f64, radius: f64) -> PyResult<Self> {
        EngagementParams::new(alpha, radius)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha()
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius()
    }

    fn __repr__(&self) -> String {
        format!(
            "EngagementParams(alpha={}, radius={})",
            self.inner.alpha(),
            self.inner.radius()
        )
    }
}

#[pyclass(name = "WorldState", frozen)]
struct PyState {
    inner: WorldState,
}

#[pymethods]
impl PyState {
    #[new]
    fn new(x_o: f64, y_o: f64, y_t: f64) -> PyResult<Self> {
        WorldState::new(x_o, y_o, y_t)
            .map(|inner| Self { inner })
            .map_err(value_err)
    }

    #[getter]
    fn x_o(&self) -> f64 {
        self.inner.x_o
    }

    #[getter]
    fn y_o(&self) -> f64 {
        self.inner.y_o
    }

    #[getter]
    fn y_t(&self) -> f64 {
        self.inner.y_t
    }

    fn separation(&self) -> f64 {
        self.inner.separation()
    }

    fn __repr__(&self) -> String {
        format!(
            "WorldState(x_o={}, y_o={}, y_t={})",
            self.inner.x_o, self.inner.y_o, self.inner.y_t
        )
    }
}

#[pyclass(name = "StrategyPlan", frozen)]
struct PyPlan {
    inner: StrategyPlan,
}

#[pymethods]
impl PyPlan {
    /// "B1", "B2" or "B3".
    #[getter]
    fn region(&self) -> &'static str {
        self.inner.region.short()
    }

    /// `(lo, hi)` for the maximum-observation region, else `None`.
    #[getter]
    fn phase1_interval(&self) -> Option<(f64, f64)> {
        match self.inner.phase1_heading {
            Phase1Heading::Interval(iv) => Some((iv.lo(), iv.hi())),
            _ => None,
        }
    }

    #[getter]
    fn phase1_heading(&self) -> Option<f64> {
        self.inner.chosen_phase1
    }

    #[getter]
    fn phase2_heading(&self) -> Option<f64> {
        self.inner.phase2_heading()
    }

    /// `inf` when no observation is possible.
    #[getter]
    fn t_apr(&self) -> f64 {
        self.inner.t_apr.finite().unwrap_or(f64::INFINITY)
    }

    #[getter]
    fn t_obs(&self) -> f64 {
        self.inner.t_obs
    }

    #[getter]
    fn rides_path(&self) -> bool {
        self.inner.rides_path
    }

    #[getter]
    fn started_inside(&self) -> bool {
        self.inner.started_inside
    }

    fn report(&self) -> String {
        export::plan_report(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "StrategyPlan(region={}, t_apr={}, t_obs={})",
            self.region(),
            self.t_apr(),
            self.t_obs()
        )
    }
}

#[pyclass(name = "Trajectory", frozen)]
struct PyTrajectory {
    inner: Trajectory,
}

#[pymethods]
impl PyTrajectory {
    #[getter]
    fn t2(&self) -> Option<f64> {
        self.inner.t2
    }

    #[getter]
    fn tf(&self) -> Option<f64> {
        self.inner.tf
    }

    #[getter]
    fn observation_time(&self) -> f64 {
        self.inner.observation_time()
    }

    /// Rows `(t, x_O, y_O, y_T, rho, phase)`.
    fn samples(&self) -> Vec<(f64, f64, f64, f64, f64, u8)> {
        self.inner
            .samples
            .iter()
            .map(|s| {
                (
                    s.t,
                    s.state.x_o,
                    s.state.y_o,
                    s.state.y_t,
                    s.state.separation(),
                    s.phase,
                )
            })
            .collect()
    }

    fn state_at(&self, t: f64) -> PyState {
        PyState {
            inner: self.inner.state_at(t),
        }
    }

    fn to_csv(&self) -> String {
        export::trajectory_csv(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.samples.len()
    }
}

#[pyclass(name = "SweepReport", frozen, get_all)]
struct PySweepReport {
    best_psi1: f64,
    best_psi2: f64,
    best_t_obs: f64,
    closed_form_t_obs: f64,
    gap: f64,
    relative_gap: f64,
    grid: (usize, usize),
}

impl From<SweepReport> for PySweepReport {
    fn from(r: SweepReport) -> Self {
        Self {
            best_psi1: r.best_psi1,
            best_psi2: r.best_psi2,
            best_t_obs: r.best_t_obs,
            closed_form_t_obs: r.closed_form_t_obs,
            gap: r.gap,
            relative_gap: r.relative_gap(),
            grid: (r.grid_n1, r.grid_n2),
        }
    }
}

fn parse_pick(pick: &str) -> PyResult<IntervalPick> {
    pick.parse().map_err(value_err)
}

fn region_of(params: &PyParams, state: &PyState) -> PyResult<RegionLabel> {
    let rel = surveil::to_relative(&state.inner).map_err(value_err)?;
    Ok(surveil::classify(&params.inner, &rel))
}

/// Region label "B1", "B2" or "B3".
#[pyfunction]
fn classify(params: &PyParams, state: &PyState) -> PyResult<&'static str> {
    region_of(params, state).map(|r| r.short())
}

#[pyfunction]
fn decision_line_slope(params: &PyParams) -> f64 {
    surveil::decision_line_slope(&params.inner)
}

#[pyfunction]
#[pyo3(signature = (params, state, pick = "mid"))]
fn solve(params: &PyParams, state: &PyState, pick: &str) -> PyResult<PyPlan> {
    surveil::solve_with_pick(&params.inner, &state.inner, parse_pick(pick)?)
        .map(|inner| PyPlan { inner })
        .map_err(value_err)
}

/// Flies `psi1` until contact and `psi2` until escape.
#[pyfunction]
#[pyo3(signature = (params, state, psi1, psi2, dt = 0.01, horizon = None, ride_path = false))]
fn simulate(
    params: &PyParams,
    state: &PyState,
    psi1: f64,
    psi2: f64,
    dt: f64,
    horizon: Option<f64>,
    ride_path: bool,
) -> PyResult<PyTrajectory> {
    let opts = SimOptions {
        dt,
        horizon,
        ride_path,
    };
    surveil::simulate(&params.inner, &state.inner, psi1, psi2, &opts)
        .map(|inner| PyTrajectory { inner })
        .map_err(value_err)
}

/// Simulates a solved plan; `None` when no observation is possible.
#[pyfunction]
#[pyo3(signature = (params, state, plan, dt = 0.01))]
fn simulate_plan(
    params: &PyParams,
    state: &PyState,
    plan: &PyPlan,
    dt: f64,
) -> PyResult<Option<PyTrajectory>> {
    let opts = SimOptions {
        dt,
        ..SimOptions::default()
    };
    surveil::simulate_plan(&params.inner, &state.inner, &plan.inner, &opts)
        .map(|t| t.map(|inner| PyTrajectory { inner }))
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (params, state, n1 = 3600, n2 = 720))]
fn sweep(
    py: Python<'_>,
    params: &PyParams,
    state: &PyState,
    n1: usize,
    n2: usize,
) -> PyResult<PySweepReport> {
    let (p, s) = (params.inner, state.inner);
    py.detach(|| surveil::sweep(&p, &s, n1, n2))
        .map(PySweepReport::from)
        .map_err(value_err)
}

/// Observation time from contact at bearing `lam` (radians).
#[pyfunction]
fn observation_time(params: &PyParams, lam: f64) -> PyResult<f64> {
    let b = ContactBearing::new(lam).map_err(value_err)?;
    Ok(surveil::observation_time(&params.inner, b))
}

#[pyfunction]
fn phase2_heading(params: &PyParams, lam: f64) -> PyResult<f64> {
    let b = ContactBearing::new(lam).map_err(value_err)?;
    surveil::phase2_heading(&params.inner, b).map_err(value_err)
}

#[pyfunction]
fn max_observation_time(params: &PyParams) -> f64 {
    surveil::max_observation_time(&params.inner)
}

#[pyfunction]
fn zero_observation_cone(params: &PyParams) -> f64 {
    surveil::zero_observation_cone(&params.inner)
}

/// Results table of built-in scenario "A", "B" or "C".
#[pyfunction]
fn scenario_table(name: &str) -> PyResult<String> {
    let scenario: Scenario = name.parse().map_err(value_err)?;
    export::scenario_table(scenario).map_err(value_err)
}

#[pymodule]
fn surveil_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyState>()?;
    m.add_class::<PyPlan>()?;
    m.add_class::<PyTrajectory>()?;
    m.add_class::<PySweepReport>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(decision_line_slope, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_plan, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(observation_time, m)?)?;
    m.add_function(wrap_pyfunction!(phase2_heading, m)?)?;
    m.add_function(wrap_pyfunction!(max_observation_time, m)?)?;
    m.add_function(wrap_pyfunction!(zero_observation_cone, m)?)?;
    m.add_function(wrap_pyfunction!(scenario_table, m)?)?;
    Ok(())
}
