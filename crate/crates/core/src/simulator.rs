//! Exact kinematics for piecewise-constant observer headings.
//!
//! Between heading switches every position is linear in time, so the instants
//! at which the target crosses the disk boundary are roots of a quadratic and
//! are computed directly. Sampling only exists for export.

use std::f64::consts::FRAC_PI_2;

use crate::approach::StrategyPlan;
use crate::engagement::{EngagementParams, RelativeState, WorldState};
use crate::error::{Error, Result};
use crate::observation::max_observation_time;
use crate::quadratic::{self, Roots};

/// Upper bound on exported samples per trajectory.
const MAX_SAMPLES: f64 = 5e7;

/// Grid times closer than this (relative to `dt`) to an event time are dropped.
const MERGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimOptions {
    /// Sampling step for export.
    pub dt: f64,
    /// Stop time when the target is never reached. Defaults to
    /// `10·2R/(1 − alpha)` plus the initial separation.
    pub horizon: Option<f64>,
    /// If the disk's lowest point reaches the target's path (`x_o = 0`) before
    /// contact, switch to heading π/2 and ride the path until contact.
    pub ride_path: bool,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self {
            dt: 0.01,
            horizon: None,
            ride_path: false,
        }
    }
}

/// Straight-line segment of observer motion starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Leg {
    pub start: f64,
    pub origin: WorldState,
    pub heading: f64,
}

impl Leg {
    fn state_at(&self, alpha: f64, t: f64) -> WorldState {
        let dt = t - self.start;
        let (s, c) = self.heading.sin_cos();
        WorldState {
            x_o: self.origin.x_o + alpha * c * dt,
            y_o: self.origin.y_o + alpha * s * dt,
            y_t: self.origin.y_t + dt,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub state: WorldState,
    /// 1 before contact, 2 from contact on.
    pub phase: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    /// Contact time, if the target ever reaches the disk.
    pub t2: Option<f64>,
    /// Escape time.
    pub tf: Option<f64>,
    /// Approach and observation headings as flown.
    pub headings: (f64, f64),
    /// When the approach switched to riding the target's path, if it did.
    pub path_time: Option<f64>,
    pub legs: Vec<Leg>,
    alpha: f64,
}

impl Trajectory {
    /// Exact state at time `t` (not limited to the sample grid).
    pub fn state_at(&self, t: f64) -> WorldState {
        let leg = self
            .legs
            .iter()
            .rev()
            .find(|leg| leg.start <= t)
            .unwrap_or(&self.legs[0]);
        leg.state_at(self.alpha, t)
    }

    pub fn separation_at(&self, t: f64) -> f64 {
        self.state_at(t).separation()
    }

    /// Time spent with the target inside the disk.
    pub fn observation_time(&self) -> f64 {
        match (self.t2, self.tf) {
            (Some(t2), Some(tf)) => tf - t2,
            _ => 0.0,
        }
    }

    pub fn end_time(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.t)
    }
}

fn relative_velocity(alpha: f64, psi: f64) -> (f64, f64) {
    let (s, c) = psi.sin_cos();
    (alpha * c, alpha * s - 1.0)
}

/// First time `t >= 0` with `|p + v·t| = R`, for `p` outside the disk.
fn first_contact(radius: f64, p: (f64, f64), v: (f64, f64)) -> Option<f64> {
    let c = p.0 * p.0 + p.1 * p.1 - radius * radius;
    if c <= 0.0 {
        return Some(0.0);
    }
    let a = v.0 * v.0 + v.1 * v.1;
    let h = p.0 * v.0 + p.1 * v.1;
    match quadratic::solve(a, h, c, 0.0) {
        Roots::None => None,
        // c > 0 makes both roots share a sign.
        Roots::One(t) | Roots::Two(t, _) => (t >= 0.0).then_some(t),
    }
}

/// Time from contact until the target leaves the disk.
fn time_inside(radius: f64, p: (f64, f64), v: (f64, f64)) -> f64 {
    let a = v.0 * v.0 + v.1 * v.1;
    let h = p.0 * v.0 + p.1 * v.1;
    let c = p.0 * p.0 + p.1 * p.1 - radius * radius;
    match quadratic::solve(a, h, c, 0.0) {
        Roots::None | Roots::One(_) => 0.0,
        Roots::Two(t1, t2) => (t2.max(0.0) - t1.max(0.0)).max(0.0),
    }
}

/// Time until the target first touches the disk when the observer holds
/// heading `psi` (world frame; mirrored states are handled). Zero if the
/// target is already on or inside the disk, `None` if contact never happens.
pub fn contact_time(params: &EngagementParams, rel: &RelativeState, psi: f64) -> Option<f64> {
    first_contact(
        params.radius(),
        (rel.signed_x(), rel.y),
        relative_velocity(params.alpha(), psi),
    )
}

/// In-disk duration from a contact configuration under heading `psi2`.
///
/// `rel_at_contact` should have the target on (or inside) the disk boundary;
/// the result is the span between the two boundary crossings from then on,
/// and zero for a tangent graze.
pub fn escape_time(params: &EngagementParams, rel_at_contact: &RelativeState, psi2: f64) -> f64 {
    time_inside(
        params.radius(),
        (rel_at_contact.signed_x(), rel_at_contact.y),
        relative_velocity(params.alpha(), psi2),
    )
}

/// Default stop time for runs that never make contact.
pub fn default_horizon(params: &EngagementParams, state: &WorldState) -> f64 {
    10.0 * max_observation_time(params) + state.separation()
}

/// Flies `psi1` until contact, then `psi2` until escape, and samples the result.
pub fn simulate(
    params: &EngagementParams,
    state: &WorldState,
    psi1: f64,
    psi2: f64,
    opts: &SimOptions,
) -> Result<Trajectory> {
    state.validate()?;
    if !(opts.dt.is_finite() && opts.dt > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "sample step must be positive, got {}",
            opts.dt
        )));
    }
    if !(psi1.is_finite() && psi2.is_finite()) {
        return Err(Error::InvalidArgument("headings must be finite".into()));
    }
    let alpha = params.alpha();
    let radius = params.radius();

    let mut legs = vec![Leg {
        start: 0.0,
        origin: *state,
        heading: psi1,
    }];
    let rel0 = (state.x_o, state.y_o - state.y_t);
    let mut t2 = first_contact(radius, rel0, relative_velocity(alpha, psi1));
    let mut path_time = None;

    if opts.ride_path {
        let vx = alpha * psi1.cos();
        let to_path = if state.x_o == 0.0 {
            Some(0.0)
        } else if state.x_o * vx < 0.0 {
            Some(-state.x_o / vx)
        } else {
            None
        };
        if let Some(tau) = to_path {
            if t2.is_none_or(|t| tau < t) {
                let at = legs[0].state_at(alpha, tau);
                let at = WorldState { x_o: 0.0, ..at };
                legs.push(Leg {
                    start: tau,
                    origin: at,
                    heading: FRAC_PI_2,
                });
                path_time = Some(tau);
                t2 = first_contact(
                    radius,
                    (at.x_o, at.y_o - at.y_t),
                    relative_velocity(alpha, FRAC_PI_2),
                )
                .map(|t| tau + t);
            }
        }
    }

    let mut tf = None;
    if let Some(t_contact) = t2 {
        let current = legs.last().expect("at least one leg");
        let at = current.state_at(alpha, t_contact);
        let inside = time_inside(
            radius,
            (at.x_o, at.y_o - at.y_t),
            relative_velocity(alpha, psi2),
        );
        legs.push(Leg {
            start: t_contact,
            origin: at,
            heading: psi2,
        });
        tf = Some(t_contact + inside);
    }

    let end = match tf {
        Some(t) => t,
        None => opts
            .horizon
            .unwrap_or_else(|| default_horizon(params, state)),
    };
    if !(end.is_finite() && end >= 0.0) {
        return Err(Error::InvalidArgument(format!("invalid horizon {end}")));
    }
    if end / opts.dt > MAX_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "sample step {} is too fine for a {end} TU run",
            opts.dt
        )));
    }

    let mut events: Vec<f64> = [Some(0.0), path_time, t2, tf, Some(end)]
        .into_iter()
        .flatten()
        .collect();
    events.sort_by(f64::total_cmp);
    events.dedup();

    let mut times: Vec<f64> = Vec::with_capacity((end / opts.dt) as usize + events.len() + 1);
    let n = (end / opts.dt).floor() as u64;
    for k in 0..=n {
        let t = k as f64 * opts.dt;
        if t > end {
            break;
        }
        if events.iter().any(|e| (t - e).abs() <= MERGE_TOL * opts.dt) {
            continue;
        }
        times.push(t);
    }
    times.extend(events.iter().copied());
    times.sort_by(f64::total_cmp);
    times.dedup();

    let traj = Trajectory {
        samples: Vec::new(),
        t2,
        tf,
        headings: (psi1, psi2),
        path_time,
        legs,
        alpha,
    };
    let samples = times
        .into_iter()
        .map(|t| Sample {
            t,
            state: traj.state_at(t),
            phase: match t2 {
                Some(c) if t >= c => 2,
                _ => 1,
            },
        })
        .collect();
    Ok(Trajectory { samples, ..traj })
}

/// Simulates a solved plan. Returns `None` when the plan has no contact (B1).
pub fn simulate_plan(
    params: &EngagementParams,
    state: &WorldState,
    plan: &StrategyPlan,
    opts: &SimOptions,
) -> Result<Option<Trajectory>> {
    let (Some(psi1), Some(psi2)) = (plan.chosen_phase1, plan.phase2_heading()) else {
        return Ok(None);
    };
    let opts = SimOptions {
        ride_path: opts.ride_path || plan.rides_path,
        ..*opts
    };
    simulate(params, state, psi1, psi2, &opts).map(Some)
}
