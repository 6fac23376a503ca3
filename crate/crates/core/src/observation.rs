//! Observation phase: what the observer does once the target touches the disk.
//!
//! The contact bearing `lambda` is the direction from target to observer at the
//! moment of contact, measured from the target's velocity (`sin λ = x/R`,
//! `cos λ = (y_o − y_t)/R`). `lambda = 0` means the target enters through the
//! very bottom of the disk, which gives the longest possible observation.

use std::f64::consts::PI;

use crate::engagement::{EngagementParams, RelativeState};
use crate::error::{Error, Result};

/// Bearing from target to observer at first contact, in `[−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactBearing {
    lambda: f64,
}

impl ContactBearing {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && (-PI..=PI).contains(&lambda)) {
            return Err(Error::InvalidArgument(format!(
                "contact bearing must lie in [-pi, pi], got {lambda}"
            )));
        }
        Ok(Self { lambda })
    }

    /// Bearing of an observer at relative position `(x, y)` (observer minus
    /// target). Uses both signs, so a target ahead of the observer (`y < 0`)
    /// gets `|λ| > π/2`.
    pub fn from_relative(x: f64, y: f64) -> Self {
        Self { lambda: x.atan2(y) }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn negated(&self) -> Self {
        Self {
            lambda: -self.lambda,
        }
    }
}

/// Optimal constant heading and resulting duration of the observation phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase2Solution {
    pub heading: f64,
    pub t_obs: f64,
    pub lambda: ContactBearing,
}

/// Half-angle of the cone of contact bearings, measured from the target's
/// velocity, outside of which the target escapes immediately: `acos(−alpha)`.
pub fn zero_observation_cone(params: &EngagementParams) -> f64 {
    (-params.alpha()).acos()
}

/// Longest possible observation, reached at `lambda = 0`: `2R/(1 − alpha)`.
pub fn max_observation_time(params: &EngagementParams) -> f64 {
    2.0 * params.radius() / (1.0 - params.alpha())
}

/// Observation duration after contact at `lambda` under the optimal heading,
/// `2R(alpha + cos λ)/(1 − alpha²)`, and exactly zero inside the escape cone.
pub fn observation_time(params: &EngagementParams, lambda: ContactBearing) -> f64 {
    if lambda.lambda().abs() >= zero_observation_cone(params) {
        return 0.0;
    }
    let a = params.alpha();
    let t = 2.0 * params.radius() * (a + lambda.lambda().cos()) / (1.0 - a * a);
    t.max(0.0)
}

/// Optimal observation-phase heading,
/// `acos((alpha² − 1)·sin λ / (alpha² + 2·alpha·cos λ + 1))`, in `[0, π]`.
pub fn phase2_heading(params: &EngagementParams, lambda: ContactBearing) -> Result<f64> {
    let a = params.alpha();
    let (sin_l, cos_l) = lambda.lambda().sin_cos();
    if a + cos_l <= 0.0 {
        return Err(Error::NoObservation {
            lambda: lambda.lambda(),
        });
    }
    let c = (a * a - 1.0) * sin_l / (a * a + 2.0 * a * cos_l + 1.0);
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// Heading and duration for a contact at `lambda`.
pub fn solve_phase2(params: &EngagementParams, lambda: ContactBearing) -> Result<Phase2Solution> {
    let heading = phase2_heading(params, lambda)?;
    Ok(Phase2Solution {
        heading,
        t_obs: observation_time(params, lambda),
        lambda,
    })
}

/// Remaining observation time for a target that is already on or inside the
/// disk.
///
/// The target stays observable up to the largest `t` for which the observer can
/// still be within `R` of it, i.e. `|target(t) − observer(0)| ≤ R + alpha·t`.
/// That is the larger root of
/// `(1 − alpha²)t² − 2(y + alpha·R)t + (x² + y² − R²) = 0`.
/// On the boundary it reduces to [`observation_time`].
pub fn interior_observation_time(params: &EngagementParams, rel: &RelativeState) -> f64 {
    let a = params.alpha();
    let r = params.radius();
    let quad = 1.0 - a * a;
    let half = rel.y + a * r;
    let c = (rel.x * rel.x + rel.y * rel.y - r * r).min(0.0);
    let disc = (half * half - quad * c).max(0.0);
    if half >= 0.0 {
        (half + disc.sqrt()) / quad
    } else {
        // Product of roots: avoids cancelling half against sqrt(disc).
        let denom = half - disc.sqrt();
        if denom == 0.0 {
            0.0
        } else {
            (c / denom).max(0.0)
        }
    }
}

/// Optimal observation phase for a target already on or inside the disk.
///
/// The observer flies straight at the point where the target will be at the
/// escape time. Returns `None` when the target is leaving the disk at once.
/// The heading is in the frame of `rel` (un-mirrored by the caller).
pub fn interior_phase2(params: &EngagementParams, rel: &RelativeState) -> Option<Phase2Solution> {
    let t_obs = interior_observation_time(params, rel);
    if t_obs <= 0.0 {
        return None;
    }
    let heading = (t_obs - rel.y).atan2(-rel.x);
    Some(Phase2Solution {
        heading: crate::angle::normalize(heading),
        t_obs,
        lambda: ContactBearing::from_relative(rel.x, rel.y),
    })
}
