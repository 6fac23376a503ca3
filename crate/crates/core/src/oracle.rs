//! Brute-force heading sweeps.
//!
//! The sweep only uses the simulator's event times: for every approach heading
//! on a uniform grid it finds the contact configuration, then tries every
//! observation heading on a second grid. No closed form enters the search, so
//! the best value found is an independent lower bound on the optimum.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::approach::solve;
use crate::engagement::{to_relative, EngagementParams, RelativeState, WorldState};
use crate::error::{Error, Result};
use crate::simulator::{contact_time, escape_time};

/// Smallest grid either sweep dimension accepts.
pub const MIN_GRID: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepReport {
    pub best_psi1: f64,
    pub best_psi2: f64,
    pub best_t_obs: f64,
    pub grid_n1: usize,
    pub grid_n2: usize,
    pub closed_form_t_obs: f64,
    /// `closed_form_t_obs − best_t_obs`.
    pub gap: f64,
}

impl SweepReport {
    /// Gap relative to the closed-form value (zero when both are zero).
    pub fn relative_gap(&self) -> f64 {
        if self.closed_form_t_obs > 0.0 {
            self.gap / self.closed_form_t_obs
        } else {
            self.gap.abs()
        }
    }
}

/// Best observation heading for one approach heading: `(t_obs, psi2)`.
fn best_phase2(
    params: &EngagementParams,
    rel: &RelativeState,
    psi1: f64,
    n2: usize,
) -> Option<(f64, f64)> {
    let t2 = contact_time(params, rel, psi1)?;
    let (s, c) = psi1.sin_cos();
    let a = params.alpha();
    let x = rel.signed_x() + a * c * t2;
    let y = rel.y + (a * s - 1.0) * t2;
    let at_contact = RelativeState {
        x,
        y,
        mirrored: false,
    };
    let mut best: Option<(f64, f64)> = None;
    for j in 0..n2 {
        let psi2 = TAU * j as f64 / n2 as f64;
        let t = escape_time(params, &at_contact, psi2);
        if best.is_none_or(|(bt, _)| t > bt) {
            best = Some((t, psi2));
        }
    }
    best
}

/// Exhaustive `n1 × n2` sweep of constant approach and observation headings.
///
/// The result does not depend on thread scheduling: each approach heading is
/// evaluated independently and the reduction runs in grid order, keeping the
/// first maximum (smallest `psi1`, then smallest `psi2`).
pub fn sweep(
    params: &EngagementParams,
    state: &WorldState,
    n1: usize,
    n2: usize,
) -> Result<SweepReport> {
    if n1 < MIN_GRID || n2 < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "sweep grids need at least {MIN_GRID} points, got {n1} x {n2}"
        )));
    }
    let rel = to_relative(state)?;
    // Search in the un-mirrored world frame; `rel` keeps the mirror flag so
    // contact_time sees the true geometry.
    let per_heading: Vec<Option<(f64, f64)>> = (0..n1)
        .into_par_iter()
        .map(|i| best_phase2(params, &rel, TAU * i as f64 / n1 as f64, n2))
        .collect();

    let mut best_t_obs = 0.0;
    let mut best_psi1 = 0.0;
    let mut best_psi2 = 0.0;
    let mut found = false;
    for (i, entry) in per_heading.iter().enumerate() {
        if let Some((t, psi2)) = *entry {
            if !found || t > best_t_obs {
                found = true;
                best_t_obs = t;
                best_psi1 = TAU * i as f64 / n1 as f64;
                best_psi2 = psi2;
            }
        }
    }

    let closed_form_t_obs = solve(params, state)?.t_obs;
    Ok(SweepReport {
        best_psi1,
        best_psi2,
        best_t_obs,
        grid_n1: n1,
        grid_n2: n2,
        closed_form_t_obs,
        gap: closed_form_t_obs - best_t_obs,
    })
}
