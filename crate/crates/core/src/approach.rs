//! Approach phase and the complete two-phase strategy.
//!
//! The approach phase is a straight line. Which line depends on the region:
//!
//! * limited observation: the leftmost DL crossing `I` of the disk is carried
//!   perpendicular to the DL, reaching the target's path exactly when the
//!   target does. The target then enters the disk at `I`.
//! * maximum observation: the disk's lowest point `W` can reach the target's
//!   path ahead of the target. Any heading that delivers `W` onto the part of
//!   the path the target has not yet reached is optimal; the two interval
//!   endpoints deliver it exactly as the target arrives. Interior headings get
//!   there early, after which the observer rides the path (heading π/2) until
//!   the target catches up with `W`.
//!
//! Every operation here takes and returns headings in the world frame; mirrored
//! states (`x_o < 0`) are reflected internally.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::angle::{mirror_heading, normalize};
use crate::engagement::{
    classify, intersect_disk_dl, to_relative, DiskLineIntersection, EngagementParams, RegionLabel,
    RelativeState, WorldState,
};
use crate::error::{Error, Result};
use crate::observation::{
    interior_phase2, max_observation_time, observation_time, phase2_heading, ContactBearing,
    Phase2Solution,
};

/// Slack, in radians, when checking that a heading lies in the B3 interval.
const INTERVAL_SLACK: f64 = 1e-9;

/// Counter-clockwise arc of headings from `lo` to `hi`.
///
/// `lo` is kept in `[0, 2π)` and `hi = lo + width`. For non-mirrored states the
/// arc sits inside `[π/2, 3π/2]`; reflected arcs can straddle 0, in which case
/// `hi` exceeds 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeadingInterval {
    lo: f64,
    hi: f64,
}

impl HeadingInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || hi < lo || hi - lo >= TAU {
            return Err(Error::InvalidArgument(format!(
                "heading interval must satisfy lo <= hi < lo + 2pi, got [{lo}, {hi}]"
            )));
        }
        let shift = normalize(lo) - lo;
        Ok(Self {
            lo: lo + shift,
            hi: hi + shift,
        })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        normalize(0.5 * (self.lo + self.hi))
    }

    pub fn is_degenerate(&self) -> bool {
        self.hi == self.lo
    }

    pub fn pick(&self, pick: IntervalPick) -> f64 {
        match pick {
            IntervalPick::Lo => self.lo,
            IntervalPick::Mid => self.mid(),
            IntervalPick::Hi => normalize(self.hi),
        }
    }

    pub fn contains(&self, psi: f64, slack: f64) -> bool {
        let offset = normalize(psi - self.lo);
        offset <= self.width() + slack || offset >= TAU - slack
    }

    /// The arc reflected across the ŷ-axis.
    pub fn mirrored(&self) -> Self {
        let lo = mirror_heading(self.hi);
        Self {
            lo,
            hi: lo + self.width(),
        }
    }
}

/// Which heading of the B3 interval to fly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntervalPick {
    Lo,
    #[default]
    Mid,
    Hi,
}

impl IntervalPick {
    pub fn as_str(&self) -> &'static str {
        match self {
            IntervalPick::Lo => "lo",
            IntervalPick::Mid => "mid",
            IntervalPick::Hi => "hi",
        }
    }
}

impl fmt::Display for IntervalPick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IntervalPick {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lo" => Ok(IntervalPick::Lo),
            "mid" => Ok(IntervalPick::Mid),
            "hi" => Ok(IntervalPick::Hi),
            other => Err(Error::InvalidArgument(format!(
                "interval pick must be one of lo, mid, hi; got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phase1Heading {
    Undefined,
    Single(f64),
    Interval(HeadingInterval),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phase2Plan {
    Undefined,
    Solution(Phase2Solution),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ApproachTime {
    Infinite,
    Finite(f64),
}

impl ApproachTime {
    pub fn finite(&self) -> Option<f64> {
        match self {
            ApproachTime::Infinite => None,
            ApproachTime::Finite(t) => Some(*t),
        }
    }
}

/// The optimal two-phase strategy for one initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyPlan {
    pub region: RegionLabel,
    pub phase1_heading: Phase1Heading,
    pub phase2: Phase2Plan,
    pub t_apr: ApproachTime,
    pub t_obs: f64,
    /// Heading actually flown in the approach phase; `None` in B1.
    pub chosen_phase1: Option<f64>,
    /// The target started on or inside the disk, so the approach phase is empty.
    pub started_inside: bool,
    /// The approach ends by riding the target's path (interior B3 headings).
    pub rides_path: bool,
}

impl StrategyPlan {
    pub fn phase2_heading(&self) -> Option<f64> {
        match self.phase2 {
            Phase2Plan::Undefined => None,
            Phase2Plan::Solution(s) => Some(s.heading),
        }
    }

    /// Total engagement time `t_apr + t_obs`, if contact happens.
    pub fn t_final(&self) -> Option<f64> {
        self.t_apr.finite().map(|t| t + self.t_obs)
    }
}

fn to_world_heading(rel: &RelativeState, psi: f64) -> f64 {
    if rel.mirrored {
        mirror_heading(psi)
    } else {
        normalize(psi)
    }
}

fn require_region(
    params: &EngagementParams,
    rel: &RelativeState,
    expected: RegionLabel,
) -> Result<()> {
    let found = classify(params, rel);
    if found != expected {
        return Err(Error::WrongRegion { expected, found });
    }
    if rel.target_inside(params) {
        return Err(Error::AlreadyObserving);
    }
    Ok(())
}

/// Optimal B2 approach heading, `acos(alpha) + π/2`, reflected for mirrored states.
pub fn phase1_heading_case2(params: &EngagementParams, rel: &RelativeState) -> Result<f64> {
    require_region(params, rel, RegionLabel::LimitedObservation)?;
    Ok(to_world_heading(rel, params.alpha().acos() + FRAC_PI_2))
}

/// Approach and observation times in B2.
///
/// `t_apr = |I| / sqrt(1 − alpha²)` is the distance the target covers before `I`
/// meets it; `t_obs = 2R(alpha + (y − y_I)/R)/(1 − alpha²)`.
pub fn phase1_time_case2(
    params: &EngagementParams,
    rel: &RelativeState,
    inter: &DiskLineIntersection,
) -> Result<(f64, f64)> {
    require_region(params, rel, RegionLabel::LimitedObservation)?;
    let (x_i, y_i) = inter.leftmost().ok_or_else(|| {
        Error::InvalidArgument("decision line does not cross the disk twice".into())
    })?;
    let a = params.alpha();
    let r = params.radius();
    let t_apr = x_i.hypot(y_i) / (1.0 - a * a).sqrt();
    let t_obs = 2.0 * r / (1.0 - a * a) * (a + (rel.y - y_i) / r);
    Ok((t_apr, t_obs))
}

/// Contact bearing when the target enters at the leftmost DL crossing.
fn case2_bearing(rel: &RelativeState, inter: &DiskLineIntersection) -> Option<ContactBearing> {
    inter
        .leftmost()
        .map(|(x_i, y_i)| ContactBearing::from_relative(rel.x - x_i, rel.y - y_i))
}

/// The B3 interval of optimal approach headings,
/// `[π/2 − ξ + asin(sin ξ/alpha), 3π/2 − ξ − asin(sin ξ/alpha)]` with
/// `ξ = asin(x_W/|W|)`.
pub fn phase1_interval_case3(
    params: &EngagementParams,
    rel: &RelativeState,
) -> Result<HeadingInterval> {
    require_region(params, rel, RegionLabel::MaximumObservation)?;
    let (xw, yw) = rel.disk_bottom(params);
    let dist = xw.hypot(yw);
    let sin_xi = if dist > 0.0 { xw / dist } else { 0.0 };
    let xi = sin_xi.asin();
    let ratio = sin_xi / params.alpha();
    // W on or above the DL means sin ξ <= alpha; only rounding can push it past 1.
    debug_assert!(ratio <= 1.0 + 1e-6, "sin(xi)/alpha = {ratio}");
    let gamma = ratio.min(1.0).asin();
    let lo = FRAC_PI_2 - xi + gamma;
    let hi = (1.5 * PI - xi - gamma).max(lo);
    let interval = HeadingInterval::new(lo, hi)?;
    Ok(if rel.mirrored {
        interval.mirrored()
    } else {
        interval
    })
}

/// Time until the target reaches the disk's lowest point when the observer
/// flies `psi1` from the B3 interval.
///
/// At the interval endpoints `W` meets the target on its path, so
/// `t_apr = (y − R)/(1 − alpha·sin ψ)`. Interior headings bring `W` onto the
/// path after `τ = x/(alpha·|cos ψ|)` with a head start on the target, which the
/// target then closes at rate `1 − alpha` while the observer rides the path.
pub fn phase1_time_case3(params: &EngagementParams, rel: &RelativeState, psi1: f64) -> Result<f64> {
    let interval = phase1_interval_case3(params, rel)?;
    if !interval.contains(psi1, INTERVAL_SLACK) {
        return Err(Error::HeadingOutsideInterval(psi1));
    }
    let psi = if rel.mirrored {
        mirror_heading(psi1)
    } else {
        psi1
    };
    let a = params.alpha();
    let (_, yw) = rel.disk_bottom(params);
    let (sin_p, cos_p) = psi.sin_cos();
    let to_path = if rel.x == 0.0 {
        0.0
    } else {
        rel.x / (a * -cos_p)
    };
    let lead = yw + a * sin_p * to_path - to_path;
    Ok(to_path + lead.max(0.0) / (1.0 - a))
}

/// Computes the optimal strategy, flying the interval midpoint in B3.
pub fn solve(params: &EngagementParams, state: &WorldState) -> Result<StrategyPlan> {
    solve_with_pick(params, state, IntervalPick::Mid)
}

/// Computes the optimal strategy, flying the chosen point of the B3 interval.
pub fn solve_with_pick(
    params: &EngagementParams,
    state: &WorldState,
    pick: IntervalPick,
) -> Result<StrategyPlan> {
    let rel = to_relative(state)?;
    let region = classify(params, &rel);

    if rel.target_inside(params) {
        return Ok(solve_inside(params, &rel, region));
    }

    match region {
        RegionLabel::NoObservation => Ok(no_observation_plan(false)),
        RegionLabel::LimitedObservation => {
            let inter = intersect_disk_dl(params, &rel);
            let psi1 = phase1_heading_case2(params, &rel)?;
            let (t_apr, t_obs) = phase1_time_case2(params, &rel, &inter)?;
            let bearing = case2_bearing(&rel, &inter).expect("B2 has two crossings");
            let psi2 = phase2_heading(params, bearing)?;
            let world_bearing = if rel.mirrored {
                bearing.negated()
            } else {
                bearing
            };
            Ok(StrategyPlan {
                region,
                phase1_heading: Phase1Heading::Single(psi1),
                phase2: Phase2Plan::Solution(Phase2Solution {
                    heading: to_world_heading(&rel, psi2),
                    t_obs,
                    lambda: world_bearing,
                }),
                t_apr: ApproachTime::Finite(t_apr),
                t_obs,
                chosen_phase1: Some(psi1),
                started_inside: false,
                rides_path: false,
            })
        }
        RegionLabel::MaximumObservation => {
            let interval = phase1_interval_case3(params, &rel)?;
            let psi1 = interval.pick(pick);
            let t_apr = phase1_time_case3(params, &rel, psi1)?;
            let t_obs = max_observation_time(params);
            let rides_path = !interval.is_degenerate()
                && interval.pick(IntervalPick::Lo) != psi1
                && interval.pick(IntervalPick::Hi) != psi1;
            Ok(StrategyPlan {
                region,
                phase1_heading: Phase1Heading::Interval(interval),
                phase2: Phase2Plan::Solution(Phase2Solution {
                    heading: FRAC_PI_2,
                    t_obs,
                    lambda: ContactBearing::from_relative(0.0, 1.0),
                }),
                t_apr: ApproachTime::Finite(t_apr),
                t_obs,
                chosen_phase1: Some(psi1),
                started_inside: false,
                rides_path,
            })
        }
    }
}

fn no_observation_plan(started_inside: bool) -> StrategyPlan {
    StrategyPlan {
        region: RegionLabel::NoObservation,
        phase1_heading: Phase1Heading::Undefined,
        phase2: Phase2Plan::Undefined,
        t_apr: ApproachTime::Infinite,
        t_obs: 0.0,
        chosen_phase1: None,
        started_inside,
        rides_path: false,
    }
}

/// Target already on or inside the disk: the observation phase starts at once.
fn solve_inside(
    params: &EngagementParams,
    rel: &RelativeState,
    region: RegionLabel,
) -> StrategyPlan {
    let Some(sol) = interior_phase2(params, rel) else {
        return no_observation_plan(true);
    };
    let heading = to_world_heading(rel, sol.heading);
    let lambda = if rel.mirrored {
        sol.lambda.negated()
    } else {
        sol.lambda
    };
    // On the boundary the contact formula applies verbatim; use it so that B3
    // reports exactly 2R/(1 − alpha).
    let t_obs = if region == RegionLabel::MaximumObservation {
        max_observation_time(params)
    } else if rel.range() >= params.radius() {
        observation_time(params, sol.lambda)
    } else {
        sol.t_obs
    };
    StrategyPlan {
        region,
        phase1_heading: Phase1Heading::Single(heading),
        phase2: Phase2Plan::Solution(Phase2Solution {
            heading,
            t_obs,
            lambda,
        }),
        t_apr: ApproachTime::Finite(0.0),
        t_obs,
        chosen_phase1: Some(heading),
        started_inside: true,
        rides_path: false,
    }
}
