//! Engagement parameters, states, the decision line, and region classification.
//!
//! The decision line (DL) passes through the target and makes the angle
//! `acos(alpha)` with the x̂-axis. A point on or above it can reach the target's
//! path no later than the target does; a point below it cannot. Where the
//! observer's disk sits relative to the DL decides how much observation is
//! achievable at all.

use std::fmt;

use crate::error::{Error, Result};
use crate::observation;
use crate::quadratic::{self, Roots};

/// Relative slack used when deciding that the disk's lowest point lies on the DL.
pub const ON_LINE_TOL: f64 = 1e-9;

/// Relative slack on the DL/disk discriminant below which the line is tangent.
const TANGENT_TOL: f64 = 1e-12;

/// Speed ratio and observation radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngagementParams {
    alpha: f64,
    radius: f64,
}

impl EngagementParams {
    pub fn new(alpha: f64, radius: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParams(format!(
                "speed ratio must satisfy 0 < alpha < 1, got {alpha}"
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParams(format!(
                "observation radius must be positive, got {radius}"
            )));
        }
        Ok(Self { alpha, radius })
    }

    /// Observer speed over target speed.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Same speed ratio, radius multiplied by `k`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(self.alpha, self.radius * k)
    }
}

/// Absolute positions in the target-aligned frame: observer at `(x_o, y_o)`,
/// target at `(0, y_t)` moving in +ŷ at unit speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldState {
    pub x_o: f64,
    pub y_o: f64,
    pub y_t: f64,
}

impl WorldState {
    pub fn new(x_o: f64, y_o: f64, y_t: f64) -> Result<Self> {
        let state = Self { x_o, y_o, y_t };
        state.validate()?;
        Ok(state)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_o.is_finite() && self.y_o.is_finite() && self.y_t.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "non-finite coordinates ({}, {}, {})",
                self.x_o, self.y_o, self.y_t
            )))
        }
    }

    /// Distance between observer and target.
    pub fn separation(&self) -> f64 {
        self.x_o.hypot(self.y_o - self.y_t)
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            x_o: self.x_o * k,
            y_o: self.y_o * k,
            y_t: self.y_t * k,
        }
    }

    pub fn mirrored(&self) -> Self {
        Self {
            x_o: -self.x_o,
            ..*self
        }
    }
}

/// Observer position relative to the target, reflected so that `x >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativeState {
    pub x: f64,
    pub y: f64,
    /// Set when the original observer had `x_o < 0`.
    pub mirrored: bool,
}

impl RelativeState {
    /// Rebuilds the world state given the target's absolute ordinate.
    pub fn to_world(&self, y_t: f64) -> WorldState {
        WorldState {
            x_o: if self.mirrored { -self.x } else { self.x },
            y_o: self.y + y_t,
            y_t,
        }
    }

    /// Signed abscissa in the un-mirrored frame.
    pub fn signed_x(&self) -> f64 {
        if self.mirrored {
            -self.x
        } else {
            self.x
        }
    }

    pub fn range(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// True when the target is on or inside the observation disk.
    pub fn target_inside(&self, params: &EngagementParams) -> bool {
        self.x * self.x + self.y * self.y <= params.radius * params.radius
    }

    /// Lowest point of the observation disk, `W = (x, y − R)`.
    pub fn disk_bottom(&self, params: &EngagementParams) -> (f64, f64) {
        (self.x, self.y - params.radius)
    }
}

/// Which part of the state space a configuration belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    /// No heading ever brings the target into the disk.
    NoObservation,
    /// Observation is possible but shorter than the maximum.
    LimitedObservation,
    /// The maximum observation time `2R/(1 − alpha)` is achievable.
    MaximumObservation,
}

impl RegionLabel {
    /// Short tag, `B1`/`B2`/`B3`.
    pub fn short(&self) -> &'static str {
        match self {
            RegionLabel::NoObservation => "B1",
            RegionLabel::LimitedObservation => "B2",
            RegionLabel::MaximumObservation => "B3",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegionLabel::NoObservation => "NoObservation",
            RegionLabel::LimitedObservation => "LimitedObservation",
            RegionLabel::MaximumObservation => "MaximumObservation",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "B1" | "NoObservation" => Some(RegionLabel::NoObservation),
            "B2" | "LimitedObservation" => Some(RegionLabel::LimitedObservation),
            "B3" | "MaximumObservation" => Some(RegionLabel::MaximumObservation),
            _ => None,
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.short(), self.name())
    }
}

/// Intersection of the decision line `y = m·x` with the disk boundary, in the
/// mirror-normalised relative frame.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskLineIntersection {
    pub slope_dl: f64,
    /// `x² + y² − R²` of the observer's relative position.
    pub sigma: f64,
    /// Reduced discriminant `(x + m·y)² − sigma/alpha²`.
    pub discriminant: f64,
    /// Zero, one or two points, sorted by ascending x.
    pub points: Vec<(f64, f64)>,
}

impl DiskLineIntersection {
    /// The leftmost intersection `I`, if the line crosses the disk twice.
    pub fn leftmost(&self) -> Option<(f64, f64)> {
        match self.points.as_slice() {
            [first, _] => Some(*first),
            _ => None,
        }
    }
}

pub fn to_relative(state: &WorldState) -> Result<RelativeState> {
    state.validate()?;
    Ok(RelativeState {
        x: state.x_o.abs(),
        y: state.y_o - state.y_t,
        mirrored: state.x_o < 0.0,
    })
}

/// Slope of the decision line, `tan(acos(alpha)) = sqrt(1 − alpha²)/alpha`.
pub fn decision_line_slope(params: &EngagementParams) -> f64 {
    let a = params.alpha;
    (1.0 - a * a).sqrt() / a
}

/// Intersects the decision line with the boundary of the observation disk.
///
/// Substituting `y = m·x` into `(x − x_r)² + (y − y_r)² = R²` and using
/// `1 + m² = 1/alpha²` gives `x²/alpha² − 2(x_r + m·y_r)·x + sigma = 0`.
pub fn intersect_disk_dl(params: &EngagementParams, rel: &RelativeState) -> DiskLineIntersection {
    let m = decision_line_slope(params);
    let a = 1.0 / (params.alpha * params.alpha);
    let k = rel.x + m * rel.y;
    let sigma = rel.x * rel.x + rel.y * rel.y - params.radius * params.radius;
    let discriminant = quadratic::discriminant(a, -k, sigma);
    let tol = TANGENT_TOL * (k * k + (a * sigma).abs());
    let points = match quadratic::solve(a, -k, sigma, tol) {
        Roots::None => Vec::new(),
        Roots::One(x) => vec![(x, m * x)],
        Roots::Two(x1, x2) => vec![(x1, m * x1), (x2, m * x2)],
    };
    DiskLineIntersection {
        slope_dl: m,
        sigma,
        discriminant,
        points,
    }
}

/// True when the disk's lowest point `W` lies on or above the decision line.
pub fn bottom_on_or_above_dl(params: &EngagementParams, rel: &RelativeState) -> bool {
    let (xw, yw) = rel.disk_bottom(params);
    let m = decision_line_slope(params);
    yw - m * xw >= -ON_LINE_TOL * params.radius.max(1.0)
}

/// Assigns a relative state to one of the three regions.
///
/// * `W` on or above the DL: maximum observation.
/// * Otherwise two DL crossings whose leftmost one `I` is left of the observer
///   and on the reachable half of the line (`y_I >= 0`): limited observation.
/// * Everything else, tangency included: no observation.
///
/// A target that already sits inside the disk has no approach phase; it is
/// labelled by the observation time still achievable from where it is.
pub fn classify(params: &EngagementParams, rel: &RelativeState) -> RegionLabel {
    if bottom_on_or_above_dl(params, rel) {
        return RegionLabel::MaximumObservation;
    }
    if rel.target_inside(params) {
        return if observation::interior_observation_time(params, rel) > 0.0 {
            RegionLabel::LimitedObservation
        } else {
            RegionLabel::NoObservation
        };
    }
    let inter = intersect_disk_dl(params, rel);
    match inter.leftmost() {
        // Both crossings on the lower-left ray (y < 0) are behind the target and
        // unreachable; with the target outside the disk they always come in pairs.
        Some((x_i, y_i)) if x_i < rel.x && y_i >= 0.0 => RegionLabel::LimitedObservation,
        _ => RegionLabel::NoObservation,
    }
}
