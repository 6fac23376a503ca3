//! Planning, simulation and verification for a slow observer that tries to keep
//! a faster, constant-course target inside its circular observation disk.
//!
//! Everything is expressed in a frame whose ŷ-axis is aligned with the target's
//! velocity. The target moves at unit speed, the observer at speed `alpha < 1`,
//! and the observer's heading is the only control. An engagement runs in two
//! phases: an approach phase that ends when the target first touches the disk
//! (time `t2`), and an observation phase that ends when the target escapes
//! (time `tf`).
//!
//! The crate is organised bottom-up:
//!
//! * [`engagement`]: parameters, states, the decision line and region labels.
//! * [`observation`]: optimal heading and duration once the target is in contact.
//! * [`approach`]: optimal approach headings and the full [`StrategyPlan`].
//! * [`simulator`]: exact straight-line kinematics with analytic event times.
//! * [`oracle`]: brute-force heading sweeps that check the closed forms.
//! * [`config`], [`scenario`] and [`export`]: scenario files, the reference
//!   scenarios and plain-text output used by the command-line front end.

pub mod angle;
pub mod approach;
pub mod config;
pub mod engagement;
mod error;
pub mod export;
pub mod observation;
pub mod oracle;
mod quadratic;
pub mod scenario;
pub mod simulator;

pub use approach::{
    solve, solve_with_pick, ApproachTime, HeadingInterval, IntervalPick, Phase1Heading, Phase2Plan,
    StrategyPlan,
};
pub use config::{ConfigError, ScenarioConfig};
pub use engagement::{
    classify, decision_line_slope, intersect_disk_dl, to_relative, DiskLineIntersection,
    EngagementParams, RegionLabel, RelativeState, WorldState,
};
pub use error::{Error, Result};
pub use observation::{
    max_observation_time, observation_time, phase2_heading, zero_observation_cone, ContactBearing,
    Phase2Solution,
};
pub use oracle::{sweep, SweepReport};
pub use simulator::{contact_time, escape_time, simulate, simulate_plan, SimOptions, Trajectory};
