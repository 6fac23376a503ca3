//! Scenario files: flat `key = value` text, one key per line, `#` comments.
//!
//! ```text
//! # Scenario B
//! alpha = 0.8
//! radius = 2
//! x_O = 5
//! y_O = 2
//! y_T = 0
//! dt = 0.01
//! phase3_pick = mid
//! ```
//!
//! `alpha`, `radius`, `x_O`, `y_O` and `y_T` are required. `dt` defaults to
//! 0.01, `phase3_pick` to `mid`, and `horizon` is optional.

use std::fmt::Write as _;

use thiserror::Error;

use crate::approach::IntervalPick;
use crate::engagement::{EngagementParams, WorldState};
use crate::error::Error as CoreError;

pub const DEFAULT_DT: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error(transparent)]
    Invalid(#[from] CoreError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioConfig {
    pub alpha: f64,
    pub radius: f64,
    pub x_o: f64,
    pub y_o: f64,
    pub y_t: f64,
    pub dt: f64,
    pub phase3_pick: IntervalPick,
    pub horizon: Option<f64>,
}

impl ScenarioConfig {
    pub fn new(alpha: f64, radius: f64, x_o: f64, y_o: f64, y_t: f64) -> Self {
        Self {
            alpha,
            radius,
            x_o,
            y_o,
            y_t,
            dt: DEFAULT_DT,
            phase3_pick: IntervalPick::Mid,
            horizon: None,
        }
    }

    pub fn params(&self) -> Result<EngagementParams, CoreError> {
        EngagementParams::new(self.alpha, self.radius)
    }

    pub fn state(&self) -> Result<WorldState, CoreError> {
        WorldState::new(self.x_o, self.y_o, self.y_t)
    }

    /// Checks every invariant the engagement types impose, plus `dt > 0`.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.params()?;
        self.state()?;
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(CoreError::InvalidArgument(format!(
                "dt must be positive, got {}",
                self.dt
            ))
            .into());
        }
        if let Some(h) = self.horizon {
            if !(h.is_finite() && h > 0.0) {
                return Err(CoreError::InvalidArgument(format!(
                    "horizon must be positive, got {h}"
                ))
                .into());
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut alpha = None;
        let mut radius = None;
        let mut x_o = None;
        let mut y_o = None;
        let mut y_t = None;
        let mut dt = None;
        let mut pick = None;
        let mut horizon = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| ConfigError::Syntax { line, message };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected `key = value`, got {content:?}")))?;
            let key = key.trim();
            let value = value.trim();
            let number = || -> Result<f64, ConfigError> {
                value
                    .parse::<f64>()
                    .map_err(|_| syntax(format!("`{key}` expects a number, got {value:?}")))
            };
            let slot = match key {
                "alpha" => &mut alpha,
                "radius" => &mut radius,
                "x_O" => &mut x_o,
                "y_O" => &mut y_o,
                "y_T" => &mut y_t,
                "dt" => &mut dt,
                "horizon" => &mut horizon,
                "phase3_pick" => {
                    if pick.is_some() {
                        return Err(syntax("duplicate key `phase3_pick`".into()));
                    }
                    pick = Some(
                        value
                            .parse::<IntervalPick>()
                            .map_err(|e| syntax(e.to_string()))?,
                    );
                    continue;
                }
                other => return Err(syntax(format!("unknown key `{other}`"))),
            };
            if slot.is_some() {
                return Err(syntax(format!("duplicate key `{key}`")));
            }
            *slot = Some(number()?);
        }

        let config = Self {
            alpha: alpha.ok_or(ConfigError::Missing("alpha"))?,
            radius: radius.ok_or(ConfigError::Missing("radius"))?,
            x_o: x_o.ok_or(ConfigError::Missing("x_O"))?,
            y_o: y_o.ok_or(ConfigError::Missing("y_O"))?,
            y_t: y_t.ok_or(ConfigError::Missing("y_T"))?,
            dt: dt.unwrap_or(DEFAULT_DT),
            phase3_pick: pick.unwrap_or_default(),
            horizon,
        };
        config.validate()?;
        Ok(config)
    }

    /// Serialises every field; `parse(to_text())` reproduces the config exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alpha = {}", self.alpha);
        let _ = writeln!(out, "radius = {}", self.radius);
        let _ = writeln!(out, "x_O = {}", self.x_o);
        let _ = writeln!(out, "y_O = {}", self.y_o);
        let _ = writeln!(out, "y_T = {}", self.y_t);
        let _ = writeln!(out, "dt = {}", self.dt);
        let _ = writeln!(out, "phase3_pick = {}", self.phase3_pick);
        if let Some(h) = self.horizon {
            let _ = writeln!(out, "horizon = {h}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SCENARIO_B: &str = "\
# Scenario B
alpha = 0.8
radius = 2.0   # DU
x_O = 5
y_O = 2
y_T = 0
";

    #[test]
    fn parses_with_defaults_and_comments() {
        let c = ScenarioConfig::parse(SCENARIO_B).unwrap();
        assert_eq!(c, ScenarioConfig::new(0.8, 2.0, 5.0, 2.0, 0.0));
        assert_eq!(c.dt, DEFAULT_DT);
        assert_eq!(c.phase3_pick, IntervalPick::Mid);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            ScenarioConfig::parse("alpha = 0.8\nradius = 2\nx_O = 5\ny_O = 2\n"),
            Err(ConfigError::Missing("y_T"))
        ));
        let err = ScenarioConfig::parse("alpha = 0.8\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 2, .. }));
        assert!(ScenarioConfig::parse("alpha 0.8\n").is_err());
        assert!(ScenarioConfig::parse("alpha = 0.8\nalpha = 0.7\n").is_err());
        assert!(ScenarioConfig::parse("alpha = fast\n").is_err());
        let invalid = ScenarioConfig::parse("alpha = 1.5\nradius = 2\nx_O = 5\ny_O = 2\ny_T = 0\n");
        assert!(matches!(invalid, Err(ConfigError::Invalid(_))));
        let bad_dt =
            ScenarioConfig::parse("alpha = .5\nradius = 2\nx_O = 5\ny_O = 2\ny_T = 0\ndt = 0\n");
        assert!(bad_dt.is_err());
        let bad_pick = ScenarioConfig::parse("phase3_pick = middle\n");
        assert!(matches!(bad_pick, Err(ConfigError::Syntax { line: 1, .. })));
    }

    fn pick_strategy() -> impl Strategy<Value = IntervalPick> {
        prop_oneof![
            Just(IntervalPick::Lo),
            Just(IntervalPick::Mid),
            Just(IntervalPick::Hi)
        ]
    }

    proptest! {
        #[test]
        fn written_configs_parse_back_identically(
            alpha in 0.001f64..0.999,
            radius in 1e-3f64..1e3,
            x_o in -1e4f64..1e4,
            y_o in -1e4f64..1e4,
            y_t in -1e4f64..1e4,
            dt in 1e-4f64..1.0,
            pick in pick_strategy(),
            horizon in proptest::option::of(1e-2f64..1e5),
        ) {
            let config = ScenarioConfig { alpha, radius, x_o, y_o, y_t, dt, phase3_pick: pick, horizon };
            prop_assert_eq!(ScenarioConfig::parse(&config.to_text()).unwrap(), config);
        }
    }
}
