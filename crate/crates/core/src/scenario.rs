//! The three reference scenarios, one per region.

use std::fmt;
use std::str::FromStr;

use crate::config::ScenarioConfig;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Observer and disk entirely below the decision line.
    A,
    /// Decision line cuts the disk left of the observer.
    B,
    /// Disk bottom above the decision line.
    C,
}

impl Scenario {
    pub const ALL: [Scenario; 3] = [Scenario::A, Scenario::B, Scenario::C];

    pub fn config(&self) -> ScenarioConfig {
        match self {
            Scenario::A => ScenarioConfig::new(0.60, 2.0, 8.0, 4.0, 0.0),
            Scenario::B => ScenarioConfig::new(0.80, 2.0, 5.0, 2.0, 0.0),
            Scenario::C => ScenarioConfig::new(0.70, 2.0, 3.0, 6.0, 0.0),
        }
    }

    pub fn title(&self) -> &'static str {
        match self {
            Scenario::A => "Scenario A - No Observation",
            Scenario::B => "Scenario B - Limited Observation",
            Scenario::C => "Scenario C - Maximum Observation",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scenario::A => "A",
            Scenario::B => "B",
            Scenario::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Scenario::A),
            "B" => Ok(Scenario::B),
            "C" => Ok(Scenario::C),
            _ => Err(Error::InvalidArgument(format!(
                "unknown scenario {s:?}; expected A, B or C"
            ))),
        }
    }
}
