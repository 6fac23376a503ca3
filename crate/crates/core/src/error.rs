use thiserror::Error;

use crate::engagement::RegionLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid engagement parameters: {0}")]
    InvalidParams(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    /// The contact bearing lies in the cone where the target escapes immediately.
    #[error("no observation possible at contact bearing {lambda} rad (zero-observation cone)")]
    NoObservation { lambda: f64 },

    #[error("operation requires a state in {expected}, but the state is in {found}")]
    WrongRegion {
        expected: RegionLabel,
        found: RegionLabel,
    },

    #[error("the target is already inside the observation disk; there is no approach phase")]
    AlreadyObserving,

    #[error("heading {0} rad lies outside the maximum-observation heading interval")]
    HeadingOutsideInterval(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
