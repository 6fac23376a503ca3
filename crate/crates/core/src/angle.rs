//! Small angle helpers. Angles are radians everywhere except human-facing output.

use std::f64::consts::{PI, TAU};

/// Wraps an angle into `[0, 2π)`.
pub fn normalize(angle: f64) -> f64 {
    let wrapped = angle.rem_euclid(TAU);
    // rem_euclid can return TAU itself for tiny negative inputs.
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Reflects a heading across the ŷ-axis (x → −x), result in `[0, 2π)`.
pub fn mirror_heading(psi: f64) -> f64 {
    normalize(PI - psi)
}

pub fn to_degrees(rad: f64) -> f64 {
    rad.to_degrees()
}

pub fn to_radians(deg: f64) -> f64 {
    deg.to_radians()
}

/// Smallest absolute difference between two angles, in `[0, π]`.
pub fn distance(a: f64, b: f64) -> f64 {
    let d = normalize(a - b);
    d.min(TAU - d)
}
