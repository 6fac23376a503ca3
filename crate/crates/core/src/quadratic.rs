//! Real roots of `a·t² + 2·h·t + c = 0` without cancellation.
//!
//! Both the decision-line intersection and the disk event times reduce to this
//! form. The larger-magnitude root is formed with a sign-matched square root and
//! the other one from the product of roots `c / a`.

/// Roots of a quadratic in half-coefficient form, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Roots {
    None,
    /// Double root (tangency).
    One(f64),
    Two(f64, f64),
}

/// Reduced discriminant `h² − a·c`.
pub(crate) fn discriminant(a: f64, h: f64, c: f64) -> f64 {
    h * h - a * c
}

/// Solves `a·t² + 2·h·t + c = 0` for `a > 0`.
///
/// A discriminant with `|D| ≤ tangent_tol` is treated as an exact double root.
pub(crate) fn solve(a: f64, h: f64, c: f64, tangent_tol: f64) -> Roots {
    debug_assert!(a > 0.0);
    let disc = discriminant(a, h, c);
    if disc.abs() <= tangent_tol {
        return Roots::One(-h / a);
    }
    if disc < 0.0 {
        return Roots::None;
    }
    let sq = disc.sqrt();
    let q = -(h + h.signum() * sq);
    // q == 0 would need disc == 0, which the tangency branch already took.
    debug_assert!(q != 0.0);
    let r1 = q / a;
    let r2 = c / q;
    if r1 <= r2 {
        Roots::Two(r1, r2)
    } else {
        Roots::Two(r2, r1)
    }
}
