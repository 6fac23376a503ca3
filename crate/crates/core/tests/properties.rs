//! Algebraic invariants of the closed forms, checked with proptest.

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use surveil::angle::{distance, mirror_heading};
use surveil::{
    classify, decision_line_slope, intersect_disk_dl, max_observation_time, observation_time,
    phase2_heading, solve, to_relative, ApproachTime, ContactBearing, EngagementParams,
    Phase1Heading, RegionLabel, RelativeState, WorldState,
};

fn params() -> impl Strategy<Value = EngagementParams> {
    (0.05f64..0.95, 0.1f64..5.0).prop_map(|(a, r)| EngagementParams::new(a, r).unwrap())
}

fn world() -> impl Strategy<Value = WorldState> {
    (-15.0f64..15.0, -15.0f64..15.0, -5.0f64..5.0)
        .prop_map(|(x, y, yt)| WorldState::new(x, y, yt).unwrap())
}

proptest! {
    #[test]
    fn decision_line_angle_is_acos_alpha(p in params()) {
        let m = decision_line_slope(&p);
        prop_assert!(m > 0.0);
        prop_assert!((m.atan() - p.alpha().acos()).abs() < 1e-12);
    }

    #[test]
    fn intersection_points_lie_on_line_and_circle(p in params(), x in 0.0f64..15.0, y in -15.0f64..15.0) {
        let rel = RelativeState { x, y, mirrored: false };
        let inter = intersect_disk_dl(&p, &rel);
        let r2 = p.radius() * p.radius();
        for &(px, py) in &inter.points {
            let scale = 1.0 + px.abs() + py.abs();
            prop_assert!((py - inter.slope_dl * px).abs() <= 1e-9 * scale);
            let circle = (px - x).powi(2) + (py - y).powi(2);
            prop_assert!((circle - r2).abs() <= 1e-9 * (r2 + x * x + y * y));
        }
        prop_assert!(inter.points.windows(2).all(|w| w[0].0 <= w[1].0));
        if inter.discriminant < 0.0 {
            prop_assert!(inter.points.len() <= 1);
        }
    }

    #[test]
    fn classify_ignores_translation_and_reflection(p in params(), s in world(), shift in -50.0f64..50.0) {
        let base = classify(&p, &to_relative(&s).unwrap());
        let moved = WorldState::new(s.x_o, s.y_o + shift, s.y_t + shift).unwrap();
        let moved_rel = to_relative(&moved).unwrap();
        // Translation can perturb y by an ulp; only compare well-separated cases.
        let rel = to_relative(&s).unwrap();
        if (moved_rel.y - rel.y).abs() == 0.0 {
            prop_assert_eq!(classify(&p, &moved_rel), base);
        }
        prop_assert_eq!(classify(&p, &to_relative(&s.mirrored()).unwrap()), base);
    }

    #[test]
    fn classify_ignores_uniform_scaling(p in params(), s in world(), k in prop_oneof![Just(0.1f64), Just(10.0), Just(0.5), Just(4.0)]) {
        let base = classify(&p, &to_relative(&s).unwrap());
        let scaled = classify(&p.scaled(k).unwrap(), &to_relative(&s.scaled(k)).unwrap());
        prop_assert_eq!(scaled, base);
    }

    #[test]
    fn phase2_heading_symmetry(p in params(), lambda in -PI..PI) {
        let b = ContactBearing::new(lambda).unwrap();
        if let Ok(psi) = phase2_heading(&p, b) {
            prop_assert!((0.0..=PI).contains(&psi));
            let mirrored = phase2_heading(&p, b.negated()).unwrap();
            prop_assert!((mirrored - (PI - psi)).abs() < 1e-12);
        }
    }

    #[test]
    fn observation_time_bounded_by_maximum(p in params(), lambda in -PI..PI) {
        let t = observation_time(&p, ContactBearing::new(lambda).unwrap());
        prop_assert!(t >= 0.0);
        prop_assert!(t <= max_observation_time(&p) * (1.0 + 1e-12));
    }

    #[test]
    fn plan_coupling(p in params(), s in world()) {
        let plan = solve(&p, &s).unwrap();
        let b1 = plan.region == RegionLabel::NoObservation;
        prop_assert_eq!(b1, plan.phase1_heading == Phase1Heading::Undefined);
        prop_assert_eq!(b1, plan.t_apr == ApproachTime::Infinite);
        prop_assert_eq!(b1, plan.t_obs == 0.0);
        if plan.region == RegionLabel::MaximumObservation {
            prop_assert!((plan.t_obs - max_observation_time(&p)).abs() <= 1e-12 * plan.t_obs);
            prop_assert_eq!(plan.phase2_heading(), Some(FRAC_PI_2));
        }
    }

    #[test]
    fn plan_mirror_and_scale(p in params(), s in world(), k in prop_oneof![Just(0.1f64), Just(10.0)]) {
        let plan = solve(&p, &s).unwrap();
        let mirrored = solve(&p, &s.mirrored()).unwrap();
        let scaled = solve(&p.scaled(k).unwrap(), &s.scaled(k)).unwrap();
        prop_assert_eq!(mirrored.region, plan.region);
        prop_assert_eq!(scaled.region, plan.region);
        if s.x_o != 0.0 {
            if let (Some(h), Some(hm)) = (plan.chosen_phase1, mirrored.chosen_phase1) {
                prop_assert!(distance(hm, mirror_heading(h)) < 1e-9);
            }
            if let (Some(h), Some(hm)) = (plan.phase2_heading(), mirrored.phase2_heading()) {
                prop_assert!(distance(hm, mirror_heading(h)) < 1e-9);
            }
        }
        prop_assert!((mirrored.t_obs - plan.t_obs).abs() <= 1e-9 * (1.0 + plan.t_obs));
        prop_assert!((scaled.t_obs - k * plan.t_obs).abs() <= 1e-9 * (1.0 + k * plan.t_obs));
        if let (Some(h), Some(hs)) = (plan.chosen_phase1, scaled.chosen_phase1) {
            prop_assert!(distance(h, hs) < 1e-9);
        }
        if let (Some(t), Some(ts)) = (plan.t_apr.finite(), scaled.t_apr.finite()) {
            prop_assert!((ts - k * t).abs() <= 1e-9 * (1.0 + k * t));
        }
    }
}
