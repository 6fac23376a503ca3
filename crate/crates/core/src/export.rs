//! Plain-text output: trajectory CSV, plan files, and human-readable reports.
//!
//! Human-facing text prints angles in degrees. Machine files (CSV, plan files)
//! keep radians.

use std::fmt::Write as _;

use crate::angle::normalize;
use crate::approach::{solve_with_pick, ApproachTime, IntervalPick, Phase1Heading, StrategyPlan};
use crate::engagement::{
    decision_line_slope, intersect_disk_dl, to_relative, EngagementParams, RegionLabel, WorldState,
};
use crate::error::Result;
use crate::oracle::SweepReport;
use crate::scenario::Scenario;
use crate::simulator::{simulate_plan, SimOptions, Trajectory};

pub const CSV_HEADER: &str = "t,x_O,y_O,y_T,rho,phase";

/// `value` with `digits` significant digits; scientific notation outside
/// `[1e-4, 1e15)`.
pub fn format_sig(value: f64, digits: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let exp = value.abs().log10().floor() as i32;
    if !(-4..15).contains(&exp) {
        return format!("{:.*e}", digits.saturating_sub(1), value);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let mut s = format!("{value:.decimals$}");
    // Rounding may carry into a new leading digit (9.999995 -> 10.00000).
    let rounded: f64 = s.parse().unwrap_or(value);
    let exp2 = rounded.abs().log10().floor() as i32;
    if exp2 > exp {
        let decimals = (digits as i32 - 1 - exp2).max(0) as usize;
        s = format!("{value:.decimals$}");
    }
    s
}

/// Table style: five significant digits but never more than four decimals,
/// so values that are zero up to rounding print as `0.0000`.
pub fn format_table(value: f64) -> String {
    let exp = if value == 0.0 {
        0
    } else {
        value.abs().log10().floor() as i32
    };
    let mut decimals = (4 - exp).clamp(0, 4) as usize;
    let mut s = format!("{value:.decimals$}");
    let rounded: f64 = s.parse().unwrap_or(value);
    if rounded != 0.0 && (rounded.abs().log10().floor() as i32) > exp && decimals > 0 {
        decimals -= 1;
        s = format!("{value:.decimals$}");
    }
    strip_negative_zero(s)
}

fn strip_negative_zero(s: String) -> String {
    match s.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => s,
    }
}

fn deg4(rad: f64) -> String {
    strip_negative_zero(format!("{:.4}", rad.to_degrees()))
}

fn num4(v: f64) -> String {
    strip_negative_zero(format!("{v:.4}"))
}

/// Trajectory as CSV with columns `t,x_O,y_O,y_T,rho,phase`.
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::with_capacity(48 * (traj.samples.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in &traj.samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            format_sig(s.t, 6),
            format_sig(s.state.x_o, 6),
            format_sig(s.state.y_o, 6),
            format_sig(s.state.y_t, 6),
            format_sig(s.state.separation(), 6),
            s.phase
        );
    }
    out
}

/// Machine-readable plan, `key = value` per line, angles in radians.
pub fn plan_text(plan: &StrategyPlan) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "region = {}", plan.region.short());
    match plan.phase1_heading {
        Phase1Heading::Undefined => {
            let _ = writeln!(out, "phase1_kind = undefined");
        }
        Phase1Heading::Single(psi) => {
            let _ = writeln!(out, "phase1_kind = single");
            let _ = writeln!(out, "phase1_heading = {psi}");
        }
        Phase1Heading::Interval(iv) => {
            let _ = writeln!(out, "phase1_kind = interval");
            let _ = writeln!(out, "phase1_lo = {}", iv.lo());
            let _ = writeln!(out, "phase1_hi = {}", iv.hi());
        }
    }
    if let Some(psi) = plan.chosen_phase1 {
        let _ = writeln!(out, "chosen_phase1 = {psi}");
    }
    match plan.phase2_heading() {
        Some(psi) => {
            let _ = writeln!(out, "phase2_heading = {psi}");
        }
        None => {
            let _ = writeln!(out, "phase2_heading = undefined");
        }
    }
    if let crate::approach::Phase2Plan::Solution(sol) = plan.phase2 {
        let _ = writeln!(out, "contact_bearing = {}", sol.lambda.lambda());
    }
    match plan.t_apr {
        ApproachTime::Infinite => {
            let _ = writeln!(out, "t_apr = inf");
        }
        ApproachTime::Finite(t) => {
            let _ = writeln!(out, "t_apr = {t}");
        }
    }
    let _ = writeln!(out, "t_obs = {}", plan.t_obs);
    let _ = writeln!(out, "started_inside = {}", plan.started_inside);
    let _ = writeln!(out, "rides_path = {}", plan.rides_path);
    out
}

/// Human-readable plan: degrees and times to four decimals.
pub fn plan_report(plan: &StrategyPlan) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "region: {}", plan.region);
    match plan.phase1_heading {
        Phase1Heading::Undefined => {
            let _ = writeln!(out, "psi_O1: undefined");
        }
        Phase1Heading::Single(psi) => {
            let _ = writeln!(out, "psi_O1: {} deg", deg4(psi));
        }
        Phase1Heading::Interval(iv) => {
            let _ = writeln!(
                out,
                "psi_O1: [{}, {}] deg (any heading in the interval)",
                deg4(iv.lo()),
                deg4(iv.hi())
            );
            if let Some(psi) = plan.chosen_phase1 {
                let _ = writeln!(out, "psi_O1 flown: {} deg", deg4(normalize(psi)));
            }
        }
    }
    match plan.phase2_heading() {
        Some(psi) => {
            let _ = writeln!(out, "psi_O2: {} deg", deg4(psi));
        }
        None => {
            let _ = writeln!(out, "psi_O2: undefined");
        }
    }
    match plan.t_apr {
        ApproachTime::Infinite => {
            let _ = writeln!(out, "t_apr: inf");
        }
        ApproachTime::Finite(t) => {
            let _ = writeln!(out, "t_apr: {} TU", num4(t));
        }
    }
    let _ = writeln!(out, "t_obs: {} TU", num4(plan.t_obs));
    if plan.started_inside {
        let _ = writeln!(
            out,
            "note: target starts inside the observation disk; approach phase skipped"
        );
    }
    if plan.rides_path {
        let _ = writeln!(
            out,
            "note: approach ends by riding the target's path at 90 deg until contact"
        );
    }
    out
}

/// One-line-per-field summary of an oracle sweep.
pub fn sweep_report(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "grid: {} x {}", report.grid_n1, report.grid_n2);
    let _ = writeln!(out, "best psi_O1: {} deg", deg4(report.best_psi1));
    let _ = writeln!(out, "best psi_O2: {} deg", deg4(report.best_psi2));
    let _ = writeln!(
        out,
        "best t_obs (sweep): {} TU",
        format_sig(report.best_t_obs, 8)
    );
    let _ = writeln!(
        out,
        "closed-form t_obs: {} TU",
        format_sig(report.closed_form_t_obs, 8)
    );
    let _ = writeln!(
        out,
        "gap: {} TU ({} relative)",
        format_sig(report.gap, 4),
        format_sig(report.relative_gap(), 4)
    );
    out
}

fn table_rows(out: &mut String, rows: &[(&str, f64, WorldState)]) {
    let _ = writeln!(
        out,
        "{:<8}{:<10}{:<10}{:<10}y_T [DU]",
        "t_i", "t [TU]", "x_O [DU]", "y_O [DU]"
    );
    for (label, t, s) in rows {
        let _ = writeln!(
            out,
            "{:<8}{:<10}{:<10}{:<10}{}",
            label,
            format_table(*t),
            format_table(s.x_o),
            format_table(s.y_o),
            format_table(s.y_t)
        );
    }
}

fn case_rows(
    params: &EngagementParams,
    state: &WorldState,
    plan: &StrategyPlan,
    suffix: &str,
) -> Result<Vec<(String, f64, WorldState)>> {
    let mut rows = vec![(format!("t_1{suffix}"), 0.0, *state)];
    if let Some(traj) = simulate_plan(params, state, plan, &SimOptions::default())? {
        if let (Some(t2), Some(tf)) = (traj.t2, traj.tf) {
            rows.push((format!("t_2{suffix}"), t2, traj.state_at(t2)));
            rows.push((format!("t_f{suffix}"), tf, traj.state_at(tf)));
        }
    }
    Ok(rows)
}

fn header(
    out: &mut String,
    scenario: Scenario,
    params: &EngagementParams,
    state: &WorldState,
    region: RegionLabel,
) {
    let _ = writeln!(out, "{}", scenario.title());
    let _ = writeln!(
        out,
        "alpha = {:.2}, R = {:.2}, x0 = ({:.2}, {:.2}, {:.2}): {}",
        params.alpha(),
        params.radius(),
        state.x_o,
        state.y_o,
        state.y_t,
        region
    );
    let _ = writeln!(
        out,
        "decision line: y = {}x",
        num4(decision_line_slope(params))
    );
}

/// Results table for one of the reference scenarios.
pub fn scenario_table(scenario: Scenario) -> Result<String> {
    let config = scenario.config();
    let params = config.params()?;
    let state = config.state()?;
    let rel = to_relative(&state)?;
    let inter = intersect_disk_dl(&params, &rel);
    let mut out = String::new();

    match scenario {
        Scenario::A | Scenario::B => {
            let plan = solve_with_pick(&params, &state, IntervalPick::Mid)?;
            header(&mut out, scenario, &params, &state, plan.region);
            match inter.points.as_slice() {
                [] => {
                    let _ = writeln!(out, "decision line misses the observation disk");
                }
                points => {
                    let shown: Vec<String> = points
                        .iter()
                        .map(|(x, y)| format!("({x:.5}, {y:.5})"))
                        .collect();
                    let _ = writeln!(
                        out,
                        "decision line meets the disk at {}",
                        shown.join(" and ")
                    );
                }
            }
            match (plan.chosen_phase1, plan.phase2_heading(), plan.t_apr) {
                (Some(psi1), Some(psi2), ApproachTime::Finite(t2)) => {
                    let tf = t2 + plan.t_obs;
                    let _ = writeln!(
                        out,
                        "psi_O1 = {} deg on [0, {}), psi_O2 = {} deg on [{}, {}]",
                        deg4(psi1),
                        format_table(t2),
                        deg4(psi2),
                        format_table(t2),
                        format_table(tf)
                    );
                }
                _ => {
                    let _ = writeln!(
                        out,
                        "observation is not possible: psi_O undefined, t_apr = inf"
                    );
                }
            }
            let rows = case_rows(&params, &state, &plan, "")?;
            let rows: Vec<(&str, f64, WorldState)> =
                rows.iter().map(|(l, t, s)| (l.as_str(), *t, *s)).collect();
            table_rows(&mut out, &rows);
            match plan.t_apr {
                ApproachTime::Finite(t) => {
                    let _ = writeln!(
                        out,
                        "t_apr = {} TU, t_obs = {} TU",
                        num4(t),
                        num4(plan.t_obs)
                    );
                }
                ApproachTime::Infinite => {
                    let _ = writeln!(out, "t_apr = inf, t_obs = 0.0000 TU");
                }
            }
        }
        Scenario::C => {
            let plan = solve_with_pick(&params, &state, IntervalPick::Mid)?;
            header(&mut out, scenario, &params, &state, plan.region);
            let _ = writeln!(
                out,
                "decision line misses the observation disk; W lies above it"
            );
            if let Phase1Heading::Interval(iv) = plan.phase1_heading {
                let _ = writeln!(
                    out,
                    "psi_O1 in [{}, {}] deg, psi_O2 = {} deg",
                    deg4(iv.lo()),
                    deg4(iv.hi()),
                    deg4(plan.phase2_heading().unwrap_or(f64::NAN))
                );
            }
            for (case, pick) in [("A", IntervalPick::Hi), ("B", IntervalPick::Lo)] {
                let plan = solve_with_pick(&params, &state, pick)?;
                let psi1 = plan.chosen_phase1.unwrap_or(f64::NAN);
                let _ = writeln!(out, "Case {case}: psi_O1 = {} deg", deg4(psi1));
                let rows = case_rows(&params, &state, &plan, &format!("^{case}"))?;
                let rows: Vec<(&str, f64, WorldState)> =
                    rows.iter().map(|(l, t, s)| (l.as_str(), *t, *s)).collect();
                table_rows(&mut out, &rows);
            }
            let _ = writeln!(
                out,
                "t_obs = {} TU for every heading in the interval",
                num4(plan.t_obs)
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(6.28620123, 6), "6.28620");
        assert_eq!(format_sig(13.7138, 6), "13.7138");
        assert_eq!(format_sig(0.0, 6), "0");
        assert_eq!(format_sig(9.9999996, 6), "10.0000");
        assert_eq!(format_sig(-0.00123456789, 6), "-0.00123457");
        assert_eq!(format_sig(1.5e-17, 6), "1.50000e-17");
        assert_eq!(format_sig(123456.7, 6), "123457");
    }

    #[test]
    fn table_digits() {
        assert_eq!(format_table(0.0), "0.0000");
        assert_eq!(format_table(6.28623), "6.2862");
        assert_eq!(format_table(13.7138), "13.714");
        assert_eq!(format_table(0.49932), "0.4993");
        assert_eq!(format_table(11.7771), "11.777");
        assert_eq!(format_table(-1e-16), "0.0000");
        assert_eq!(format_table(2e-16), "0.0000");
        assert_eq!(format_table(9.99996), "10.000");
    }
}
