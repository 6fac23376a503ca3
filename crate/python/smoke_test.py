"""Smoke test for the surveil_py extension module.

Build and install first:
    pip install maturin
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl
"""

import math

import surveil_py as sv


def close(a, b, tol):
    assert abs(a - b) <= tol, (a, b)


def main():
    # Scenario A: observation impossible.
    p = sv.EngagementParams(0.6, 2.0)
    s = sv.WorldState(8.0, 4.0, 0.0)
    assert sv.classify(p, s) == "B1"
    close(sv.decision_line_slope(p), 4.0 / 3.0, 1e-12)
    plan = sv.solve(p, s)
    assert plan.phase2_heading is None and math.isinf(plan.t_apr)
    assert sv.simulate_plan(p, s, plan) is None

    # Scenario B: limited observation.
    p = sv.EngagementParams(0.8, 2.0)
    s = sv.WorldState(5.0, 2.0, 0.0)
    plan = sv.solve(p, s)
    assert plan.region == "B2"
    close(math.degrees(plan.phase1_heading), 126.8699, 1e-4)
    close(plan.t_apr, 6.2862, 1e-3)
    close(plan.t_obs, 7.4276, 1e-3)
    traj = sv.simulate_plan(p, s, plan)
    end = traj.state_at(traj.tf)
    close(end.x_o, 0.4993, 1e-3)
    close(end.y_o, 11.777, 1e-3)
    assert traj.to_csv().startswith("t,x_O,y_O,y_T,rho,phase\n")
    report = sv.sweep(p, s, 720, 144)
    assert 0.0 <= report.relative_gap < 5e-3

    # Scenario C: maximum observation over an interval of headings.
    p = sv.EngagementParams(0.7, 2.0)
    s = sv.WorldState(3.0, 6.0, 0.0)
    lo, hi = sv.solve(p, s).phase1_interval
    close(math.degrees(lo), 112.127, 1e-3)
    close(math.degrees(hi), 174.133, 1e-3)
    close(sv.solve(p, s, "lo").t_apr, 11.378, 1e-3)
    close(sv.max_observation_time(p), 2 * 2.0 / 0.3, 1e-12)
    assert sv.observation_time(p, math.pi) == 0.0
    assert "Case B" in sv.scenario_table("C")

    try:
        sv.EngagementParams(1.5, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("alpha >= 1 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
