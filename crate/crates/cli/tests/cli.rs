use std::fs;
use std::path::{Path, PathBuf};

use surveil::config::ScenarioConfig;
use surveil_cli::{run_with, EXIT_GAP, EXIT_INVALID, EXIT_IO, EXIT_OK};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run_env(args: &[&str], horizon: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("surveil").chain(args.iter().copied());
    let code = run_with(argv, horizon, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, None)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn table_b_matches_fixture() {
    let (code, out, _) = run(&["table", "B"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, fs::read_to_string(fixture("table_B.txt")).unwrap());
    assert!(out.contains("t_1     0.0000    5.0000    2.0000    0.0000\n"));
    assert!(out.contains("t_2     6.2862    1.9826    6.0232    6.2862\n"));
    assert!(out.contains("t_f     13.714    0.4993    11.777    13.714\n"));
}

#[test]
fn table_c_matches_fixture() {
    let (code, out, _) = run(&["table", "c"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, fs::read_to_string(fixture("table_C.txt")).unwrap());
    assert!(out.contains("psi_O1 in [112.1274, 174.1328] deg"));
    assert!(out.contains("t_2^A   4.3083    0.0000"));
    assert!(out.contains("t_f^B   24.711    0.0000"));
}

#[test]
fn classify_scenario_a() {
    let (code, out, _) = run(&["classify", path_str(&fixture("scenario_A.cfg"))]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "B1 / NoObservation\ndecision line slope: 1.3333\n");
}

#[test]
fn solve_scenario_c_low_endpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.cfg");
    let text = fs::read_to_string(fixture("scenario_C.cfg"))
        .unwrap()
        .replace("phase3_pick = mid", "phase3_pick = lo");
    fs::write(&cfg, text).unwrap();
    let plan = dir.path().join("plan.txt");
    let (code, out, _) = run(&["solve", path_str(&cfg), "--plan-out", path_str(&plan)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("psi_O1 flown: 112.1274 deg"), "{out}");
    assert!(out.contains("t_apr: 11.3780 TU"), "{out}");
    let machine = fs::read_to_string(plan).unwrap();
    let chosen: f64 = machine
        .lines()
        .find_map(|l| l.strip_prefix("chosen_phase1 = "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((chosen.to_degrees() - 112.127).abs() < 1e-3);
}

#[test]
fn written_config_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for s in ["A", "B", "C"] {
        let path = dir.path().join(format!("{s}.cfg"));
        let (code, _, _) = run(&["init", s, "--out", path_str(&path)]);
        assert_eq!(code, EXIT_OK);
        let parsed = ScenarioConfig::parse(&fs::read_to_string(&path).unwrap()).unwrap();
        let scenario: surveil::scenario::Scenario = s.parse().unwrap();
        assert_eq!(parsed, scenario.config());
        assert_eq!(ScenarioConfig::parse(&parsed.to_text()).unwrap(), parsed);
    }
}

#[test]
fn simulate_writes_csv_with_events() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("traj.csv");
    let (code, _, _) = run(&[
        "simulate",
        path_str(&fixture("scenario_B.cfg")),
        "--out",
        path_str(&csv),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x_O,y_O,y_T,rho,phase"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert!(rows.iter().all(|r| r.len() == 6));
    let contact = rows.iter().find(|r| r[5] == 2.0).unwrap();
    assert!((contact[0] - 6.28619).abs() < 1e-5);
    assert!((contact[4] - 2.0).abs() < 1e-5);
    let last = rows.last().unwrap();
    assert!((last[0] - 13.7138).abs() < 1e-3 && (last[4] - 2.0).abs() < 1e-5);
}

#[test]
fn simulate_without_contact_writes_nothing() {
    let (code, out, _) = run(&["simulate", path_str(&fixture("scenario_A.cfg"))]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("no observation is possible"));
}

#[test]
fn horizon_override_is_validated() {
    let cfg = path_str(&fixture("scenario_A.cfg")).to_string();
    let (code, _, err) = run_env(&["classify", &cfg], Some("soon"));
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("PH_HORIZON"));
    let (code, _, _) = run_env(&["classify", &cfg], Some("-1"));
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = run_env(&["classify", &cfg], Some("25"));
    assert_eq!(code, EXIT_OK);
}

#[test]
fn invalid_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "alpha = 1.2\nradius = 2\nx_O = 1\ny_O = 1\ny_T = 0\n").unwrap();
    let (code, _, err) = run(&["solve", path_str(&cfg)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("bad.cfg"));
    assert_eq!(run(&["table", "D"]).0, EXIT_INVALID);
    assert_eq!(run(&["frobnicate"]).0, EXIT_INVALID);
    assert_eq!(run(&["solve", "/nonexistent/x.cfg"]).0, EXIT_IO);
}

#[test]
fn verify_reports_gap() {
    let cfg = path_str(&fixture("scenario_B.cfg")).to_string();
    let (code, out, _) = run(&["verify", &cfg, "--n1", "720", "--n2", "144"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("verification: PASS\n"));
    let (code, out, _) = run(&["verify", &cfg, "--n1", "36", "--n2", "36"]);
    assert_eq!(code, EXIT_GAP);
    assert!(out.ends_with("verification: FAIL\n"));
    assert_eq!(run(&["verify", &cfg, "--n1", "4"]).0, EXIT_INVALID);
}

#[test]
fn help_documents_units() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("degrees") && out.contains("radians"));
    assert!(out.contains("PH_HORIZON"));
}
