//! `surveil` command-line front end.
//!
//! Exit codes: 0 on success, 1 on I/O failure, 2 for an invalid config or
//! invalid arguments, 3 when `verify` finds the closed form off the sweep.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use surveil::config::{ConfigError, ScenarioConfig};
use surveil::export::{plan_report, plan_text, scenario_table, sweep_report, trajectory_csv};
use surveil::scenario::Scenario;
use surveil::{
    classify, decision_line_slope, simulate_plan, solve_with_pick, sweep, to_relative, SimOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GAP: i32 = 3;

/// Environment variable that overrides the simulation horizon.
pub const HORIZON_ENV: &str = "PH_HORIZON";

const AFTER_HELP: &str = "\
Units: angles are printed in degrees in human-readable output and stored in
radians in machine-readable files (--plan-out, trajectory CSV). Times are in
TU, lengths in DU.

Config files hold `key = value` lines with keys alpha, radius, x_O, y_O, y_T
and optionally dt, phase3_pick (lo|mid|hi) and horizon. `#` starts a comment.
PH_HORIZON overrides the simulation horizon.

Exit status: 0 ok, 1 I/O error, 2 invalid config or arguments,
3 verification gap exceeded.";

#[derive(Debug, Parser)]
#[command(
    name = "surveil",
    version,
    about = "Plan, simulate and verify optimal observation of a faster target",
    after_help = AFTER_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the region label and decision-line slope.
    Classify { config: PathBuf },
    /// Print the optimal plan (headings in degrees).
    Solve {
        config: PathBuf,
        /// Also write a machine-readable plan (radians) to this file.
        #[arg(long, value_name = "FILE")]
        plan_out: Option<PathBuf>,
    },
    /// Solve, fly the plan and write the trajectory CSV.
    Simulate {
        config: PathBuf,
        /// CSV destination; stdout if omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compare the closed form with a brute-force heading sweep.
    Verify {
        config: PathBuf,
        /// Approach-heading grid size.
        #[arg(long, default_value_t = 3600)]
        n1: usize,
        /// Observation-heading grid size.
        #[arg(long, default_value_t = 720)]
        n2: usize,
        /// Largest accepted relative gap.
        #[arg(long, default_value_t = 5e-3)]
        tolerance: f64,
    },
    /// Print the results table of a built-in scenario.
    Table {
        #[arg(value_parser = parse_scenario)]
        scenario: Scenario,
    },
    /// Write the config of a built-in scenario.
    Init {
        #[arg(value_parser = parse_scenario)]
        scenario: Scenario,
        /// Destination; stdout if omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn parse_scenario(s: &str) -> Result<Scenario, String> {
    s.parse().map_err(|e: surveil::Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Invalid(String),
    Gap,
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<surveil::Error> for Failure {
    fn from(e: surveil::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Io(e.to_string()))
}

fn load(path: &Path, horizon_env: Option<&str>) -> Result<ScenarioConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut config = ScenarioConfig::parse(&text)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    if let Some(raw) = horizon_env {
        let h: f64 = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("{HORIZON_ENV}: not a number: {raw:?}")))?;
        config.horizon = Some(h);
        config.validate()?;
    }
    Ok(config)
}

fn execute(cli: Cli, horizon_env: Option<&str>, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { config } => {
            let c = load(&config, horizon_env)?;
            let params = c.params()?;
            let region = classify(&params, &to_relative(&c.state()?)?);
            write_out(
                out,
                &format!(
                    "{region}\ndecision line slope: {:.4}\n",
                    decision_line_slope(&params)
                ),
            )
        }
        Command::Solve { config, plan_out } => {
            let c = load(&config, horizon_env)?;
            let plan = solve_with_pick(&c.params()?, &c.state()?, c.phase3_pick)?;
            write_out(out, &plan_report(&plan))?;
            if let Some(path) = plan_out {
                fs::write(&path, plan_text(&plan)).map_err(|e| io_err(&path, e))?;
            }
            Ok(())
        }
        Command::Simulate { config, out: dest } => {
            let c = load(&config, horizon_env)?;
            let (params, state) = (c.params()?, c.state()?);
            let plan = solve_with_pick(&params, &state, c.phase3_pick)?;
            let opts = SimOptions {
                dt: c.dt,
                horizon: c.horizon,
                ride_path: false,
            };
            let Some(traj) = simulate_plan(&params, &state, &plan, &opts)? else {
                return write_out(
                    out,
                    &format!(
                        "{}: no observation is possible, nothing to simulate\n",
                        plan.region
                    ),
                );
            };
            let csv = trajectory_csv(&traj);
            match dest {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| io_err(&path, e))?;
                    write_out(
                        out,
                        &format!(
                            "wrote {} samples to {}\n",
                            traj.samples.len(),
                            path.display()
                        ),
                    )
                }
                None => write_out(out, &csv),
            }
        }
        Command::Verify {
            config,
            n1,
            n2,
            tolerance,
        } => {
            let c = load(&config, horizon_env)?;
            if !(tolerance.is_finite() && tolerance >= 0.0) {
                return Err(Failure::Invalid(format!("invalid tolerance {tolerance}")));
            }
            let report = sweep(&c.params()?, &c.state()?, n1, n2)?;
            write_out(out, &sweep_report(&report))?;
            let sound = report.best_t_obs <= report.closed_form_t_obs + 1e-6;
            let tight = report.relative_gap() <= tolerance;
            if sound && tight {
                write_out(out, "verification: PASS\n")
            } else {
                write_out(out, "verification: FAIL\n")?;
                Err(Failure::Gap)
            }
        }
        Command::Table { scenario } => write_out(out, &scenario_table(scenario)?),
        Command::Init {
            scenario,
            out: dest,
        } => {
            let text = format!("# {}\n{}", scenario.title(), scenario.config().to_text());
            match dest {
                Some(path) => fs::write(&path, text).map_err(|e| io_err(&path, e)),
                None => write_out(out, &text),
            }
        }
    }
}

/// Runs the tool with an explicit `PH_HORIZON` value instead of reading the
/// environment.
pub fn run_with<I, T>(
    args: I,
    horizon_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, horizon_env, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Gap) => EXIT_GAP,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

/// Runs the tool, reading `PH_HORIZON` from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(HORIZON_ENV).ok();
    run_with(args, env.as_deref(), out, err)
}
