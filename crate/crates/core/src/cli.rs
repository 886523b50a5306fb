//! Command-line front end: argument parsing, pipeline orchestration and
//! report output.
//!
//! Exit codes: 0 on success, 1 when a computed result fails validation, 2 on
//! input errors (unreadable or invalid fan, missing or malformed arguments).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::chowring::{betti_bb, chow_structure_constants, gottsche_poincare, EquivariantModel};
use crate::fixedloci::FixedPointSet;
use crate::hilb3p2;
use crate::report::{self, Detail, Report};
use crate::toricfan::Fan;

pub const SEED_VAR: &str = "EQUICHOW_SEED";
pub const DEFAULT_SEED: u64 = 0;
/// Random module elements checked by `verify-paper-example`.
pub const VERIFY_SAMPLES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Torus fixed points with their tangent characters.
    FixedPoints,
    /// Relevant codimension-one subtori and the fixed locus they cut on the surface.
    Subtori,
    /// Connected components of the fixed loci of the relevant subtori.
    Components,
    /// Components with their module generators and congruence relations.
    Relations,
    /// Basis of each graded piece of the equivariant Chow ring.
    EquivariantBasis,
    /// Betti numbers from the cell decomposition, checked against the generating function.
    Betti,
    /// Ordinary Chow ring: dimensions, basis lifts and structure constants.
    Chow,
    /// Checks the worked example Hilb^3(P^2): relevance array and relation families.
    VerifyPaperExample,
}

#[derive(Debug, Parser)]
#[command(
    name = "equichow",
    version,
    about = "Equivariant Chow rings of Hilbert schemes of points on toric surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Fan description: JSON object {"rays": [[x, y], ...]} in counterclockwise order.
    #[arg(long, global = true)]
    pub fan: Option<PathBuf>,
    /// Number of points.
    #[arg(long, global = true)]
    pub d: Option<u32>,
    /// Highest degree computed (default 2d).
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Worker threads for the parallel stages.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub fan: Option<PathBuf>,
    pub d: Option<u32>,
    pub cap: Option<u32>,
    pub format: Format,
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            fan: None,
            d: None,
            cap: None,
            format: Format::Json,
            jobs: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Validation(_) => 1,
        }
    }
}

/// Result of one run: the report (also on validation failure, when one was
/// produced), its rendering, and the error if any.
#[derive(Debug)]
pub struct RunOutput {
    pub report: Option<Report>,
    pub rendered: String,
    pub error: Option<CliError>,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, CliError::exit_code)
    }
}

fn input(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

fn load(config: &RunConfig) -> Result<(Fan, u32), CliError> {
    let path = config
        .fan
        .as_ref()
        .ok_or_else(|| input("--fan PATH is required for this command"))?;
    let fan = Fan::from_path(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let d = config
        .d
        .ok_or_else(|| input("--d N is required for this command"))?;
    Ok((fan, d))
}

fn model(set: FixedPointSet) -> Result<EquivariantModel, CliError> {
    EquivariantModel::from_set(set).map_err(|e| CliError::Validation(e.to_string()))
}

fn build(config: &RunConfig) -> (Option<Report>, Option<CliError>) {
    if config.command == Command::VerifyPaperExample {
        let fan = Fan::projective_plane();
        let m = match model(FixedPointSet::new(&fan, 3)) {
            Ok(m) => m,
            Err(e) => return (None, Some(e)),
        };
        let v = hilb3p2::verify(&m, config.cap.unwrap_or(6), config.seed, VERIFY_SAMPLES);
        let mut r = Report::new(&fan, 3);
        r.verification = Some(report::verification_section(&v, config.seed));
        let error = (!v.passed()).then(|| CliError::Validation(verification_failures(&v)));
        return (Some(r), error);
    }
    let (fan, d) = match load(config) {
        Ok(x) => x,
        Err(e) => return (None, Some(e)),
    };
    let cap = config.cap.unwrap_or(2 * d);
    let set = FixedPointSet::new(&fan, d);
    let mut r = Report::new(&fan, d);
    let mut error = None;
    match config.command {
        Command::FixedPoints => r.fixed_points = Some(report::fixed_points_section(&set)),
        Command::Subtori => {
            r.subtori = Some(
                set.relevant_subtori()
                    .into_iter()
                    .map(|w| report::subtorus_shape(&fan, w))
                    .collect(),
            )
        }
        Command::Components | Command::Relations => {
            let detail = if config.command == Command::Components {
                Detail::Components
            } else {
                Detail::Relations
            };
            match model(set) {
                Ok(m) => r.subtori = Some(report::subtori_section(&m, detail)),
                Err(e) => return (None, Some(e)),
            }
        }
        Command::EquivariantBasis => match model(set) {
            Ok(m) => r.equivariant_basis = Some(report::graded_basis_section(&m, cap)),
            Err(e) => return (None, Some(e)),
        },
        Command::Betti => {
            let b = betti_bb(&set);
            let b2 = fan.rays().len() as u64 - 2;
            let series = gottsche_poincare(1, b2, 1, d);
            let expected: Vec<usize> = series[d as usize].iter().map(|&x| x as usize).collect();
            if b != expected {
                error = Some(CliError::Validation(format!(
                    "cell decomposition gives {b:?}, generating function gives {expected:?}"
                )));
            }
            r.betti = Some(b);
        }
        Command::Chow => {
            let m = match model(set) {
                Ok(m) => m,
                Err(e) => return (None, Some(e)),
            };
            match chow_structure_constants(&m, cap) {
                Ok(ring) => {
                    let b = betti_bb(m.fixed_points());
                    let expected: Vec<usize> = (0..=cap as usize)
                        .map(|k| b.get(k).copied().unwrap_or(0))
                        .collect();
                    if ring.betti != expected {
                        error = Some(CliError::Validation(format!(
                            "dim A^k = {:?} but the cell decomposition gives {expected:?}",
                            ring.betti
                        )));
                    }
                    r.chow = Some(report::chow_section(m.fixed_points(), &ring));
                }
                Err(e) => return (None, Some(CliError::Validation(e.to_string()))),
            }
        }
        Command::VerifyPaperExample => unreachable!("handled above"),
    }
    (Some(r), error)
}

fn verification_failures(v: &hilb3p2::Verification) -> String {
    let mut parts = Vec::new();
    for a in v.array.iter().filter(|a| !a.passed()) {
        parts.push(format!(
            "relevance at {}: expected {:?}, computed {:?}",
            a.point, a.expected, a.computed
        ));
    }
    for f in v.families.iter().filter(|f| !f.failures.is_empty()) {
        parts.push(format!(
            "relation {} ({}) fails {} times",
            f.number,
            f.text,
            f.failures.len()
        ));
    }
    for d in v.degrees.iter().filter(|d| !d.passed()) {
        parts.push(format!(
            "degree {}: expected {}, module {}, relation system {}",
            d.degree, d.expected_dim, d.module_dim, d.relation_dim
        ));
    }
    if v.sample_failures > 0 {
        parts.push(format!(
            "{} of {} random samples fail",
            v.sample_failures, v.samples
        ));
    }
    format!("{}; labels: {}", parts.join("; "), v.label_map)
}

/// Runs one command with the configured thread count.
pub fn run(config: &RunConfig) -> RunOutput {
    let (report, error) = match config.jobs {
        Some(0) => (None, Some(input("--jobs must be at least 1"))),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| build(config)),
            Err(e) => (
                None,
                Some(input(format!("cannot start {n} worker threads: {e}"))),
            ),
        },
        None => build(config),
    };
    let rendered = match (&report, config.format) {
        (Some(r), Format::Json) => r.to_json(),
        (Some(r), Format::Text) => report::render_text(r),
        (None, _) => String::new(),
    };
    RunOutput {
        report,
        rendered,
        error,
    }
}

fn seed_from(value: Option<OsString>) -> Result<u64, CliError> {
    match value {
        None => Ok(DEFAULT_SEED),
        Some(v) => v
            .to_str()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| input(format!("{SEED_VAR} must be an unsigned integer, got {v:?}"))),
    }
}

/// Parses arguments and the seed variable, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I, seed_var: Option<OsString>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let seed = match seed_from(seed_var) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("equichow: {e}");
            return e.exit_code();
        }
    };
    let config = RunConfig {
        command: cli.command,
        fan: cli.fan,
        d: cli.d,
        cap: cli.cap,
        format: cli.format,
        jobs: cli.jobs,
        seed,
    };
    let out = run(&config);
    if !out.rendered.is_empty() {
        let _ = writeln!(std::io::stdout().lock(), "{}", out.rendered.trim_end());
    }
    if let Some(e) = &out.error {
        eprintln!("equichow: {e}");
    }
    out.exit_code()
}
