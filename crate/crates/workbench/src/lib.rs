//! Batch verification workbench: argument parsing, command dispatch and
//! JSON reporting on top of `workbench-core`.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use workbench_core::quiver::ArmParams;
use workbench_core::{Error, Field};

pub mod commands;
pub mod config;
pub mod report;

pub use config::{GammaJson, GammaSource, RunConfig};
pub use report::{Report, Status, Timings};

/// Arm lengths exercised by the acceptance suite.
pub const SUITE: [[usize; 3]; 6] = [[2, 2, 2], [3, 2, 2], [2, 3, 2], [2, 2, 3], [3, 3, 3], [4, 3, 2]];

pub fn suite() -> Vec<ArmParams> {
    SUITE.iter().map(|&[a, b, c]| ArmParams::new(a, b, c).expect("suite arms are valid")).collect()
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

#[derive(Parser, Debug)]
#[command(name = "workbench", version, about = "Exact verification of chart, cover and invariant-ring claims for star-shaped quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smoothness, dimension and oracle checks for every fibre chart at γ
    Charts(CommonArgs),
    /// Smoothness and dimension of every total-space chart
    Smooth(CommonArgs),
    /// Brute-force cover check over all arrow supports
    Cover(CommonArgs),
    /// Emptiness of representation spaces off Δ, non-emptiness on Δ
    Fibre(CommonArgs),
    /// The map π on a point and its compatibility with Δ
    Pi(CommonArgs),
    /// The determinantal minors and their images under φ
    Minors(CommonArgs),
    /// The kernel of φ by elimination
    Kernel(CommonArgs),
    /// Kernel of φ against the minors ideal, plus the fibre over the origin
    Conjecture(CommonArgs),
    /// Reduced Gröbner basis and dimension of an ideal file
    Gb(CommonArgs),
    /// Seeded randomized property suites
    Props(CommonArgs),
}

fn parse_positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number of seconds, got `{s}`")),
    }
}

fn parse_arms(s: &str) -> Result<ArmParams, String> {
    s.parse::<ArmParams>().map_err(|e| e.to_string())
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Arm lengths a,b,c (each at least 2)
    #[arg(long, default_value = "2,2,2", value_parser = parse_arms)]
    p: ArmParams,
    /// zero | file:PATH | random:SEED
    #[arg(long, default_value = "zero")]
    gamma: GammaSource,
    /// q for exact rationals, fp:Q for the prime field of order Q
    #[arg(long, value_parser = config::parse_field)]
    field: Option<Field>,
    /// Maximum number of S-pairs per Gröbner computation
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    spair_cap: Option<u64>,
    /// Maximum S-pair degree
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    deg_cap: Option<u32>,
    /// Wall-clock cap in seconds
    #[arg(long, value_parser = parse_positive_f64)]
    time_cap: Option<f64>,
    /// Worker threads
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// Bound on numerators and denominators of random rationals
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    height: u32,
    /// Seed for sampled inputs
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random off-Δ samples for `fibre`
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Ideal file for `gb`
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Comma-separated β₁,β₂,β₃,α₁₁,…,α₃ₚ₃ for `pi`
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

impl CommonArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            p: self.p,
            gamma: self.gamma.clone(),
            field: self.field,
            spair_cap: self.spair_cap,
            deg_cap: self.deg_cap,
            time_cap: self.time_cap,
            jobs: self.jobs as usize,
            json: self.json.clone(),
            height: self.height,
            seed: self.seed,
            samples: self.samples,
            ideal: self.ideal.clone(),
            point: self.point.clone(),
        }
    }
}

/// What a finished invocation produced.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Option<Report>,
    /// Human-readable summary for standard output.
    pub text: String,
}

impl Outcome {
    fn usage(text: String) -> Outcome {
        Outcome { exit_code: 3, report: None, text }
    }
}

fn name_of(c: &Command) -> (&'static str, &CommonArgs) {
    match c {
        Command::Charts(a) => ("charts", a),
        Command::Smooth(a) => ("smooth", a),
        Command::Cover(a) => ("cover", a),
        Command::Fibre(a) => ("fibre", a),
        Command::Pi(a) => ("pi", a),
        Command::Minors(a) => ("minors", a),
        Command::Kernel(a) => ("kernel", a),
        Command::Conjecture(a) => ("conjecture", a),
        Command::Gb(a) => ("gb", a),
        Command::Props(a) => ("props", a),
    }
}

/// Parses `argv` (program name first), runs the command and writes the JSON
/// report when `--json` was given.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            return Outcome { exit_code: code, report: None, text: e.render().to_string() };
        }
    };
    let (name, args) = name_of(&cli.command);
    let cfg = args.config();
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let result = pool.install(|| commands::dispatch(name, &cfg));
    let out = match result {
        Ok(out) => out,
        Err(CliError::Core(e)) if workbench_core::groebner::inconclusive_of(&e).is_some() => commands::CommandOutput::inconclusive(e.to_string()),
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let report = Report {
        command: name.to_string(),
        config: cfg.echo(out.field),
        status: out.status,
        exit_code: out.status.exit_code(),
        summary: out.summary,
        items: out.items,
        timings: Timings { elapsed_ms: start.elapsed().as_millis() },
    };
    let mut text = out.lines.join("\n");
    text.push_str(&format!("\nstatus: {:?} (exit {})\n", report.status, report.exit_code).to_lowercase());
    if let Some(path) = &cfg.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()));
        }
    }
    Outcome { exit_code: report.exit_code, report: Some(report), text }
}
