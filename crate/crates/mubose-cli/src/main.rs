//! Command-line front end for the μ-deformed Bose gas intercepts: momentum
//! scans, asymptote reports, triangle and spectrum dumps, comparison against
//! measured λ⁽²⁾ points and exhaustive (μ, T) grid fitting.
//!
//! Units are MeV throughout with ħ = c = k_B = 1; all numeric output is
//! locale-independent fixed-point with nine fractional digits.
//!
//! Exit codes: 0 success, 2 flag/usage errors, 3 evaluation errors (the
//! offending grid or data point is named on stderr), 4 malformed input data.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

mod commands;
mod data;
mod fmt;
mod grid;

#[derive(Parser)]
#[command(
    name = "mubose",
    version,
    about = "Momentum-correlation intercepts of the mu-deformed Bose gas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan lambda2, lambda3 and r3 over a momentum grid (CSV on stdout)
    Scan(ScanArgs),
    /// Compare the model lambda2 curve against measured points
    Compare(CompareArgs),
    /// Exhaustive (mu, T) grid search against measured lambda2 points
    Fit(FitArgs),
    /// Report truncated and exact large-momentum asymptotes
    Asymptote(AsymptoteArgs),
    /// Print rows of the moment-coefficient triangle
    Triangle(TriangleArgs),
    /// Print structure values and energy levels of the deformed oscillator
    Spectrum(SpectrumArgs),
}

/// Evaluation method shared by scan, compare and fit.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Order-K power series in mu with closed-form thermal averages
    Series,
    /// Direct summation of the occupation distribution (no truncation)
    Direct,
}

#[derive(clap::Args)]
pub struct ModelArgs {
    /// Deformation parameter mu (finite, >= 0)
    #[arg(long)]
    pub mu: f64,
    /// Particle mass in MeV
    #[arg(long, default_value_t = 139.57)]
    pub mass: f64,
    /// Temperature in MeV
    #[arg(long)]
    pub t: f64,
    /// Series truncation order in mu (max 64)
    #[arg(long, default_value_t = mubose::DEFAULT_ORDER)]
    pub order: usize,
    /// Evaluation method
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    /// Relative tolerance of the direct-summation method
    #[arg(long, default_value_t = 1e-12)]
    pub rel_tol: f64,
}

#[derive(clap::Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Momentum grid start in MeV
    #[arg(long, default_value_t = 0.0)]
    pub kmin: f64,
    /// Momentum grid end in MeV
    #[arg(long, default_value_t = 600.0)]
    pub kmax: f64,
    /// Number of grid points (1..=1000000; 1 needs kmin == kmax)
    #[arg(long, default_value_t = 61)]
    pub steps: usize,
    /// Space grid points geometrically instead of linearly (needs kmin > 0)
    #[arg(long)]
    pub log: bool,
}

#[derive(clap::Args)]
pub struct CompareArgs {
    /// Measured-points CSV: columns k_mev,lambda2[,sigma], '#' comments
    #[arg(value_name = "DATA_CSV")]
    pub data: PathBuf,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(clap::Args)]
pub struct FitArgs {
    /// Measured-points CSV: columns k_mev,lambda2[,sigma], '#' comments
    #[arg(value_name = "DATA_CSV")]
    pub data: PathBuf,
    /// Smallest mu on the search grid
    #[arg(long)]
    pub mu_min: f64,
    /// Largest mu on the search grid
    #[arg(long)]
    pub mu_max: f64,
    /// mu grid spacing
    #[arg(long)]
    pub mu_step: f64,
    /// Smallest temperature on the search grid (MeV)
    #[arg(long)]
    pub t_min: f64,
    /// Largest temperature on the search grid (MeV)
    #[arg(long)]
    pub t_max: f64,
    /// Temperature grid spacing (MeV)
    #[arg(long)]
    pub t_step: f64,
    /// Particle mass in MeV
    #[arg(long, default_value_t = 139.57)]
    pub mass: f64,
    /// Series truncation order in mu (max 64)
    #[arg(long, default_value_t = mubose::DEFAULT_ORDER)]
    pub order: usize,
    /// Evaluation method
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    /// Relative tolerance of the direct-summation method
    #[arg(long, default_value_t = 1e-12)]
    pub rel_tol: f64,
}

#[derive(clap::Args)]
pub struct AsymptoteArgs {
    /// Deformation parameter mu (finite, >= 0)
    #[arg(long)]
    pub mu: f64,
    /// Truncation order of the series asymptotes (max 64)
    #[arg(long, default_value_t = mubose::DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(clap::Args)]
pub struct TriangleArgs {
    /// Largest moment power m to print (1..=300)
    #[arg(long)]
    pub max_m: usize,
}

#[derive(clap::Args)]
pub struct SpectrumArgs {
    /// Deformation parameter mu (finite, >= 0)
    #[arg(long)]
    pub mu: f64,
    /// Largest level to print (<= 10000000)
    #[arg(long)]
    pub n_max: u64,
}

/// One CLI failure: message for stderr, exit code, and (for usage errors)
/// which subcommand's usage line to append.
pub struct Failure {
    code: u8,
    message: String,
    usage_for: Option<&'static str>,
}

impl Failure {
    pub fn usage(sub: &'static str, message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into(), usage_for: Some(sub) }
    }

    pub fn eval(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into(), usage_for: None }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into(), usage_for: None }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Scan(a) => commands::scan(a, &mut out)?,
        Command::Compare(a) => commands::compare(a, &mut out)?,
        Command::Fit(a) => commands::fit(a, &mut out)?,
        Command::Asymptote(a) => commands::asymptote(a, &mut out)?,
        Command::Triangle(a) => commands::triangle(a, &mut out)?,
        Command::Spectrum(a) => commands::spectrum(a, &mut out)?,
    }
    out.flush().map_err(|e| Failure::eval(format!("output error: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(sub) = f.usage_for {
                // build() propagates the binary name into the subcommands so
                // the rendered line reads "Usage: mubose <sub> ..."
                let mut root = Cli::command();
                root.build();
                if let Some(c) = root.find_subcommand_mut(sub) {
                    eprintln!("{}", c.render_usage());
                }
            }
            ExitCode::from(f.code)
        }
    }
}
