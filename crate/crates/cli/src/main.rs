//! `cesaro-lab`: command-line front end for the Cesàro operator laboratory.
//!
//! Subcommands: `apply` transforms a coefficient file through one kernel;
//! `norms`, `spectrum` and `ergodic` produce machine-readable reports with
//! one row per measured quantity and asserted inequality; `all` runs the
//! three reports in sequence. Exit code 0 means every assertion passed,
//! 1 means some assertion failed, 2 means a usage or parse error.

mod commands;
mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use cesaro_core::Exponent;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use commands::Settings;
use report::ConfigEcho;

const DEFAULT_MAX_DEGREE: usize = 8192;
const MAX_DEGREE_ENV: &str = "CESARO_LAB_MAX_DEGREE";
const MIN_DEGREE: usize = 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] cesaro_core::Error),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    /// Generalized Cesàro operator C_t (one result per t)
    Cesaro,
    /// Hardy operator C_0
    C0,
    /// Classical Cesàro average C_1
    C1,
    /// Forward shift S
    Shift,
    /// Backward shift B
    Backshift,
    /// Multiplication by h_t (one result per t)
    Mult,
    /// S_t = S∘C_t (one result per t)
    St,
    /// Volterra operator T_g (requires --g-file)
    Tg,
    /// Volterra operator V_g (requires --g-file)
    Vg,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Cesàro parameters, comma separated, each in [0, 1)
    #[arg(long = "t", value_delimiter = ',', default_value = "0.3,0.5,0.7")]
    t: Vec<f64>,

    /// Hardy exponents, comma separated; "inf" is allowed
    #[arg(long = "p", value_delimiter = ',', value_parser = parse_exponent,
          default_value = "1,2,inf")]
    p: Vec<Exponent>,

    /// Truncation degree N (at least 16; capped by CESARO_LAB_MAX_DEGREE)
    #[arg(long, default_value_t = 512)]
    degree: usize,

    /// Seed for the random test functions recorded in the report
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_exponent(s: &str) -> Result<Exponent, String> {
    Exponent::from_str(s).map_err(|_| format!("expected a number >= 1 or 'inf', got {s:?}"))
}

#[derive(Parser, Debug)]
#[command(
    name = "cesaro-lab",
    version,
    about = "Numerical laboratory for generalized Cesàro operators on truncated Taylor series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply an operator kernel to a coefficient file (one "re im" per line)
    Apply {
        /// Input coefficient file
        #[arg(long)]
        input: PathBuf,
        /// Kernel to apply
        #[arg(long, value_enum)]
        kernel: KernelArg,
        /// Coefficient file for the Volterra symbol g (tg/vg only)
        #[arg(long)]
        g_file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Operator-norm sandwich and refined-vs-coarse bound comparison
    Norms {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Eigenvalues, eigen-residuals, S_t norm-root decay and the certificate
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Power norms and mean-ergodic error decay
    Ergodic {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run norms, spectrum and ergodic as one combined report
    All {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn max_degree_cap() -> Result<usize, CliError> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(raw) => raw.parse().map_err(|_| {
            CliError::Usage(format!("{MAX_DEGREE_ENV} must be an integer, got {raw:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn build_settings(common: &CommonArgs, command: &str) -> Result<(Settings, ConfigEcho), CliError> {
    if common.t.is_empty() {
        return Err(CliError::Usage("--t list must be nonempty".into()));
    }
    if common.p.is_empty() {
        return Err(CliError::Usage("--p list must be nonempty".into()));
    }
    for &t in &common.t {
        if !(0.0..1.0).contains(&t) {
            return Err(CliError::Usage(format!("t = {t} outside [0, 1)")));
        }
    }
    for &p in &common.p {
        p.validate()?;
    }
    if common.degree < MIN_DEGREE {
        return Err(CliError::Usage(format!(
            "--degree must be at least {MIN_DEGREE}, got {}",
            common.degree
        )));
    }
    let degree = common.degree.min(max_degree_cap()?);
    let settings = Settings {
        t_values: common.t.clone(),
        p_values: common.p.clone(),
        degree,
        seed: common.seed,
    };
    let echo = ConfigEcho {
        command: command.into(),
        t_values: common.t.clone(),
        p_values: common.p.clone(),
        degree,
        seed: common.seed,
        format: common.format.name().into(),
        output_path: common.out.as_ref().map(|p| p.display().to_string()),
    };
    Ok((settings, echo))
}

fn emit(common: &CommonArgs, rendered: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => fs::write(path, rendered).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        }),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Apply {
            input,
            kernel,
            g_file,
            common,
        } => {
            let (settings, echo) = build_settings(common, "apply")?;
            let series = input::read_coefficients(input)?;
            let symbol = match g_file {
                Some(path) => Some(input::read_coefficients(path)?),
                None => None,
            };
            let report = commands::cmd_apply(&settings, echo, &series, *kernel, symbol.as_ref())?;
            let rendered = match common.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(common, &rendered)?;
            Ok(true)
        }
        Command::Norms { common } => {
            let (settings, echo) = build_settings(common, "norms")?;
            let report = commands::cmd_norms(&settings, echo)?;
            emit(common, &report.render(common.format))?;
            eprintln!(
                "norms: {} checks, {} failed",
                report.rows.len(),
                report.failed
            );
            Ok(report.all_passed())
        }
        Command::Spectrum { common } => {
            let (settings, echo) = build_settings(common, "spectrum")?;
            let report = commands::cmd_spectrum(&settings, echo)?;
            emit(common, &report.render(common.format))?;
            eprintln!(
                "spectrum: {} checks, {} failed",
                report.rows.len(),
                report.failed
            );
            Ok(report.all_passed())
        }
        Command::Ergodic { common } => {
            let (settings, echo) = build_settings(common, "ergodic")?;
            let report = commands::cmd_ergodic(&settings, echo)?;
            emit(common, &report.render(common.format))?;
            eprintln!(
                "ergodic: {} checks, {} failed",
                report.rows.len(),
                report.failed
            );
            Ok(report.all_passed())
        }
        Command::All { common } => {
            let (settings, echo) = build_settings(common, "all")?;
            let parts = vec![
                commands::cmd_norms(&settings, echo.clone())?,
                commands::cmd_spectrum(&settings, echo.clone())?,
                commands::cmd_ergodic(&settings, echo.clone())?,
            ];
            let report = report::merge(echo, parts);
            emit(common, &report.render(common.format))?;
            eprintln!(
                "all: {} checks, {} failed",
                report.rows.len(),
                report.failed
            );
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
