//! `bohr`: tables of the semi-classical hydrogen model.
//!
//! Exit codes: 0 success, 1 verification or convergence failure, 2 usage
//! error (bad flags or values outside an operation's domain).

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use bohr_core::{ConstantsSet, Provenance};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::render::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Semi-classical hydrogen atom calculator")]
struct Cli {
    #[command(flatten)]
    global: GlobalOptions,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstantsChoice {
    Paper,
    Full,
}

#[derive(Debug, Args)]
struct GlobalOptions {
    /// Constants set: printed four-figure values or full SI/CODATA values
    #[arg(long, value_enum, default_value = "full", global = true)]
    constants: ConstantsChoice,

    #[arg(long, value_enum, default_value = "table", global = true)]
    format: OutputFormat,

    /// Significant digits in printed values
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(2..=17), global = true)]
    precision: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the active constants set
    Constants,
    /// Properties of the n-th Bohr orbit
    Orbit {
        #[arg(short = 'Z', long = "z", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        z: u32,
        #[arg(short = 'n', long = "n", value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Check 2πL = nh and analytic vs finite-difference dE/df for n = 1..N
    Verify {
        #[arg(short = 'n', long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        /// Relative step of the central difference
        #[arg(long, default_value_t = bohr_core::derivation::DEFAULT_STEP)]
        step: f64,
    },
    /// Emission series ending on --lower
    Spectrum {
        #[arg(short = 'Z', long = "z", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        z: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        lower: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        /// Single transition from this level instead of a series
        #[arg(long, conflicts_with = "count")]
        upper: Option<u32>,
        #[arg(long, value_enum, default_value = "nm")]
        unit: commands::LineUnit,
    },
    /// Classical radiative inspiral from r0 down to r_stop
    Collapse {
        /// Initial radius in meters
        #[arg(long)]
        r0: f64,
        #[arg(short = 'Z', long = "z", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        z: u32,
        /// Stop radius in meters (default: radius where v would reach c)
        #[arg(long)]
        r_stop: Option<f64>,
        /// Relative tolerance against the closed-form time
        #[arg(long, default_value_t = bohr_core::collapse::CollapseConfig::DEFAULT_REL_TOL)]
        tolerance: f64,
        #[arg(long, default_value_t = bohr_core::collapse::CollapseConfig::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Write the trajectory as CSV (t_seconds,r_meters)
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
}

/// Resolved global options handed to each command.
pub struct Options {
    pub constants: ConstantsSet,
    pub format: OutputFormat,
    pub precision: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let provenance = match cli.global.constants {
        ConstantsChoice::Paper => Provenance::Paper,
        ConstantsChoice::Full => Provenance::Full,
    };
    let opts = Options {
        constants: ConstantsSet::for_provenance(provenance),
        format: cli.global.format,
        precision: cli.global.precision as usize,
    };

    let outcome = match cli.command {
        Command::Constants => commands::constants(&opts),
        Command::Orbit { z, n } => commands::orbit(z, n, &opts),
        Command::Verify { n_max, step } => commands::verify(n_max, step, &opts),
        Command::Spectrum {
            z,
            lower,
            count,
            upper,
            unit,
        } => commands::spectrum(z, lower, count, upper, unit, &opts),
        Command::Collapse {
            r0,
            z,
            r_stop,
            tolerance,
            max_steps,
            trajectory,
        } => commands::collapse(
            commands::CollapseArgs {
                r0,
                z,
                r_stop,
                tolerance,
                max_steps,
                trajectory,
            },
            &opts,
        ),
    };

    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
