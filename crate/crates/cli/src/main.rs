//! `logharm` command line: solve Bohr-type radii, reproduce the radius
//! tables, evaluate bounds and areas, export disk-image grids, and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 computation or verification failure, 2 usage
//! error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "logharm", version, about = "k-fold symmetric starlike logharmonic mappings: radii, bounds, areas, grids")]
struct Cli {
    /// Solver tolerance (radius bisection and quadrature).
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one radius equation (r1..r6, starlike, starlike-example).
    Radius {
        #[arg(long)]
        which: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        k: u32,
    },
    /// Reproduce a radius table over an (alpha, k) grid.
    Table {
        #[arg(long)]
        which: String,
        /// Comma-separated row labels; defaults to the published grid.
        #[arg(long)]
        alphas: Option<String>,
        /// Comma-separated fold counts; defaults to 1,2,3,4,7,10.
        #[arg(long)]
        ks: Option<String>,
    },
    /// Evaluate one bound pair (growth, distortion, phi/omega, distance).
    Bounds {
        #[arg(long)]
        q: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        k: u32,
        /// Radius in (0,1); not used by the distance bounds.
        #[arg(long)]
        r: Option<f64>,
    },
    /// Area bounds 2*pi*L1 <= Ar <= 2*pi*L2, optionally with the direct
    /// Jacobian area of the extremal map.
    Area {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: f64,
        /// Also integrate the Jacobian of the extremal map directly.
        #[arg(long)]
        direct: bool,
        #[arg(long, default_value_t = 96)]
        nrho: usize,
        #[arg(long, default_value_t = 128)]
        ntheta: usize,
    },
    /// Export a polar evaluation grid (rho,theta,x,y,u,v) for plotting
    /// disk images.
    Grid {
        /// Map kind: koebe, f3, f4, f5, identity.
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 24)]
        nr: usize,
        #[arg(long, default_value_t = 96)]
        ntheta: usize,
        #[arg(long, default_value_t = 0.95)]
        rmax: f64,
    },
    /// Logarithmic coefficient bounds and the extremal coefficients.
    Coeffs {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 16)]
        n: usize,
    },
    /// Pre-Schwarzian and Schwarzian derivatives at a point.
    Schwarzian {
        /// Map kind: koebe, f3, f4, f5, identity.
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        z_re: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        z_im: f64,
    },
    /// Run a verification suite and report pass/fail per property.
    Verify {
        /// growth, distortion, coeffs, bohr, area, schwarzian, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Separates "you called this wrong" (exit 2) from "the computation failed"
/// (exit 1).
pub enum CliError {
    Usage(String),
    Run(String),
}

impl From<logharm::Error> for CliError {
    fn from(e: logharm::Error) -> Self {
        match e {
            logharm::Error::Domain(_) | logharm::Error::Precondition(_) => CliError::Usage(e.to_string()),
            other => CliError::Run(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink = match output::Sink::new(cli.out.as_deref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Radius { ref which, alpha, k } => {
            commands::radius(&mut sink, cli.format, which, alpha, k, cli.tol)
        }
        Command::Table { ref which, ref alphas, ref ks } => {
            commands::table(&mut sink, cli.format, which, alphas.as_deref(), ks.as_deref(), cli.tol)
        }
        Command::Bounds { ref q, alpha, k, r } => {
            commands::bounds(&mut sink, cli.format, q, alpha, k, r)
        }
        Command::Area { alpha, k, r, direct, nrho, ntheta } => {
            commands::area(&mut sink, cli.format, alpha, k, r, direct, nrho, ntheta, cli.tol)
        }
        Command::Grid { ref map, alpha, k, nr, ntheta, rmax } => {
            commands::grid(&mut sink, cli.format, map, alpha, k, nr, ntheta, rmax)
        }
        Command::Coeffs { alpha, k, n } => commands::coeffs(&mut sink, cli.format, alpha, k, n),
        Command::Schwarzian { ref map, alpha, k, z_re, z_im } => {
            commands::schwarzian(&mut sink, cli.format, map, alpha, k, z_re, z_im)
        }
        Command::Verify { ref suite, samples, seed } => {
            commands::verify(&mut sink, cli.format, suite, samples, seed)
        }
    };
    match result.and_then(|code| sink.finish().map(|_| code).map_err(CliError::Run)) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
