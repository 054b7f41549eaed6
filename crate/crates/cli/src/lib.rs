//! The `sesh` command line: argument definitions and command dispatch.
//!
//! Every command writes its report to the given writer so the same code runs
//! in tests and in the binary.

pub mod cert;
pub mod commands;
pub mod error;
pub mod input;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "sesh", version, about = "Exact Seshadri constants on the projective plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Seshadri constants of O(L) on the plane.
    P2 {
        #[command(subcommand)]
        command: P2Command,
    },
    /// Re-check a certificate written by `p2 compute`.
    Verify(VerifyArgs),
    /// Upper bounds from self-intersection numbers.
    Bounds(BoundsArgs),
    /// Computations on an abstract intersection lattice.
    Lattice(LatticeArgs),
    /// Compare a point's Seshadri data over Q and over an extension.
    BaseChange(BaseChangeArgs),
}

#[derive(Debug, Subcommand)]
pub enum P2Command {
    /// Run the bracket algorithm and optionally write a certificate.
    Compute(ComputeArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Minimal polynomial in `t` of the coordinate field; Q when omitted.
    #[arg(long)]
    pub minpoly: Option<String>,
    /// Homogeneous coordinates `a,b,c`, each a polynomial in `th`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Threshold gamma, e.g. `3/5`.
    #[arg(long)]
    pub gamma: String,
    /// Degree of the line bundle O(L).
    #[arg(long = "L", default_value_t = 1)]
    pub l: u64,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Certificate output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    /// Also recompute the multiplicity table and the witness.
    #[arg(long)]
    pub deep: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Residue degree of the point.
    #[arg(long)]
    pub alpha: Option<u64>,
    /// Self-intersection L^2.
    #[arg(long)]
    pub selfint: Option<String>,
    /// Top self-intersection L^m, for the multi-point bound.
    #[arg(long)]
    pub top: Option<String>,
    /// Residue degrees of the points, comma separated.
    #[arg(long)]
    pub degs: Option<String>,
    /// Dimension m of the variety.
    #[arg(long)]
    pub dim: Option<u32>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Lattice description (JSON).
    #[arg(long)]
    pub file: PathBuf,
    #[command(subcommand)]
    pub command: LatticeCommand,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    /// Supremum of lambda with L - lambda*E nef against the listed curves.
    Seshadri {
        /// Blown-up point indices, comma separated.
        #[arg(long)]
        point: String,
        /// Class of L in the base lattice, comma separated.
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
        /// Assert the curve list contains every relevant curve.
        #[arg(long)]
        complete: bool,
    },
    /// Euler characteristic by Riemann-Roch.
    Chi {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: String,
    },
    /// Test a blow-up class against the listed curves.
    Nef {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Check sup(n^2 L) = n^2 sup(L) and sup(nL) = n sup(L).
    Scaling {
        #[arg(long)]
        point: String,
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,5")]
        n: Vec<i64>,
    },
    /// Compare a cover's multi-point value with the base value.
    Cover {
        /// Lattice of the cover Y; all of its points form the fiber.
        #[arg(long)]
        y: PathBuf,
        /// Pullback Pic Z -> Pic Y as rows `a,b;c,d`.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
        /// Index of z among the points of this file.
        #[arg(long, default_value_t = 0)]
        point: usize,
    },
}

#[derive(Debug, Args)]
pub struct BaseChangeArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// `self` for the coordinate field of the point, or a minimal polynomial.
    #[arg(long)]
    pub ext: String,
    /// Threshold over the extension; defaults to gamma for a rational point
    /// and to 9L/10 otherwise.
    #[arg(long)]
    pub gamma_k: Option<String>,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::P2 { command: P2Command::Compute(a) } => commands::p2::compute(&a, out),
        Command::Verify(a) => commands::verify::run(&a, out),
        Command::Bounds(a) => commands::bounds::run(&a, out),
        Command::Lattice(a) => commands::lattice::run(&a, out),
        Command::BaseChange(a) => commands::base_change::run(&a, out),
    }
}

/// Configures the global worker pool from `SESH_THREADS`.
pub fn init_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("SESH_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("SESH_THREADS=`{v}` is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))
}
