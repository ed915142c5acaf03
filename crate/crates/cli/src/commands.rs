use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diskstab_core::geometry::{GeneralizedDisk, DEFAULT_TOL};
use diskstab_core::harness::{random_instance, verify_stabbing, InstanceSpec};
use diskstab_core::lowerbound::{
    min_pierce, verify_construction, LowerBoundConfig, LowerBoundError, DEFAULT_EPS1, DEFAULT_EPS2,
    MAX_PIERCE_FAMILY, MAX_PIERCE_K,
};
use diskstab_core::stabbing::{stab_five_sorted_with, stab_five_with, StabError, StabOptions};

use crate::format::{CertificateFile, InstanceFile};
use crate::{svg, CliError};

#[derive(Debug, Parser)]
#[command(name = "diskstab", version, about = "Stab pairwise intersecting disks with at most five points")]
pub struct Cli {
    /// Containment tolerance.
    #[arg(long, global = true, env = "STAB_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random pairwise intersecting instance.
    Gen(GenArgs),
    /// Compute at most five stabbing points.
    Stab(StabArgs),
    /// Check that a certificate stabs an instance (exit 0 or 1).
    Verify(VerifyArgs),
    /// Write the 13-object lower-bound family and report its checks.
    Lowerbound(LowerboundArgs),
    /// Search exhaustively for at most k piercing points; prints NONE and
    /// exits 1 if there are none.
    Pierce(PierceArgs),
    /// Draw an instance and optional certificate as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Ratio between the largest and smallest raw radius.
    #[arg(long, default_value_t = 2.0)]
    pub radius_spread: f64,
    /// Relative overlap past the point where the last pair touches.
    #[arg(long, default_value_t = 0.05)]
    pub slack: f64,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Expected linear time.
    Lptype,
    /// Sort and binary search.
    Sorted,
}

#[derive(Debug, Args)]
pub struct StabArgs {
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Algorithm::Lptype)]
    pub algorithm: Algorithm,
    /// Check that all pairs intersect before stabbing (quadratic).
    #[arg(long)]
    pub validate: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub certificate: PathBuf,
}

#[derive(Debug, Args)]
pub struct LowerboundArgs {
    #[arg(long, default_value_t = DEFAULT_EPS1)]
    pub eps1: f64,
    #[arg(long, default_value_t = DEFAULT_EPS2)]
    pub eps2: f64,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct PierceArgs {
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    if is_stdio(path) {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    if is_stdio(path) {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(io)
    } else {
        std::fs::write(path, text).map_err(io)
    }
}

fn read_family(path: &Path) -> Result<Vec<GeneralizedDisk>, CliError> {
    InstanceFile::parse(&read_text(path)?)?.to_family()
}

fn read_certificate(path: &Path) -> Result<CertificateFile, CliError> {
    CertificateFile::parse(&read_text(path)?)
}

fn stab_error(e: StabError) -> CliError {
    match e {
        StabError::EmptyFamily
        | StabError::InvalidInstance { .. }
        | StabError::PreconditionViolated(_)
        | StabError::UnsupportedHalfplanes => CliError::Invalid(e.to_string()),
        StabError::HellyTriple
        | StabError::InternalVerificationFailed { .. }
        | StabError::Inconsistent
        | StabError::Solver(_)
        | StabError::Geometry(_) => CliError::Internal(e.to_string()),
    }
}

/// Runs one command and returns its exit code; errors carry their own.
pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let tol = cli.tol;
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(CliError::Invalid(format!("tolerance {tol} must be finite and non-negative")));
    }
    match cli.command {
        Command::Gen(a) => {
            let spec = InstanceSpec { n: a.n, seed: a.seed, radius_spread: a.radius_spread, slack: a.slack };
            let disks = random_instance(&spec).map_err(|e| CliError::Invalid(e.to_string()))?;
            let family: Vec<GeneralizedDisk> = disks.into_iter().map(Into::into).collect();
            write_text(&a.output, &InstanceFile::from_family(&family).to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Stab(a) => {
            let family = read_family(&a.input)?;
            let opts = StabOptions { tol, delta: 0.0, validate: a.validate, verify: true };
            let cert = match a.algorithm {
                Algorithm::Lptype => stab_five_with(&family, a.seed, &opts),
                Algorithm::Sorted => stab_five_sorted_with(&family, a.seed, &opts),
            }
            .map_err(stab_error)?;
            write_text(&a.output, &CertificateFile::from(&cert).to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => {
            let family = read_family(&a.input)?;
            let points = read_certificate(&a.certificate)?.points();
            match verify_stabbing(&family, &points, tol) {
                Ok(()) => {
                    println!("ok: {} points stab all {} objects", points.len(), family.len());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("fail: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Lowerbound(a) => {
            if !(a.eps1 > 0.0 && a.eps1 <= 0.05 && a.eps2 > 0.0 && a.eps2 <= a.eps1 / 5.0) {
                return Err(CliError::Invalid(LowerBoundError::BadEpsilons.to_string()));
            }
            let config = LowerBoundConfig::construct(a.eps1, a.eps2);
            write_text(&a.output, &InstanceFile::from_family(&config.family()).to_json())?;
            let report = verify_construction(&config, tol);
            let failures = report.failures();
            if failures.is_empty() {
                eprintln!("construction checks passed (eps1 = {}, eps2 = {})", a.eps1, a.eps2);
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("construction checks failed (eps1 = {}, eps2 = {}): {}", a.eps1, a.eps2, failures.join(", "));
                Ok(ExitCode::from(1))
            }
        }
        Command::Pierce(a) => {
            let family = read_family(&a.input)?;
            if family.len() > MAX_PIERCE_FAMILY || a.k > MAX_PIERCE_K {
                return Err(CliError::TooLarge(LowerBoundError::TooLarge.to_string()));
            }
            match min_pierce(&family, a.k, tol).map_err(|e| CliError::TooLarge(e.to_string()))? {
                Some(points) => {
                    for p in points {
                        println!("{} {}", p.x, p.y);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NONE");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Render(a) => {
            let family = read_family(&a.input)?;
            let points = match &a.certificate {
                Some(path) => read_certificate(path)?.points(),
                None => Vec::new(),
            };
            write_text(&a.output, &svg::render(&family, &points))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
