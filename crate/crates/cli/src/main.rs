use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use psbetti::fatpoints::{powers_to_fatpoints, FatpointScheme};
use psbetti::harness::{
    cmd_betti, cmd_fatpoint_dim, cmd_h0, cmd_hilbert, cmd_syzygies, cmd_verify, parse_checks,
    parse_ideal_spec, parse_range, render_report, Format, SweepConfig,
};
use psbetti::ideals::{build_i_phi, build_j_phi, GradedIdeal, PhiParams};
use psbetti::surface::{DivisorClass, LinkedConfiguration, SubtractionMode};
use psbetti::Error;

#[derive(Parser)]
#[command(
    name = "psbetti",
    version,
    about = "Exact Hilbert functions, Betti tables and syzygy checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification sweep and write a report.
    Verify(VerifyArgs),
    /// Print HF(R/I, d) one degree per line.
    Hilbert(IdealArgs),
    /// Print the graded Betti table of R/I.
    Betti(IdealArgs),
    /// Print the twelve extended syzygies and their Hilbert-Burch data as JSON.
    Syzygies {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute h^0 of a divisor class by subtracting negative curves.
    H0 {
        /// L1, L2 or L3.
        #[arg(long)]
        config: String,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        /// JSON integer vector (d_0, d_1, ..., d_m) overriding the configuration divisor.
        #[arg(long)]
        divisor: Option<String>,
        #[arg(long)]
        batched: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of the degree j forms through a fat point scheme.
    FatpointDim {
        /// Scheme JSON, or @path to read it from a file.
        #[arg(long, conflicts_with = "config")]
        scheme: Option<String>,
        /// Use the scheme dual to configuration L1, L2 or L3 at (l, k).
        #[arg(long, requires_all = ["l", "k"])]
        config: Option<String>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        j: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON config file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive range such as 1..3.
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    k: Option<String>,
    /// Comma-separated subset of hilbert,betti,syzygies,fatpoints,surface,conjecture, or all.
    #[arg(long)]
    checks: Option<String>,
    /// Also run the branch-boundary points with l, k <= 5.
    #[arg(long)]
    boundary: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    /// json or csv.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Write 0 for every timing so identical runs give identical reports.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long = "J-phi", num_args = 2, value_names = ["L", "K"], conflicts_with_all = ["i_phi", "ideal"])]
    j_phi: Option<Vec<u32>>,
    #[arg(long = "I-phi", num_args = 2, value_names = ["L", "K"], conflicts_with = "ideal")]
    i_phi: Option<Vec<u32>>,
    /// Ideal JSON, or @path to read it from a file.
    #[arg(long)]
    ideal: Option<String>,
    /// Number of variables for --J-phi and --I-phi.
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    dmax: Option<u32>,
}

/// Errors caused by the invocation rather than by a check.
struct Usage(anyhow::Error);

fn usage(e: impl Into<anyhow::Error>) -> Usage {
    Usage(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(Usage(e))) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Usage(Usage),
    Internal(anyhow::Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_)
            | Error::Malformed(_)
            | Error::UnknownConfig(_)
            | Error::Json(_)
            | Error::NvarsMismatch { .. }
            | Error::NotHomogeneous { .. }
            | Error::Inhomogeneous
            | Error::NotArtinian { .. } => Failure::Usage(usage(e)),
            other => Failure::Internal(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Verify(args) => verify(args),
        Command::Hilbert(args) => {
            let ideal = ideal_from(&args)?;
            print!("{}", cmd_hilbert(&ideal, args.dmax)?);
            Ok(0)
        }
        Command::Betti(args) => {
            let ideal = ideal_from(&args)?;
            print!("{}", cmd_betti(&ideal, args.dmax)?);
            Ok(0)
        }
        Command::Syzygies { l, k, output } => {
            let export = cmd_syzygies(l, k)?;
            let text = serde_json::to_string_pretty(&export).context("serializing syzygies")?;
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::H0 {
            config,
            l,
            k,
            divisor,
            batched,
            json,
        } => {
            let config: LinkedConfiguration = config.parse()?;
            let divisor = divisor.map(|d| DivisorClass::from_json(&d)).transpose()?;
            let lk = match (l, k) {
                (Some(l), Some(k)) => Some((l, k)),
                (None, None) => None,
                _ => return Err(usage(anyhow::anyhow!("--l and --k go together")).into()),
            };
            let mode = if batched {
                SubtractionMode::Batched
            } else {
                SubtractionMode::Single
            };
            let r = cmd_h0(config, divisor, lk, mode)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).context("serializing result")?
                );
            } else {
                println!("h0={} effective={} H={} N={}", r.h0, r.effective, r.h, r.n);
            }
            Ok(0)
        }
        Command::FatpointDim {
            scheme,
            config,
            l,
            k,
            j,
        } => {
            let scheme = match (scheme, config) {
                (Some(s), None) => FatpointScheme::from_json(&read_arg(&s)?)?,
                (None, Some(c)) => {
                    let c: LinkedConfiguration = c.parse()?;
                    let p =
                        PhiParams::n3(l.expect("required by clap"), k.expect("required by clap"))?;
                    powers_to_fatpoints(&c.powers_config(&p)?, j)
                }
                _ => {
                    return Err(
                        usage(anyhow::anyhow!("give exactly one of --scheme or --config")).into(),
                    )
                }
            };
            println!("{}", cmd_fatpoint_dim(&scheme, j));
            Ok(0)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(usage)?;
            SweepConfig::from_json(&text)?
        }
        None => SweepConfig::default(),
    };
    if let Some(n) = args.n {
        cfg.n = n;
    }
    if let Some(l) = &args.l {
        cfg.l_range = parse_range(l)?;
    }
    if let Some(k) = &args.k {
        cfg.k_range = parse_range(k)?;
    }
    if let Some(c) = &args.checks {
        cfg.checks = parse_checks(c)?;
    }
    if args.boundary {
        cfg.boundary = true;
    }
    if let Some(o) = args.output {
        cfg.output = Some(o);
    }
    if let Some(f) = &args.format {
        cfg.format = f.parse::<Format>()?;
    }
    if let Some(j) = args.jobs {
        cfg.parallelism = Some(j);
    }
    if args.no_timings {
        cfg.timings = false;
    }

    let report = cmd_verify(&cfg)?;
    emit(&render_report(&report)?, cfg.output.as_deref())?;
    for (l, k, r) in report.failures() {
        eprintln!(
            "FAIL l={l} k={k} {}: got {} expected {}",
            r.check, r.value, r.expected
        );
    }
    eprintln!(
        "{} points, {}",
        report.points.len(),
        if report.passed {
            "all asserted checks passed"
        } else {
            "failures found"
        }
    );
    Ok(report.exit_code() as u8)
}

fn ideal_from(args: &IdealArgs) -> Result<GradedIdeal, Failure> {
    let params = |v: &[u32]| PhiParams::new(args.n, v[0], v[1]);
    if let Some(v) = &args.j_phi {
        return Ok(build_j_phi(&params(v)?));
    }
    if let Some(v) = &args.i_phi {
        return Ok(build_i_phi(&params(v)?));
    }
    match &args.ideal {
        Some(s) => Ok(parse_ideal_spec(&read_arg(s)?)?),
        None => Err(usage(anyhow::anyhow!("give one of --J-phi, --I-phi or --ideal")).into()),
    }
}

/// The argument itself, or the contents of the file after a leading `@`.
fn read_arg(s: &str) -> Result<String, Failure> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)
            .with_context(|| format!("reading {path}"))
            .map_err(usage)?),
        None => Ok(s.to_string()),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}
