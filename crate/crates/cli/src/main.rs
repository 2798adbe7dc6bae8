//! `twobridge`: invariants, certificates and batch scans for 2-bridge knots.

mod commands;
mod report;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, Parser, Subcommand};
use twobridge::numeric::DEFAULT_VERIFY_TOL;
use twobridge::TwoBridgeForm;

use report::{Format, Report, Style};

const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "twobridge", version, about = "Exact invariants and certificates for 2-bridge knots")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Numeric tolerance for `verify`.
    #[arg(long, value_name = "TOL", default_value_t = DEFAULT_VERIFY_TOL, value_parser = parse_tol, global = true)]
    tol: f64,

    /// Worker threads for batch work (default: all cores).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..), global = true)]
    jobs: Option<u16>,

    /// Report `timing_ms` as 0 so JSON output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct FormArgs {
    /// Odd determinant p >= 3.
    p: i64,
    /// Numerator q, coprime to p with 0 < q < p; even q selects the mirror of (p, p - q).
    q: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Word, relator, exponent sequence and sigma.
    Present(FormArgs),
    /// Riley polynomial and holonomy matrix W.
    Riley(FormArgs),
    /// Longitude translation g and the certificate pieces.
    Longitude(FormArgs),
    /// Alexander polynomial, determinant and torus targets.
    Alexander(FormArgs),
    /// Property L certificate; exits 2 if it fails.
    Certify(FormArgs),
    /// Alexander obstruction to an epimorphism from (p, q) onto (p', q').
    Obstruct {
        p: i64,
        q: i64,
        #[arg(value_name = "P'")]
        p_target: i64,
        #[arg(value_name = "Q'")]
        q_target: i64,
    },
    /// Tables over every normal form with p <= pmax.
    Scan {
        #[arg(long, value_name = "N")]
        pmax: u32,
        /// Certify every form; exits 2 if any certificate fails.
        #[arg(long)]
        certify: bool,
        /// Obstruction reports for every ordered pair of forms.
        #[arg(long)]
        obstruct: bool,
    },
    /// Numeric checks of the representation at every root; exits 2 on failure.
    Verify(FormArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Present(_) => "present",
            Command::Riley(_) => "riley",
            Command::Longitude(_) => "longitude",
            Command::Alexander(_) => "alexander",
            Command::Certify(_) => "certify",
            Command::Obstruct { .. } => "obstruct",
            Command::Scan { .. } => "scan",
            Command::Verify(_) => "verify",
        }
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err("tolerance must be a positive finite number".into())
    }
}

enum RunError {
    Usage(String),
    Failed(anyhow::Error),
}

impl From<anyhow::Error> for RunError {
    fn from(e: anyhow::Error) -> Self {
        RunError::Failed(e)
    }
}

fn form(p: i64, q: i64) -> Result<TwoBridgeForm, RunError> {
    TwoBridgeForm::new(p, q).map_err(|e| RunError::Usage(e.to_string()))
}

fn dispatch(cli: &Cli, style: Style) -> Result<Report, RunError> {
    let report = match cli.command {
        Command::Present(FormArgs { p, q }) => commands::present(p, q, &form(p, q)?),
        Command::Riley(FormArgs { p, q }) => commands::riley(p, q, &form(p, q)?, style)?,
        Command::Longitude(FormArgs { p, q }) => commands::longitude(p, q, &form(p, q)?, style)?,
        Command::Alexander(FormArgs { p, q }) => commands::alexander(p, q, &form(p, q)?),
        Command::Certify(FormArgs { p, q }) => commands::certify(p, q, &form(p, q)?, style)?,
        Command::Obstruct { p, q, p_target, q_target } => {
            let source = form(p, q)?;
            let target = form(p_target, q_target)?;
            commands::obstruct_pair([p, q, p_target, q_target], &source, &target)?
        }
        Command::Scan { pmax, certify, obstruct } => commands::scan_forms(pmax, certify, obstruct, style)?,
        Command::Verify(FormArgs { p, q }) => commands::verify(p, q, &form(p, q)?, cli.tol, style)?,
    };
    Ok(report)
}

/// Prints a one-line reason followed by the help of the offending subcommand.
fn usage_error(reason: &str, subcommand: Option<&str>) -> ExitCode {
    let mut cmd = Cli::command();
    cmd.build();
    let help = match subcommand.and_then(|s| cmd.find_subcommand_mut(s)) {
        Some(sub) => sub.render_help(),
        None => cmd.render_help(),
    };
    eprintln!("error: {reason}\n\n{help}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    env_logger::init();
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let reason = rendered.lines().next().unwrap_or("invalid arguments");
            let reason = reason.strip_prefix("error: ").unwrap_or(reason);
            let cmd = Cli::command();
            let sub =
                args.iter().skip(1).find_map(|a| cmd.find_subcommand(a).map(|c| c.get_name().to_string()));
            return usage_error(reason, sub.as_deref());
        }
    };

    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    }

    let style = Style::detect();
    let start = Instant::now();
    let report = match dispatch(&cli, style) {
        Ok(report) => report,
        Err(RunError::Usage(reason)) => return usage_error(&reason, Some(cli.command.name())),
        Err(RunError::Failed(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_FAILED);
        }
    };
    let timing_ms = if cli.no_timing { 0 } else { start.elapsed().as_millis() as u64 };

    let mut out = BufWriter::new(io::stdout().lock());
    let written = report.write(cli.format, timing_ms, &mut out).and_then(|_| out.flush());
    if let Err(e) = written {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    }
    log::info!("{} finished in {:?}", report.command, start.elapsed());

    if report.failed {
        ExitCode::from(EXIT_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
