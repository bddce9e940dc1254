//! Command-line front end: problem files, command dispatch and SVG output.
//!
//! Exit codes: 0 on success, 1 when an invariant fails on the input (the
//! counterexample goes to stderr), 2 on malformed or unsupported input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod format;
pub mod svg;

use format::InputError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "ladderdet", version, about = "Ladder determinantal rings: h-vectors, arrays and injections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_box(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let r: usize = r.trim().parse().map_err(|_| format!("bad row count in {s:?}"))?;
    let c: usize = c.trim().parse().map_err(|_| format!("bad column count in {s:?}"))?;
    if r == 0 || c == 0 || r * c >= 32 {
        return Err(format!("box {s} must have between 1 and 31 cells"));
    }
    Ok((r, c))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// h-vector, d, Hilbert series and log-concavity.
    Hvec { file: PathBuf },
    /// List the arrays of length K on one level.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// Value of the Hilbert function at one degree.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    /// Cutting points and image of one array pair.
    Inject {
        file: PathBuf,
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// Check the injection on a problem file or a suite of box regions.
    Verify {
        #[arg(required_unless_present = "suite", conflicts_with = "suite")]
        file: Option<PathBuf>,
        #[arg(long, value_parser = parse_box)]
        suite: Option<(usize, usize)>,
        #[arg(long)]
        kmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra seeded random regions in the same box.
        #[arg(long, default_value_t = 0, requires = "suite")]
        random: usize,
    },
    /// Compare face counts of the complex with the Hilbert function.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_ell: usize,
        #[arg(long, default_value_t = ladderdet::complex_oracle::DEFAULT_CELL_CAP)]
        cap: usize,
        /// Run light and shadow on this face instead.
        #[arg(long)]
        face: Option<PathBuf>,
    },
    /// Draw the region, bounds and optional paths as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        paths: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Hvec { file } => commands::hvec(file, out),
        Command::Enumerate { file, k, level } => commands::enumerate(file, *k, *level, out),
        Command::Hilbert { file, ell } => commands::hilbert(file, *ell, out),
        Command::Inject { file, pair, level } => commands::inject(file, pair, *level, out),
        Command::Verify {
            file,
            suite,
            kmax,
            seed,
            random,
        } => commands::verify(
            &commands::VerifyArgs {
                file: file.clone(),
                suite: *suite,
                kmax: *kmax,
                seed: *seed,
                random: *random,
            },
            out,
        ),
        Command::Oracle {
            file,
            max_ell,
            cap,
            face,
        } => commands::oracle(file, *max_ell, *cap, face.as_deref(), out),
        Command::Render {
            file,
            paths,
            output,
        } => commands::render(file, paths.as_deref(), output, out),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
