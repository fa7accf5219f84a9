//! The `lorflat` command-line tool.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
//! input cannot be read or parsed.

mod commands;
pub mod document;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{check_report, CheckReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lorflat", version, about = "Exact computations on flat metric Lie algebras")]
pub struct Cli {
    /// Structured (JSON) reports instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobi, signature, flatness, modular vector and structure checks.
    Check {
        /// Algebra document, or `-` for standard input.
        path: PathBuf,
    },
    /// Double extension of an admissible tuple.
    Extend {
        path: PathBuf,
        /// Run `check` on the result (report on standard error).
        #[arg(long)]
        verify: bool,
    },
    /// Double-extension data of a nonunimodular Lorentzian flat algebra.
    Factor {
        path: PathBuf,
        /// Re-extend and compare exactly with the input.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Emit a member of the catalog (G2, G3, G3P, G4, G4P).
    Catalog {
        family: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value = "0")]
        eps: String,
    },
    /// Admissible branches on the abelian Euclidean base of dimension 1 or 2.
    Solve {
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Canonical form of a skew operator.
    Canon {
        path: PathBuf,
        /// Use the metric of the document (must be Lorentzian).
        #[arg(long)]
        lorentz: bool,
    },
}

/// Output of a command: text for standard output and standard error, and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> std::result::Result<String, String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map_err(|e| format!("standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(text)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let input = |path: &PathBuf, stdin: &mut dyn Read| read_input(path, stdin);
    let result = match &cli.command {
        Command::Check { path } => input(path, stdin).map(|t| commands::check(&t, cli.json)),
        Command::Extend { path, verify } => input(path, stdin).map(|t| commands::extend(&t, *verify, cli.json)),
        Command::Factor { path, roundtrip } => input(path, stdin).map(|t| commands::factor(&t, *roundtrip)),
        Command::Catalog { family, mu, alpha, beta, lambda, gamma, eps } => {
            Ok(commands::catalog(family, [mu, alpha, beta, lambda, gamma, eps]))
        }
        Command::Solve { dim, mu } => Ok(commands::solve(*dim, mu, cli.json)),
        Command::Canon { path, lorentz } => input(path, stdin).map(|t| commands::canon(&t, *lorentz, cli.json)),
    };
    result.unwrap_or_else(|e| Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_INPUT })
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let out = execute(&cli, stdin);
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stderr.write_all(out.stderr.as_bytes());
    out.code
}
