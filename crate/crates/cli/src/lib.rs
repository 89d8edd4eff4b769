//! The `fqlin` command line: argument parsing, dispatch and report rendering.
//!
//! [`run`] never touches the process: it returns the exit code and both
//! output streams, so the binary and the tests share one code path.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
//! error, 3 resource cap exceeded.

mod args;
mod commands;
mod render;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    /// Wraps a library error, naming the flag it came from.
    pub fn from_lib(flag: &str, err: fqlin::Error) -> Self {
        use fqlin::Error as E;
        let code = match err {
            E::EnumerationCapExceeded { .. } | E::CapExceeded { .. } | E::FieldTooLarge { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        let message = match &err {
            E::NonPrime(p) => format!("{flag}: p must be prime ({p} is not)"),
            E::ZeroPolynomial => format!("{flag}: f must be nonzero"),
            _ => format!("{flag}: {err}"),
        };
        Self { code, message }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(out) => out,
        Err(err) => Outcome { code: err.code, stdout: String::new(), stderr: format!("error: {}\n", err.message) },
    }
}
