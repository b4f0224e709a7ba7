//! `subtuple` command-line interface.
//!
//! Standard output carries data, standard error carries diagnostics. Exit
//! codes: 0 success, 1 validation mismatch, 2 invalid input, 3 enumeration
//! budget exceeded.

mod args;
mod commands;
mod error;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::Cli;
pub use error::CliError;

pub const TOOL: &str = "subtuple";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Parses `args` and runs the chosen command. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code.clamp(0, 255) as u8;
        }
    };
    match commands::dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
