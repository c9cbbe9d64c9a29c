//! Command-line front end: argument definitions, report documents and
//! command handlers. The binary is a thin wrapper around [`run`].

pub mod args;
pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::Cli;
pub use commands::{EXIT_ANALYSIS, EXIT_MISMATCH, EXIT_OFF_CURVE, EXIT_OK, EXIT_PARSE};
pub use report::ReportDocument;

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = commands::thread_pool(cli.threads).and_then(|pool| {
        let mut ctx = commands::Ctx { pool, json: cli.json, trace: cli.trace, out };
        commands::dispatch(&cli, &mut ctx)
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
