//! Command-line front end for `cmtype-core`: file handling, the report
//! document and its JSON and text renderings.
//!
//! [`run_cli`] is the whole program as a function of its arguments, which is
//! what the binary and the integration tests call.

mod args;
mod commands;
pub mod report;
mod sections;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;

pub use args::{AssumeArg, Cli, Command, Family, OrderArg};
pub use commands::{family_presentation, CliError, EXIT_BUDGET, EXIT_INPUT, EXIT_OK};
pub use report::{ReportBody, ReportDocument, Timings};

#[derive(Debug, Clone, PartialEq)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
    /// The report behind `stdout`, when a command produced one.
    pub report: Option<ReportDocument>,
}

/// Runs one invocation; `args` includes the program name.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let (exit_code, stdout, stderr) = if e.use_stderr() {
                (EXIT_INPUT, String::new(), text)
            } else {
                (EXIT_OK, text, String::new())
            };
            return CliOutput {
                exit_code,
                stdout,
                stderr,
                report: None,
            };
        }
    };
    let start = Instant::now();
    match commands::execute(&cli) {
        Ok(outcome) => {
            let timings = Timings {
                elapsed_us: u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX),
            };
            let doc = ReportDocument::new(outcome.body, timings);
            let stdout = match (cli.json, outcome.plain) {
                (true, _) => doc.to_json(),
                (false, Some(plain)) => plain,
                (false, None) => doc.to_text(),
            };
            let stderr = match &doc.body.error {
                Some(e) if outcome.exit_code == EXIT_BUDGET => format!("error: {e}\n"),
                _ => String::new(),
            };
            CliOutput {
                exit_code: outcome.exit_code,
                stdout,
                stderr,
                report: Some(doc),
            }
        }
        Err(e) => CliOutput {
            exit_code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            report: None,
        },
    }
}
