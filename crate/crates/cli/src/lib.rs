//! Command-line front end: argument parsing, dispatch and output formatting.
//!
//! [`run`] never exits the process; `main` prints the rendered result and
//! uses [`CommandResult::exit_code`].

mod args;
mod commands;
mod input;
mod tables;
mod tsv;

use std::ffi::OsString;

use clap::Parser;
use serde_json::{json, Value};

pub use args::{Cli, Command};
pub use tables::paper_tables;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    DomainError,
    UsageError,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// Human-readable notes for standard error.
    pub diagnostics: Vec<String>,
    tsv: bool,
    out: Option<String>,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::UsageError => 2,
        }
    }

    /// Destination requested with `--out`, if any.
    pub fn out_path(&self) -> Option<&str> {
        self.out.as_deref()
    }

    /// The text written to standard output (or the `--out` file).
    pub fn render(&self) -> String {
        match self.status {
            Status::UsageError => String::new(),
            _ if self.tsv => tsv::render(&self.payload),
            _ => {
                let mut s = serde_json::to_string_pretty(&self.payload).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Machine-readable code for an error chain: the library code when the
/// root cause is a library error.
fn error_code(e: &anyhow::Error) -> &'static str {
    if let Some(lib) = e.chain().find_map(|c| c.downcast_ref::<orbicurve::Error>()) {
        return lib.code();
    }
    if e.chain().any(|c| c.is::<std::io::Error>()) {
        return "Io";
    }
    if e.chain().any(|c| c.is::<serde_json::Error>()) {
        return "InvalidJson";
    }
    "InvalidInput"
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::UsageError,
            };
            return CommandResult {
                status,
                payload: Value::Null,
                diagnostics: vec![e.render().to_string()],
                tsv: false,
                out: None,
            };
        }
    };
    let (tsv, out) = (cli.tsv, cli.out.clone());
    match commands::dispatch(cli.command) {
        Ok(payload) => CommandResult { status: Status::Ok, payload, diagnostics: Vec::new(), tsv, out },
        Err(e) => CommandResult {
            status: Status::DomainError,
            payload: json!({
                "status": "error",
                "code": error_code(&e),
                "message": format!("{e:#}"),
            }),
            diagnostics: vec![format!("error: {e:#}")],
            tsv,
            out,
        },
    }
}
