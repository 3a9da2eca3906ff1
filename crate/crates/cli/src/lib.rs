//! Command-line front end. `run` parses an argument vector, dispatches to the
//! library and returns the exit code together with the JSON payload and the
//! human-readable rendering; printing is left to the binary.

mod args;
mod commands;
mod table;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};
use thiserror::Error;

use braidforge::braid::BraidError;
use braidforge::compiler::CompileError;
use braidforge::invariants::GeometryError;
use braidforge::presentation::PresentationError;
use braidforge::surface::SurfaceError;
use braidforge::tl::TlError;
use braidforge::SCHEMA;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Everything a command produces; the binary decides what reaches which stream.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    /// Machine-readable result, or an `{"error": …}` object on failure.
    pub payload: Value,
    /// Table rendering on success, help text for `--help`.
    pub text: String,
    /// Message for stderr, set on every failure.
    pub diagnostic: Option<String>,
    /// Whether `--json` was requested.
    pub json: bool,
}

impl CommandOutcome {
    /// What belongs on stdout.
    pub fn stdout(&self) -> String {
        if self.json && !self.payload.is_null() {
            let mut s = serde_json::to_string_pretty(&self.payload).unwrap_or_default();
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Malformed or inconsistent input: bad flags, unreadable files, parse failures.
    #[error("{0}")]
    Input(String),
    /// Well-formed input the mathematics rejects.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Domain(_) => "domain",
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::Overflow(_) | PresentationError::Unsupported(_) => CliError::Domain(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<TlError> for CliError {
    fn from(e: TlError) -> Self {
        match e {
            TlError::NotUnitarizable(_) => CliError::Domain(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CompileError> for CliError {
    fn from(e: CompileError) -> Self {
        match e {
            CompileError::DimensionMismatch { .. } | CompileError::NonUnitaryRep | CompileError::ProbeDimension(_) => {
                CliError::Domain(e.to_string())
            }
            CompileError::Tl(t) => t.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Success payload: `body` with the schema tag and command name prepended.
pub(crate) fn envelope(command: &str, body: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    out.insert("command".into(), json!(command));
    if let Value::Object(m) = body {
        out.extend(m);
    }
    Value::Object(out)
}

fn error_payload(e: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "error": { "kind": e.kind(), "exit_code": e.exit_code(), "message": e.to_string() },
    })
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("BRAIDFORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("BRAIDFORGE_THREADS must be a positive integer, got {raw:?}")))?;
    // the global pool can only be set once per process; later calls keep the first size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn failure(e: CliError, json: bool) -> CommandOutcome {
    CommandOutcome {
        exit_code: e.exit_code(),
        payload: error_payload(&e),
        text: String::new(),
        diagnostic: Some(format!("error: {e}")),
        json,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let wants_json = argv.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome {
                    exit_code: EXIT_OK,
                    payload: Value::Null,
                    text: e.render().to_string(),
                    diagnostic: None,
                    json: false,
                },
                _ => {
                    let rendered = e.render().to_string();
                    let mut out = failure(CliError::Input(rendered.trim_end().to_string()), wants_json);
                    out.diagnostic = Some(rendered.trim_end().to_string());
                    out
                }
            };
        }
    };
    if let Err(e) = configure_threads() {
        return failure(e, cli.json);
    }
    match commands::dispatch(&cli.command) {
        Ok((payload, text)) => CommandOutcome {
            exit_code: EXIT_OK,
            payload,
            text,
            diagnostic: None,
            json: cli.json,
        },
        Err(e) => failure(e, cli.json),
    }
}
