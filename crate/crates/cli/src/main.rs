//! `hypcross`: command-line access to approximation numbers, lattice counts,
//! closed-form bounds and the verification harness.
//!
//! Exit status: 0 on success, 1 on computation errors, 2 on argument errors,
//! 3 when a verification finds a violation.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use hypcross_bounds::BoundsError;
use hypcross_core::CoreError;
use hypcross_count::CountError;
use hypcross_enumerate::EnumerateError;
use hypcross_harness::HarnessError;
use hypcross_specfun::SpecfunError;
use thiserror::Error;

use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{name}: {message}")]
    Compute { name: String, message: String },
    #[error("output: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute { .. } | CliError::Io(_) => 1,
        }
    }

    fn compute(err: &(impl std::fmt::Debug + std::fmt::Display)) -> Self {
        CliError::Compute {
            name: variant_name(&format!("{err:?}")),
            message: err.to_string(),
        }
    }
}

/// Innermost variant name of a `Debug` rendering such as `Enumerate(BudgetExceeded { cap: 5 })`.
fn variant_name(debug: &str) -> String {
    let mut rest = debug;
    loop {
        let end = rest.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(rest.len());
        let (ident, tail) = rest.split_at(end);
        match tail.strip_prefix('(') {
            Some(inner) if inner.starts_with(|c: char| c.is_ascii_uppercase()) => rest = inner,
            _ => return ident.to_string(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SpecfunError> for CliError {
    fn from(e: SpecfunError) -> Self {
        CliError::compute(&e)
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::InvalidArgument(m) => CliError::Usage(m),
            EnumerateError::Core(c) => c.into(),
            other => CliError::compute(&other),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::InvalidRadius { .. } | CountError::InvalidArgument(_) => CliError::Usage(e.to_string()),
            CountError::Core(c) => c.into(),
            other => CliError::compute(&other),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Core(c) => c.into(),
            BoundsError::Specfun(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::InvalidArgument(m) => CliError::Usage(m),
            HarnessError::Core(c) => c.into(),
            HarnessError::Enumerate(x) => x.into(),
            HarnessError::Count(x) => x.into(),
            HarnessError::Bounds(x) => x.into(),
            HarnessError::Specfun(x) => x.into(),
            other => CliError::compute(&other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command).and_then(|outcome| {
        let bytes = outcome.record.render(cli.format)?;
        output::write_output(&bytes, cli.out.as_deref())?;
        if cli.format == args::Format::Csv {
            for w in &outcome.record.warnings {
                eprintln!("warning: {w}");
            }
        }
        Ok(outcome.violated)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Usage(_) = e {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
