//! Sweep drivers, verification runs and report rendering behind the
//! `wallcross` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod sweep;
pub mod verify;

pub use commands::execute;
pub use config::{Command, Format, RunConfig};
pub use error::CliError;
pub use output::{CommandOutput, Outcome};
