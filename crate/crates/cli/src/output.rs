//! Reports and their JSON, CSV and text renderings.

use std::io::Write;

use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{Format, RunConfig};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Counterexample,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Counterexample => 1,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Counterexample
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// What a subcommand produced, ready to render in any format.
#[derive(Debug)]
pub struct CommandOutput {
    pub outcome: Outcome,
    pub result: Box<RawValue>,
    pub text: String,
    pub table: Table,
}

impl CommandOutput {
    pub fn new<T: Serialize>(
        outcome: Outcome,
        result: &T,
        text: String,
        table: Table,
    ) -> Result<Self, CliError> {
        Ok(CommandOutput {
            outcome,
            result: serde_json::value::to_raw_value(result)?,
            text,
            table,
        })
    }

    /// The bare result, without the report header.
    pub fn result_json(&self) -> &str {
        self.result.get()
    }
}

#[derive(Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    outcome: Outcome,
    result: &'a RawValue,
}

pub fn render(cfg: &RunConfig, out: &CommandOutput) -> Result<String, CliError> {
    match cfg.format {
        Format::Json => {
            let report = Report {
                tool: "wallcross",
                version: env!("CARGO_PKG_VERSION"),
                config: cfg,
                outcome: out.outcome,
                result: &out.result,
            };
            let mut s = serde_json::to_string(&report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.table.headers)?;
            for row in &out.table.rows {
                w.write_record(row)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
        }
        Format::Text => {
            let mut s = out.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s)
        }
    }
}

/// Writes to `--out` when given, otherwise to stdout.
pub fn emit(cfg: &RunConfig, rendered: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
