//! Run configuration shared by every subcommand.

use std::path::PathBuf;

use serde::Serialize;
use wallcross::conjectures::Semantics;
use wallcross::crossing::{is_prime, OrbitMode, Variant};
use wallcross::order::TieBreak;
use wallcross::{Base, Partition, Wall};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Which Mullineux map `mull` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MullVariant {
    #[default]
    Regular,
    Restricted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    Mull {
        partition: Partition,
        base: Base,
        variant: MullVariant,
    },
    Farey {
        order: usize,
        upper: Wall,
    },
    Crystal {
        partition: Partition,
        base: Base,
        residue: Option<u32>,
    },
    Chamber {
        n: usize,
        wall: Wall,
        tie: TieBreak,
    },
    Regularize {
        partition: Partition,
        wall: Wall,
    },
    Orbit {
        partition: Partition,
        upper: Wall,
        mode: OrbitMode,
        variant: Variant,
    },
    OrbitAll {
        n: usize,
        upper: Wall,
        mode: OrbitMode,
        variant: Variant,
    },
    VerifyThm2 {
        n_max: usize,
        tie: TieBreak,
    },
    CheckSign {
        n: Vec<usize>,
        variant: Variant,
        allow_composite: bool,
        rim: bool,
    },
    CheckGoodbox {
        m: usize,
        variant: Variant,
        semantics: Vec<Semantics>,
    },
}

/// A validated run. The serialized form is embedded in every report; the
/// worker count and output path are left out because they never change a
/// result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub format: Format,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: Format::default(),
            jobs: default_jobs(),
            out: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |msg: String| Err(CliError::Usage(msg));
        if self.jobs == 0 {
            return usage("--jobs must be at least 1".into());
        }
        match &self.command {
            Command::Farey { order: 0, .. } => usage("Farey order must be at least 1".into()),
            Command::Crystal {
                base,
                residue: Some(i),
                ..
            } if *i >= base.get() => usage(format!("residue {i} is not below base {}", base.get())),
            Command::VerifyThm2 { n_max: 0, .. } => usage("--n-max must be at least 1".into()),
            Command::CheckSign {
                n, allow_composite, ..
            } => {
                if n.is_empty() {
                    return usage("check-sign needs at least one -n".into());
                }
                match n.iter().find(|&&k| !is_prime(k)) {
                    Some(k) if !allow_composite => usage(format!(
                        "{k} is not prime (pass --allow-composite to run anyway)"
                    )),
                    _ => Ok(()),
                }
            }
            Command::CheckGoodbox { m, semantics, .. } => {
                if *m < 2 {
                    usage("-m must be at least 2".into())
                } else if semantics.is_empty() {
                    usage("at least one semantics is required".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

/// Worker count when neither `--jobs` nor the environment sets one.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses `all` or a comma-separated list of semantics names.
pub fn parse_semantics(s: &str) -> Result<Vec<Semantics>, String> {
    if s.trim() == "all" {
        return Ok(Semantics::ALL.to_vec());
    }
    let mut out: Vec<Semantics> = s
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
