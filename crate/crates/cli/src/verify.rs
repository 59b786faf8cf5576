//! The three-way check on the trivial orbit: the wall-crossing composition,
//! the "n smallest cells" chamber formula and the regularization cascade.

use std::time::Instant;

use serde::Serialize;
use wallcross::crossing::{compose_orbit, Variant};
use wallcross::order::{chamber_partition, rc_regularize, TieBreak};
use wallcross::{farey_walls, Partition, Wall};

use crate::error::CliError;
use crate::sweep::run_sweep;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainFailure {
    /// The wall just crossed, or `None` for the initial chamber.
    pub wall: Option<Wall>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainRow {
    pub n: usize,
    pub chambers: usize,
    pub pass: bool,
    pub failure: Option<ChainFailure>,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub n_max: usize,
    pub tie: TieBreak,
    pub pass: bool,
    pub rows: Vec<ChainRow>,
}

impl ChainSummary {
    pub fn first_failure(&self) -> Option<(usize, &ChainFailure)> {
        self.rows
            .iter()
            .find_map(|r| r.failure.as_ref().map(|f| (r.n, f)))
    }
}

fn chain(n: usize, tie: TieBreak) -> Result<usize, ChainFailure> {
    let fail = |wall, detail: String| ChainFailure { wall, detail };
    let walls = farey_walls(n, Wall::ONE).map_err(|e| fail(None, e.to_string()))?;
    let trace = compose_orbit(&Partition::row(n), Wall::ONE, Variant::Auto)
        .map_err(|e| fail(None, format!("composition failed: {e}")))?;
    let first = walls.walls.first().copied().unwrap_or(Wall::ONE);
    let initial = chamber_partition(n, first, tie).map_err(|e| fail(None, e.to_string()))?;
    if initial != trace.start {
        return Err(fail(
            None,
            format!("first chamber is {initial}, not {}", trace.start),
        ));
    }
    let mut cascade = trace.start.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let w = Some(step.wall);
        cascade = rc_regularize(&cascade, step.wall).map_err(|e| fail(w, e.to_string()))?;
        let chamber =
            chamber_partition(n, walls.successor(i), tie).map_err(|e| fail(w, e.to_string()))?;
        if step.post != chamber || cascade != chamber {
            return Err(fail(
                w,
                format!(
                    "composition {}, chamber {chamber}, cascade {cascade}",
                    step.post
                ),
            ));
        }
    }
    Ok(trace.steps.len() + 1)
}

/// Runs the chain for one `n`.
pub fn check_chain(n: usize, tie: TieBreak) -> ChainRow {
    let started = Instant::now();
    let result = chain(n, tie);
    let millis = started.elapsed().as_millis();
    match result {
        Ok(chambers) => ChainRow {
            n,
            chambers,
            pass: true,
            failure: None,
            millis,
        },
        Err(f) => ChainRow {
            n,
            chambers: 0,
            pass: false,
            failure: Some(f),
            millis,
        },
    }
}

/// Checks every `1 <= n <= n_max`, one work unit per `n`.
pub fn run_verify_chain(
    n_max: usize,
    tie: TieBreak,
    jobs: usize,
) -> Result<ChainSummary, CliError> {
    let ns: Vec<usize> = (1..=n_max).collect();
    let rows = run_sweep(&ns, jobs, |&n| check_chain(n, tie))?;
    Ok(ChainSummary {
        n_max,
        tie,
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}
