//! Ordered parallel execution of independent work units.

use rayon::prelude::*;

use crate::error::CliError;

/// Maps `f` over `units` on a pool of `jobs` workers. Results come back in
/// input order whatever the scheduling.
pub fn run_sweep<U, R, F>(units: &[U], jobs: usize, f: F) -> Result<Vec<R>, CliError>
where
    U: Sync,
    R: Send,
    F: Fn(&U) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    Ok(pool.install(|| units.par_iter().map(&f).collect()))
}
