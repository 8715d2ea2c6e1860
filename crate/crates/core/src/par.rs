use rayon::prelude::*;

use crate::error::Result;

/// Maps `f` over `0..len` into a vector, in index order.
///
/// `jobs == 0` uses the global rayon pool, `jobs == 1` runs inline, and any
/// other value runs on a dedicated pool of that many threads. Every slot is
/// written by exactly one call, so the output is the same for every `jobs`.
pub(crate) fn map_indices<T, F>(len: usize, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    let run = || (0..len).into_par_iter().map(&f).collect::<Result<Vec<T>>>();
    match jobs {
        0 => run(),
        1 => (0..len).map(&f).collect(),
        jobs => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to start worker threads")
            .install(run),
    }
}
