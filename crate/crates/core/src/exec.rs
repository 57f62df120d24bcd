//! Ordered map over independent work items, data-parallel when the
//! `parallel` feature is enabled and sequential otherwise.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Parallel on the current rayon pool. Without the `parallel` feature
    /// this runs sequentially.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `items.map(f)` with results in input order regardless of execution mode.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => parallel_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Runs `op` on a dedicated pool of `jobs` threads. `jobs <= 1`, or a build
/// without the `parallel` feature, runs `op` on the calling thread.
pub fn with_jobs<R: Send>(jobs: usize, op: impl FnOnce(Execution) -> R + Send) -> R {
    if jobs <= 1 {
        return op(Execution::Sequential);
    }
    run_pool(jobs, op)
}

#[cfg(feature = "parallel")]
fn run_pool<R: Send>(jobs: usize, op: impl FnOnce(Execution) -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| op(Execution::Parallel)),
        Err(_) => op(Execution::Sequential),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_pool<R: Send>(_jobs: usize, op: impl FnOnce(Execution) -> R + Send) -> R {
    op(Execution::Sequential)
}
