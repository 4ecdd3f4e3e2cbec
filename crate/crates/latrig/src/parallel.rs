//! Multi-threaded trial search.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use latrig_core::girth_builder::{run_trial, SearchReducer};
use latrig_core::{AnalyzeOptions, BuildConfig, BuildError, SearchOutcome};

/// Logical cores, or 1 if unknown.
pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Same outcome as [`latrig_core::search`], with trials spread over
/// `workers` threads.
pub fn search_parallel(
    config: &BuildConfig,
    options: &AnalyzeOptions,
    workers: usize,
) -> Result<SearchOutcome, BuildError> {
    config.validate()?;
    let workers = workers.clamp(1, config.trials.max(1));
    let next = AtomicUsize::new(0);
    let reducers = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = SearchReducer::new();
                    loop {
                        let trial = next.fetch_add(1, Ordering::Relaxed);
                        if trial >= config.trials {
                            break;
                        }
                        local.push(run_trial(config, trial, options)?);
                    }
                    Ok::<_, BuildError>(local)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut total = SearchReducer::new();
    for r in reducers {
        total.merge(r);
    }
    Ok(total.finish())
}
