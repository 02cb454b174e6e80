//! Execution-mode plumbing: the long-running kernels (weight censuses,
//! classification, seed searches) run either sequentially or data-parallel
//! over rayon, chosen per call. The `parallel` feature gates the rayon
//! dependency; without it `ExecMode::default()` is sequential and the
//! parallel arm is unreachable.

/// How a bulk kernel splits its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Splits `0..total` into ranges of at most `chunk` items, maps each range
/// with `map(start, len)`, and folds the partial results with `reduce`.
/// `reduce` must be associative; chunk boundaries are otherwise invisible.
pub fn map_reduce_ranges<T, M, R>(mode: ExecMode, total: u64, chunk: u64, map: &M, reduce: &R) -> T
where
    T: Send,
    M: Fn(u64, u64) -> T + Sync,
    R: Fn(T, T) -> T + Sync,
{
    assert!(total > 0 && chunk > 0);
    let starts: Vec<u64> = (0..total).step_by(chunk.max(1) as usize).collect();
    let map_range = |&start: &u64| map(start, chunk.min(total - start));
    match mode {
        ExecMode::Sequential => starts
            .iter()
            .map(map_range)
            .reduce(reduce)
            .expect("total > 0 gives at least one range"),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            starts
                .par_iter()
                .map(map_range)
                .reduce_with(reduce)
                .expect("total > 0 gives at least one range")
        }
    }
}

/// Maps `items` and collects the results in input order.
pub fn map_collect<I, T, M>(mode: ExecMode, items: &[I], map: &M) -> Vec<T>
where
    I: Sync,
    T: Send,
    M: Fn(&I) -> T + Sync,
{
    match mode {
        ExecMode::Sequential => items.iter().map(map).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(map).collect()
        }
    }
}
