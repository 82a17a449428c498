//! Runtime switch between the sequential and the rayon data-parallel paths.
//!
//! The `parallel` feature controls whether rayon is compiled in at all;
//! `ExecMode` selects the path per call so the two implementations can be
//! compared in benchmarks within a single build.

/// Execution strategy for the data-parallel inner loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    /// Plain single-threaded loops.
    Sequential,
    /// rayon parallel iterators. Falls back to sequential when the crate
    /// is built without the `parallel` feature.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Caps the global worker pool at `k` threads. No-op without the
/// `parallel` feature, or if a pool already exists.
pub fn init_threads(k: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = k;
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

/// Maps `f` over index range `0..len`, preserving order.
pub fn map_indices<U, F>(mode: ExecMode, len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..len).map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).map(f).collect()
            }
        }
    }
}
