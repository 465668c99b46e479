//! Deterministic execution helpers.
//!
//! Scans over index ranges run on rayon when the `parallel` feature is
//! enabled and as plain loops otherwise. Reductions must be associative;
//! combined with rayon's order-preserving `reduce` this makes both modes
//! produce identical results, so campaign reports are byte-stable across
//! thread counts.

/// True when this build dispatches scans to rayon.
pub const PARALLEL: bool = cfg!(feature = "parallel");

/// Human-readable mode tag used by benches and reports.
pub fn mode() -> &'static str {
    if PARALLEL {
        "parallel"
    } else {
        "sequential"
    }
}

/// Configure the global worker count. A no-op without the `parallel` feature
/// or when a pool already exists (e.g. a second call).
pub fn configure_workers(workers: Option<usize>) {
    #[cfg(feature = "parallel")]
    if let Some(n) = workers {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
}

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;

    pub fn map_collect<T, F>(len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..len).into_par_iter().map(f).collect()
    }

    pub fn map_reduce<T, F, R>(len: usize, map: F, reduce: R) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        (0..len)
            .into_par_iter()
            .map(map)
            .reduce(|| None, |a, b| super::merge_options(a, b, &reduce))
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    pub fn map_collect<T, F>(len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..len).map(f).collect()
    }

    pub fn map_reduce<T, F, R>(len: usize, map: F, reduce: R) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let mut acc = None;
        for i in 0..len {
            acc = super::merge_options(acc, map(i), &reduce);
        }
        acc
    }
}

fn merge_options<T>(a: Option<T>, b: Option<T>, reduce: impl Fn(T, T) -> T) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(reduce(x, y)),
        (x, None) => x,
        (None, y) => y,
    }
}

pub use imp::{map_collect, map_reduce};
