//! Sequential/parallel execution switch.
//!
//! The hot loops are written once as "map an index range, keep the results
//! in index order". With the `parallel` feature they run on rayon; without
//! it, or with [`Parallelism::Sequential`], they run on the calling thread.
//! Output order never depends on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// `Parallel` only when the crate was built with rayon.
    pub fn effective(self) -> Parallelism {
        if cfg!(feature = "parallel") {
            self
        } else {
            Parallelism::Sequential
        }
    }
}

/// `(lo..hi).map(f).collect()` in index order.
pub fn map_range<T, F>(par: Parallelism, lo: u64, hi: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match par.effective() {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => (lo..hi).into_par_iter().map(f).collect(),
        _ => (lo..hi).map(f).collect(),
    }
}

/// Maps a slice in order.
pub fn map_slice<S, T, F>(par: Parallelism, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    match par.effective() {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Runs `f` inside a pool of `workers` threads (or the global pool when
/// `workers` is `None`). Without the `parallel` feature this just calls `f`.
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(k) = workers {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build().expect("thread pool");
        return pool.install(f);
    }
    let _ = workers;
    f()
}

/// Number of worker threads that a parallel run would use.
pub fn current_workers() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
