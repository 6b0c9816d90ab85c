//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the [`Exec::Parallel`] mode maps over rayon's
//! pool; without it every mode runs sequentially. Results always come back in
//! input order, so outputs do not depend on the execution mode.

/// Execution mode for sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this mode actually uses threads in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map_collect<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Order-preserving fallible map, stopping at the first error in input order.
    pub fn try_map_collect<T, R, E, F>(self, items: Vec<T>, f: F) -> Result<Vec<R>, E>
    where
        T: Send,
        R: Send,
        E: Send,
        F: Fn(T) -> Result<R, E> + Sync + Send,
    {
        self.map_collect(items, f).into_iter().collect()
    }
}

/// Run `f` on a pool of `jobs` threads (`None` or `0` keeps the global pool).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(k) = jobs.filter(|&k| k > 0) {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}
