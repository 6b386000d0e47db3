//! Order-preserving batch evaluation, on a rayon pool when the `parallel`
//! feature is enabled and more than one worker is requested.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Logical parallelism of the machine, falling back to one worker.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub struct Executor {
    workers: usize,
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    /// `workers == 0` means [`default_workers`].
    pub fn new(workers: usize) -> Self {
        let workers = if workers == 0 { default_workers() } else { workers };
        #[cfg(feature = "parallel")]
        {
            let pool = (workers > 1).then(|| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .expect("failed to start worker pool")
            });
            Self { workers, pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            Self { workers }
        }
    }

    pub fn sequential() -> Self {
        Self::new(1)
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Whether work actually fans out across threads.
    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self.pool.is_some()
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }

    /// `items.iter().map(f)` with results in input order regardless of
    /// scheduling.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            // Single-item splits: work per item varies by orders of magnitude.
            return pool.install(|| items.par_iter().with_max_len(1).map(&f).collect());
        }
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        for workers in [1, 4] {
            let out = Executor::new(workers).map(&items, |x| x * x);
            assert_eq!(out, items.iter().map(|x| x * x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn sequential_is_not_parallel() {
        assert!(!Executor::sequential().is_parallel());
        assert_eq!(Executor::sequential().workers(), 1);
    }
}
