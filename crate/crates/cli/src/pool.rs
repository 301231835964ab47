//! A scoped worker pool implementing the core `Executor` trait.

use std::sync::Mutex;

use cogrowth_core::walk::Executor;

/// Environment variable consulted when no explicit thread count is given.
pub const THREADS_ENV: &str = "COGROWTH_THREADS";

type Task<'a> = Box<dyn FnOnce() + Send + 'a>;

/// Runs each batch on up to `workers` scoped threads that pull jobs from a
/// shared queue. Jobs write to disjoint outputs, so results never depend on
/// the worker count.
#[derive(Clone, Copy, Debug)]
pub struct ThreadPool {
    workers: usize,
}

impl ThreadPool {
    pub fn new(workers: usize) -> Self {
        ThreadPool {
            workers: workers.max(1),
        }
    }

    /// `explicit`, else `COGROWTH_THREADS`, else the available parallelism.
    pub fn from_env(explicit: Option<usize>) -> anyhow::Result<Self> {
        if let Some(n) = explicit {
            return Ok(Self::new(n));
        }
        if let Ok(v) = std::env::var(THREADS_ENV) {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
            return Ok(Self::new(n));
        }
        Ok(Self::new(std::thread::available_parallelism().map_or(1, |n| n.get())))
    }
}

impl Executor for ThreadPool {
    fn workers(&self) -> usize {
        self.workers
    }

    fn execute<'a>(&self, tasks: Vec<Task<'a>>) {
        let n = self.workers.min(tasks.len());
        if n <= 1 {
            tasks.into_iter().for_each(|t| t());
            return;
        }
        let queue = Mutex::new(tasks.into_iter());
        std::thread::scope(|s| {
            for _ in 0..n {
                s.spawn(|| loop {
                    let next = queue.lock().expect("queue lock").next();
                    match next {
                        Some(t) => t(),
                        None => break,
                    }
                });
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn runs_every_task_once() {
        let pool = ThreadPool::new(4);
        let mut out = vec![0usize; 100];
        let counter = AtomicUsize::new(0);
        let tasks: Vec<Task> = out
            .iter_mut()
            .enumerate()
            .map(|(i, slot)| {
                let counter = &counter;
                Box::new(move || {
                    *slot = i * i;
                    counter.fetch_add(1, Ordering::Relaxed);
                }) as Task
            })
            .collect();
        pool.execute(tasks);
        assert_eq!(counter.load(Ordering::Relaxed), 100);
        assert!(out.iter().enumerate().all(|(i, &v)| v == i * i));
    }
}
