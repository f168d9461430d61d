//! Index-range data parallelism with a sequential fallback.
//!
//! Every helper returns the same value whether or not the `parallel` feature
//! is enabled; reductions break ties by lowest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn any<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..len).into_par_iter().any(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn any<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..len).any(f)
}

/// `(0..len).map(f).collect()`, order preserved.
#[cfg(feature = "parallel")]
pub(crate) fn map<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Index and value of the maximum of `f` over `0..len`, lowest index on ties.
#[cfg(feature = "parallel")]
pub(crate) fn argmax<F>(len: usize, f: F) -> Option<(usize, u64)>
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    (0..len).into_par_iter().map(|i| (i, f(i))).reduce_with(pick_max)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn argmax<F>(len: usize, f: F) -> Option<(usize, u64)>
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    (0..len).map(|i| (i, f(i))).reduce(pick_max)
}

fn pick_max(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
        b
    } else {
        a
    }
}

/// Number of chunks to split a range of `len` items into.
pub(crate) fn chunk_count(len: u64) -> u64 {
    #[cfg(feature = "parallel")]
    let workers = rayon::current_num_threads() as u64 * 8;
    #[cfg(not(feature = "parallel"))]
    let workers = 1;
    workers.clamp(1, len.max(1))
}
