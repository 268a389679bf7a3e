//! Data-parallel map with a sequential fallback.
//!
//! Enumeration fans out over independent basis-pair branches, the oracle
//! over independent first elements. With the `parallel` feature (default)
//! these run on the rayon pool; without it the same call sites compile to
//! a plain iterator chain. Callers sort their merged output, so the result
//! never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
