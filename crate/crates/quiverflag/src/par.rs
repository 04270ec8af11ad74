//! Order-stable batch mapping, data-parallel when the `parallel` feature is
//! enabled and sequential otherwise.
//!
//! [`par_map`] is the default execution path for independent per-item work
//! (batch lifting, flag building, per-diagram classification checks);
//! [`seq_map`] is always sequential and exists so benchmarks can compare the
//! two on identical inputs.

/// Maps `f` over the items, preserving input order in the output.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Maps `f` over the items, preserving input order in the output.
#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sequential reference implementation of [`par_map`].
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
