//! Index-parallel map: rayon when the `parallel` feature is on, plain
//! iteration otherwise. Output order always matches index order, so results
//! are identical (bit for bit) across both back ends.

#[cfg(feature = "parallel")]
pub(crate) fn map_range<O, F>(n: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<O, F>(n: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Send + Sync,
{
    (0..n).map(f).collect()
}
