//! Sequential fallbacks for the optional rayon-backed hot loops.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}
