//! Execution strategy for the data-parallel inner loops.
//!
//! With the default `parallel` feature these helpers fan out over rayon;
//! without it they run the same closures sequentially. Callers always map
//! over index ranges or pre-sorted slices, so output order (and therefore
//! every report the crate emits) is identical in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<'a, T, U, F>(items: &'a [T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&'a T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<'a, T, U, F>(items: &'a [T], f: F) -> Vec<U>
where
    F: Fn(&'a T) -> U,
{
    items.iter().map(f).collect()
}

/// Accumulate a fixed-width histogram over items, chunked so each worker
/// owns one local histogram.
#[cfg(feature = "parallel")]
pub(crate) fn sum_histograms<T, F>(items: &[T], width: usize, f: F) -> Vec<u64>
where
    T: Sync,
    F: Fn(&T, &mut [u64]) + Sync + Send,
{
    let chunk = (items.len() / 64).max(1);
    items
        .par_chunks(chunk)
        .map(|part| {
            let mut hist = vec![0u64; width];
            for item in part {
                f(item, &mut hist);
            }
            hist
        })
        .reduce(
            || vec![0u64; width],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part) {
                    *a += p;
                }
                acc
            },
        )
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_histograms<T, F>(items: &[T], width: usize, f: F) -> Vec<u64>
where
    F: Fn(&T, &mut [u64]),
{
    let mut hist = vec![0u64; width];
    for item in items {
        f(item, &mut hist);
    }
    hist
}
