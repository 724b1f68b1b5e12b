//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the hot loops (pair verification,
//! Monte Carlo counting, annealing restarts) run on rayon; without it the
//! same entry points run sequentially. Results are bit-identical either
//! way: reductions are deterministic and random streams are indexed, never
//! shared.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n` and collect.
pub fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Lexicographically smallest ordered pair (i, j), i != j, failing the
/// predicate `ok`, or None when every ordered pair passes.
pub fn first_failing_ordered_pair<F>(n: usize, ok: F) -> Option<(usize, usize)>
where
    F: Fn(usize, usize) -> bool + Sync + Send,
{
    let per_row = |i: usize| -> Option<(usize, usize)> {
        (0..n).find(|&j| j != i && !ok(i, j)).map(|j| (i, j))
    };
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(per_row)
            .min_by_key(|&(i, j)| (i, j))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter_map(per_row).min_by_key(|&(i, j)| (i, j))
    }
}

/// Lexicographically smallest unordered pair i < j failing `ok`.
pub fn first_failing_unordered_pair<F>(n: usize, ok: F) -> Option<(usize, usize)>
where
    F: Fn(usize, usize) -> bool + Sync + Send,
{
    let per_row = |i: usize| -> Option<(usize, usize)> {
        ((i + 1)..n).find(|&j| !ok(i, j)).map(|j| (i, j))
    };
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(per_row)
            .min_by_key(|&(i, j)| (i, j))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter_map(per_row).min_by_key(|&(i, j)| (i, j))
    }
}

/// Sum of `f(i)` over `0..n` for u64 counters.
pub fn sum_indexed<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).sum()
    }
}
