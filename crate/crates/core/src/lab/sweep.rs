//! Exhaustive sweeps over `S_n`, split into contiguous lexicographic rank
//! ranges. Per-worker accumulators are merged in range order, so results do
//! not depend on the worker count.

use std::num::NonZeroUsize;
use std::thread;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Permutations};

/// Largest `n` for which `S_n` is swept.
pub const MAX_SWEEP_N: usize = 9;

/// Worker count for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Jobs(NonZeroUsize);

impl Jobs {
    pub fn new(n: usize) -> Self {
        Jobs(NonZeroUsize::new(n).unwrap_or(NonZeroUsize::MIN))
    }

    pub fn get(self) -> usize {
        self.0.get()
    }
}

impl Default for Jobs {
    fn default() -> Self {
        Jobs(thread::available_parallelism().unwrap_or(NonZeroUsize::MIN))
    }
}

pub(crate) fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::LimitExceeded { what, n, max })
    } else {
        Ok(())
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of lexicographic rank `rank` (0-based) in `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        word.push(pool.remove(idx));
    }
    Permutation::from_word_unchecked(word)
}

/// Folds every permutation of `S_n` into an accumulator.
///
/// Each worker starts from `init()`, visits its range with `step`, and the
/// worker results are combined left to right with `merge`.
pub fn fold_permutations<T, I, S, M>(n: usize, jobs: Jobs, init: I, step: S, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    S: Fn(&mut T, &Permutation) + Sync,
    M: Fn(T, T) -> T,
{
    if n == 0 {
        return init();
    }
    let total = factorial(n);
    let workers = (jobs.get() as u64).min(total);
    let chunk = total.div_ceil(workers);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let run = |(lo, hi): (u64, u64)| {
        let mut acc = init();
        for pi in Permutations::starting_at(unrank(n, lo)).take((hi - lo) as usize) {
            step(&mut acc, &pi);
        }
        acc
    };

    if ranges.len() == 1 {
        return run(ranges[0]);
    }
    let parts: Vec<T> = thread::scope(|s| {
        let handles: Vec<_> = ranges.iter().map(|&r| s.spawn(move || run(r))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut parts = parts.into_iter();
    let first = parts.next().expect("at least one range");
    parts.fold(first, merge)
}

/// Collects the permutations satisfying `keep`, in lexicographic order.
pub fn filter_permutations<F>(n: usize, jobs: Jobs, keep: F) -> Vec<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    fold_permutations(
        n,
        jobs,
        Vec::new,
        |acc, pi| {
            if keep(pi) {
                acc.push(pi.clone());
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrank_matches_enumeration() {
        for (rank, pi) in Permutations::new(5).enumerate() {
            assert_eq!(unrank(5, rank as u64), pi);
        }
    }

    #[test]
    fn result_independent_of_worker_count() {
        let collect = |jobs| {
            fold_permutations(
                6,
                Jobs::new(jobs),
                Vec::new,
                |acc: &mut Vec<Permutation>, pi| acc.push(pi.clone()),
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )
        };
        let serial = collect(1);
        assert_eq!(serial, Permutations::new(6).collect::<Vec<_>>());
        for jobs in [2, 3, 7, 1000] {
            assert_eq!(collect(jobs), serial);
        }
    }

    #[test]
    fn jobs_floor_is_one() {
        assert_eq!(Jobs::new(0).get(), 1);
    }
}
