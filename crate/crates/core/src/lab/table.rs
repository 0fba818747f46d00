use std::collections::BTreeMap;

use serde::Serialize;

use super::sweep::{fold_permutations, guard, Jobs, MAX_SWEEP_N};
use crate::error::Result;
use crate::perm::{stat, PatternClass, PatternKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub m: usize,
    pub stat: PatternKind,
    pub k: usize,
    pub count: u64,
}

/// How many permutations take each statistic value.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// `k -> count` for one `(n, m, stat)` slice.
    pub fn counts(&self, n: usize, m: usize, kind: PatternKind) -> BTreeMap<usize, u64> {
        self.rows
            .iter()
            .filter(|r| r.n == n && r.m == m && r.stat == kind)
            .map(|r| (r.k, r.count))
            .collect()
    }

    pub fn count_at(&self, n: usize, m: usize, kind: PatternKind, k: usize) -> u64 {
        self.rows
            .iter()
            .find(|r| r.n == n && r.m == m && r.stat == kind && r.k == k)
            .map_or(0, |r| r.count)
    }

    /// Rows sorted by `(n, m, stat, k)`.
    pub fn sorted(mut self) -> Self {
        self.rows.sort_by_key(|r| (r.n, r.m, r.stat, r.k));
        self
    }

    /// Rows sorted by `(n, m, k, stat)`, pairing up the `a` and `b` rows of
    /// each value.
    pub fn interleaved(mut self) -> Self {
        self.rows.sort_by_key(|r| (r.n, r.m, r.k, r.stat));
        self
    }

    pub fn extend(&mut self, other: CountTable) {
        self.rows.extend(other.rows);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.rows.is_empty() {
            w.write_record(["n", "m", "stat", "k", "count"])
                .expect("write to memory");
        }
        for row in &self.rows {
            w.serialize(row).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}

/// `k -> |{π in S_n : stat(π) = k}|` for `a_m` or `b_m`.
pub fn distribution(n: usize, m: usize, kind: PatternKind, jobs: Jobs) -> Result<CountTable> {
    guard("permutation sweep", n, MAX_SWEEP_N)?;
    let class = PatternClass::new(m, kind)?;
    let hist = fold_permutations(
        n,
        jobs,
        BTreeMap::<usize, u64>::new,
        |acc, pi| *acc.entry(stat(pi, class)).or_default() += 1,
        |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        },
    );
    Ok(CountTable {
        rows: hist
            .into_iter()
            .map(|(k, count)| CountRow {
                n,
                m,
                stat: kind,
                k,
                count,
            })
            .collect(),
    })
}
