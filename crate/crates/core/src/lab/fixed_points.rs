use serde::Serialize;

use super::sweep::{fold_permutations, guard, Jobs, MAX_SWEEP_N};
use crate::error::Result;
use crate::involution::phi;
use crate::perm::{stat, PatternClass};

/// Fixed points of `phi_m` on `S_n` against `S_n(A_m) ∩ S_n(B_m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct FixedPointReport {
    pub n: usize,
    pub m: usize,
    pub fixed: u64,
    pub avoiding_both: u64,
    /// Avoiding both classes but moved by `phi_m`.
    pub avoiding_but_moved: u64,
    /// Fixed by `phi_m` while containing some pattern of `A_m` or `B_m`.
    pub fixed_but_containing: u64,
}

pub fn fixed_point_report(n: usize, m: usize, jobs: Jobs) -> Result<FixedPointReport> {
    guard("permutation sweep", n, MAX_SWEEP_N)?;
    let a = PatternClass::a(m)?;
    let b = PatternClass::b(m)?;
    let empty = FixedPointReport {
        n,
        m,
        ..Default::default()
    };
    Ok(fold_permutations(
        n,
        jobs,
        || empty,
        |acc, pi| {
            let fixed = phi(pi, m).expect("phi round trip") == *pi;
            let avoiding = stat(pi, a) == 0 && stat(pi, b) == 0;
            acc.fixed += fixed as u64;
            acc.avoiding_both += avoiding as u64;
            acc.avoiding_but_moved += (avoiding && !fixed) as u64;
            acc.fixed_but_containing += (fixed && !avoiding) as u64;
        },
        |mut x, y| {
            x.fixed += y.fixed;
            x.avoiding_both += y.avoiding_both;
            x.avoiding_but_moved += y.avoiding_but_moved;
            x.fixed_but_containing += y.fixed_but_containing;
            x
        },
    ))
}
