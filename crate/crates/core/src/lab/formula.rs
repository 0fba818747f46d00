//! Closed-form counts, evaluated exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `C(2n, n) / (n + 1)`
    Catalan,
    /// Permutations with exactly one diagram square of positive rank:
    /// `C(2n - 1, n - 3)`.
    Prop9,
    /// Permutations containing 123 exactly once: `3/n * C(2n, n - 3)`.
    Noonan,
    /// Permutations containing 132 exactly once: `C(2n - 3, n - 3)`.
    Bona,
    /// Returns summed over all Dyck paths: `3/(2n + 1) * C(2n + 1, n - 1)`.
    ReturnsTotal,
    /// High peaks summed over all Dyck paths: `C(2n - 1, n - 2)`.
    HighPeaksTotal,
    /// `n * C_n`
    TunnelsTotal,
}

impl Formula {
    pub const ALL: [Formula; 7] = [
        Formula::Catalan,
        Formula::Prop9,
        Formula::Noonan,
        Formula::Bona,
        Formula::ReturnsTotal,
        Formula::HighPeaksTotal,
        Formula::TunnelsTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Catalan => "catalan",
            Formula::Prop9 => "prop9",
            Formula::Noonan => "noonan",
            Formula::Bona => "bona",
            Formula::ReturnsTotal => "returns_total",
            Formula::HighPeaksTotal => "high_peaks_total",
            Formula::TunnelsTotal => "tunnels_total",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown formula {s:?}"))
    }
}

/// `C(a, b)`, zero whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < 0 || b > a {
        return BigUint::ZERO;
    }
    num_integer::binomial(BigUint::from(a as u64), BigUint::from(b as u64))
}

pub fn formula(which: Formula, n: u64) -> BigUint {
    let k = n as i64;
    match which {
        Formula::Catalan => binomial(2 * k, k) / (n + 1),
        Formula::Prop9 => binomial(2 * k - 1, k - 3),
        Formula::Noonan => binomial(2 * k, k - 3) * 3u32 / n,
        Formula::Bona => binomial(2 * k - 3, k - 3),
        Formula::ReturnsTotal => binomial(2 * k + 1, k - 1) * 3u32 / (2 * n + 1),
        Formula::HighPeaksTotal => binomial(2 * k - 1, k - 2),
        Formula::TunnelsTotal => formula(Formula::Catalan, n) * n,
    }
}
