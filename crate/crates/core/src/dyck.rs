//! Dyck paths and their tunnels.
//!
//! A tunnel belongs to one up-step: it starts where the up-step starts and
//! ends where the matching down-step ends, at the up-step's starting height.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::rank0_shape;
use crate::error::{Error, Result};
use crate::perm::{avoids, Permutation};

/// Largest semilength [`enumerate_paths`] accepts.
pub const MAX_ENUMERATION_SEMILENGTH: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (x, step) in steps.iter().enumerate() {
            height += match step {
                Step::U => 1,
                Step::D => -1,
            };
            if height < 0 {
                return Err(Error::InvalidPath(format!("prefix dips below the axis at x = {}", x + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(format!("unbalanced: ends at height {height}")));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights at `x = 0..=2n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut cur = 0usize;
        for s in &self.steps {
            match s {
                Step::U => cur += 1,
                Step::D => cur -= 1,
            }
            h.push(cur);
        }
        h
    }

    /// 1-based ordinal of the step at index `x` among steps of the same kind.
    pub fn ordinal(&self, x: usize) -> usize {
        let kind = self.steps[x];
        self.steps[..=x].iter().filter(|&&s| s == kind).count()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(word: &str) -> Result<Self> {
        let steps = word
            .trim()
            .chars()
            .map(|ch| match ch {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                other => Err(Error::InvalidPath(format!("illegal character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

pub fn parse_path(word: &str) -> Result<DyckPath> {
    word.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tunnel {
    pub left_x: usize,
    pub right_x: usize,
    pub height: usize,
}

impl Tunnel {
    pub fn length(&self) -> usize {
        self.right_x - self.left_x
    }

    /// Positive height and length at least 4.
    pub fn is_qualifying(&self) -> bool {
        self.height >= 1 && self.length() >= 4
    }
}

impl fmt::Display for Tunnel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{} at height {}]", self.left_x, self.right_x, self.height)
    }
}

/// One tunnel per up-step, sorted by `left_x`.
pub fn tunnels(d: &DyckPath) -> Vec<Tunnel> {
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::with_capacity(d.semilength());
    let mut height = 0;
    for (x, step) in d.steps.iter().enumerate() {
        match step {
            Step::U => {
                open.push((x, height));
                height += 1;
            }
            Step::D => {
                height -= 1;
                let (left_x, h) = open.pop().expect("validated path");
                out.push(Tunnel {
                    left_x,
                    right_x: x + 1,
                    height: h,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct PathFeatures {
    pub returns: usize,
    pub high_peaks: usize,
    pub valleys_above_zero: usize,
    pub qualifying_tunnels: usize,
}

impl std::ops::AddAssign for PathFeatures {
    fn add_assign(&mut self, o: Self) {
        self.returns += o.returns;
        self.high_peaks += o.high_peaks;
        self.valleys_above_zero += o.valleys_above_zero;
        self.qualifying_tunnels += o.qualifying_tunnels;
    }
}

/// Counts read directly off the step word; `qualifying_tunnels` comes from
/// [`tunnels`].
pub fn path_features(d: &DyckPath) -> PathFeatures {
    let h = d.heights();
    let s = &d.steps;
    let mut f = PathFeatures::default();
    for x in 0..s.len() {
        if s[x] == Step::D && h[x + 1] == 0 {
            f.returns += 1;
        }
        if x + 1 < s.len() {
            match (s[x], s[x + 1]) {
                (Step::U, Step::D) if h[x + 1] > 1 => f.high_peaks += 1,
                (Step::D, Step::U) if h[x + 1] > 0 => f.valleys_above_zero += 1,
                _ => {}
            }
        }
    }
    f.qualifying_tunnels = tunnels(d).iter().filter(|t| t.is_qualifying()).count();
    f
}

/// The path along the boundary of the rank-0 region of a 132-avoider's
/// diagram, from the lower-left to the upper-right corner of the array.
///
/// Up-step `k` runs along array row `n + 1 - k`, down-step `k` along
/// column `k`.
pub fn boundary_path(pi: &Permutation) -> Result<DyckPath> {
    if !avoids(pi, &Permutation::from_word_unchecked(vec![1, 3, 2])) {
        return Err(Error::NotAvoiding { pattern: "132" });
    }
    let n = pi.len();
    let shape = rank0_shape(pi);
    let above = |row: usize| if row == 1 { n } else { shape[row - 2] };
    let mut steps = Vec::with_capacity(2 * n);
    for row in (1..=n).rev() {
        steps.push(Step::U);
        steps.extend(std::iter::repeat_n(Step::D, above(row) - shape[row - 1]));
    }
    DyckPath::new(steps)
}

/// Lexicographic stream (U < D) of all Dyck paths of a semilength.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    next: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        self.next = successor(&current, self.n);
        Some(DyckPath { steps: current })
    }
}

fn successor(steps: &[Step], n: usize) -> Option<Vec<Step>> {
    // ups/downs counted over the prefix before x
    let mut ups = steps.iter().filter(|&&s| s == Step::U).count();
    let mut downs = steps.len() - ups;
    for x in (0..steps.len()).rev() {
        match steps[x] {
            Step::U => ups -= 1,
            Step::D => downs -= 1,
        }
        if steps[x] == Step::U && ups > downs {
            let mut next = steps[..x].to_vec();
            next.push(Step::D);
            next.extend(std::iter::repeat_n(Step::U, n - ups));
            next.extend(std::iter::repeat_n(Step::D, n - downs - 1));
            return Some(next);
        }
    }
    None
}

pub fn enumerate_paths(n: usize) -> Result<DyckPaths> {
    if n > MAX_ENUMERATION_SEMILENGTH {
        return Err(Error::LimitExceeded {
            what: "Dyck path enumeration",
            n,
            max: MAX_ENUMERATION_SEMILENGTH,
        });
    }
    let mut first = vec![Step::U; n];
    first.extend(std::iter::repeat_n(Step::D, n));
    Ok(DyckPaths {
        n,
        next: Some(first),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn t(left_x: usize, right_x: usize, height: usize) -> Tunnel {
        Tunnel { left_x, right_x, height }
    }

    #[test]
    fn parsing() {
        assert_eq!(d("UUDD").semilength(), 2);
        assert!(matches!("UDDU".parse::<DyckPath>(), Err(Error::InvalidPath(_))));
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXDD".parse::<DyckPath>().is_err());
        assert_eq!(d("UUUDDDUDUUDUUUDDDD").semilength(), 9);
    }

    #[test]
    fn tunnel_examples() {
        assert_eq!(tunnels(&d("UUDD")), vec![t(0, 4, 0), t(1, 3, 1)]);
        assert_eq!(tunnels(&d("UDUD")), vec![t(0, 2, 0), t(2, 4, 0)]);
        let fig = tunnels(&d("UUUDDDUDUUDUUUDDDD"));
        assert_eq!(fig.len(), 9);
        assert!(fig.contains(&t(12, 16, 2)));
        assert_eq!(t(12, 16, 2).length(), 4);
    }

    #[test]
    fn feature_examples() {
        let f = |returns, high_peaks, valleys_above_zero, qualifying_tunnels| PathFeatures {
            returns,
            high_peaks,
            valleys_above_zero,
            qualifying_tunnels,
        };
        assert_eq!(path_features(&d("UUDD")), f(1, 1, 0, 0));
        assert_eq!(path_features(&d("UDUD")), f(2, 0, 0, 0));
        assert_eq!(path_features(&d("UUUDDD")), f(1, 1, 0, 1));
        assert_eq!(path_features(&d("UUDUDD")), f(1, 2, 1, 0));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_path(&Permutation::identity(4)).unwrap().to_string(), "UUUUDDDD");
        assert_eq!(boundary_path(&Permutation::reversal(4)).unwrap().to_string(), "UDUDUDUD");
        let pi: Permutation = "5 4 6 7 3 1 2".parse().unwrap();
        assert_eq!(boundary_path(&pi).unwrap().to_string(), "UUDDUDUUUDUDDD");
        assert!(boundary_path(&"1 3 2".parse().unwrap()).is_err());
    }

    #[test]
    fn ordinals() {
        let p = d("UUDDUDUUUDUDDD");
        assert_eq!(p.ordinal(7), 5);
        assert_eq!(p.ordinal(12), 6);
    }

    #[test]
    fn enumeration() {
        let words = |n| enumerate_paths(n).unwrap().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(words(1), ["UD"]);
        assert_eq!(words(2), ["UUDD", "UDUD"]);
        assert_eq!(words(3).len(), 5);
        assert_eq!(words(0), [""]);
        let all: Vec<DyckPath> = enumerate_paths(6).unwrap().collect();
        assert_eq!(all.len(), 132);
        // Step::U < Step::D, so derived ordering is the U < D lexicographic order
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(enumerate_paths(15).is_err());
    }
}
