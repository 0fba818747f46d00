//! Permutations in one-line notation, pattern occurrences and the
//! pattern-tail statistics `a_m` / `b_m`.
//!
//! Positions and values are 1-based everywhere in the public API.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates `values` as a permutation of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty input".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidPermutation("values start at 1".into()));
            }
            if v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} exceeds length {n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
        }
        Ok(Self { word: values })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_word_unchecked((1..=n).collect())
    }

    /// `n, n-1, ..., 1`
    pub fn reversal(n: usize) -> Self {
        Self::from_word_unchecked((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.word
    }

    /// Value at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    /// `inverse()[v - 1]` is the position holding value `v`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    pub fn reverse_complement(&self) -> Self {
        let n = self.len();
        Self::from_word_unchecked(self.word.iter().rev().map(|&v| n + 1 - v).collect())
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|j| (0..j).filter(|&i| w[i] > w[j]).count())
            .sum()
    }

    /// For each position `i`, the number of `k < i` with `π_k < π_i`.
    pub fn left_smaller_counts(&self) -> Vec<usize> {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[..i].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts values separated by spaces and/or commas.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("not a number: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Steps `word` to its lexicographic successor in place. Returns `false` at
/// the last permutation.
pub(crate) fn next_lex(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self {
            next: (n > 0).then(|| (1..=n).collect()),
        }
    }

    /// Starts at `first` and continues lexicographically.
    pub fn starting_at(first: Permutation) -> Self {
        Self {
            next: Some(first.into_vec()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_word_unchecked(current))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    /// Patterns ending in `m (m-1)`.
    A,
    /// Patterns ending in `(m-1) m`.
    B,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::A => "a",
            PatternKind::B => "b",
        })
    }
}

/// `A_m` or `B_m`: the `(m-2)!` patterns of length `m` whose last two
/// letters are `m, m-1` (kind A) or `m-1, m` (kind B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternClass {
    m: usize,
    kind: PatternKind,
}

impl PatternClass {
    pub fn new(m: usize, kind: PatternKind) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidM(m));
        }
        Ok(Self { m, kind })
    }

    pub fn a(m: usize) -> Result<Self> {
        Self::new(m, PatternKind::A)
    }

    pub fn b(m: usize) -> Result<Self> {
        Self::new(m, PatternKind::B)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn members(&self) -> Vec<Permutation> {
        let m = self.m;
        let tail = match self.kind {
            PatternKind::A => [m, m - 1],
            PatternKind::B => [m - 1, m],
        };
        let mut prefix: Vec<usize> = (1..=m - 2).collect();
        let mut out = Vec::new();
        loop {
            let mut word = prefix.clone();
            word.extend_from_slice(&tail);
            out.push(Permutation::from_word_unchecked(word));
            if !next_lex(&mut prefix) {
                break;
            }
        }
        out
    }
}

/// A position pair `(i, j)`, `i < j`, ending some occurrence of a pattern of
/// `A_m` or `B_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TailPair {
    pub i: usize,
    pub j: usize,
}

impl TailPair {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for TailPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

fn search_occurrences(
    pattern: &Permutation,
    host: &Permutation,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) {
    fn extend(
        pat: &[usize],
        host: &[usize],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let t = chosen.len();
        if t == pat.len() {
            return visit(chosen);
        }
        let start = chosen.last().copied().unwrap_or(0);
        // leave room for the remaining pattern letters
        let end = host.len() - (pat.len() - t - 1);
        for idx in start + 1..=end {
            let v = host[idx - 1];
            let consistent = chosen
                .iter()
                .zip(pat)
                .all(|(&c, &p)| (host[c - 1] < v) == (p < pat[t]));
            if consistent {
                chosen.push(idx);
                extend(pat, host, chosen, visit)?;
                chosen.pop();
            }
        }
        ControlFlow::Continue(())
    }

    if pattern.len() > host.len() {
        return;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    let _ = extend(pattern.as_slice(), host.as_slice(), &mut chosen, visit);
}

/// Calls `visit` with every occurrence of `pattern` in `host` (1-based
/// index tuples), in lexicographic order.
pub fn for_each_occurrence(pattern: &Permutation, host: &Permutation, mut visit: impl FnMut(&[usize])) {
    search_occurrences(pattern, host, &mut |occ| {
        visit(occ);
        ControlFlow::Continue(())
    });
}

pub fn occurrences(pattern: &Permutation, host: &Permutation) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_occurrence(pattern, host, |occ| out.push(occ.to_vec()));
    out
}

pub fn count_occurrences(pattern: &Permutation, host: &Permutation) -> usize {
    let mut count = 0;
    for_each_occurrence(pattern, host, |_| count += 1);
    count
}

fn for_each_tail_pair(pi: &Permutation, class: PatternClass, mut visit: impl FnMut(TailPair)) {
    let w = pi.as_slice();
    let n = w.len();
    let need = class.m - 2;
    match class.kind {
        // inversions (i, j) with at least m-2 letters smaller than π_j left of i
        PatternKind::A => {
            for j in 0..n {
                let mut smaller = 0;
                for i in 0..j {
                    if w[i] > w[j] && smaller >= need {
                        visit(TailPair::new(i + 1, j + 1));
                    }
                    if w[i] < w[j] {
                        smaller += 1;
                    }
                }
            }
        }
        // non-inversions (i, j) with at least m-2 letters smaller than π_i left of i
        PatternKind::B => {
            let left = pi.left_smaller_counts();
            for i in 0..n {
                if left[i] < need {
                    continue;
                }
                for j in i + 1..n {
                    if w[i] < w[j] {
                        visit(TailPair::new(i + 1, j + 1));
                    }
                }
            }
        }
    }
}

/// Distinct final-two-position pairs of occurrences of patterns in `class`,
/// sorted.
pub fn tail_pairs(pi: &Permutation, class: PatternClass) -> Vec<TailPair> {
    let mut out = Vec::new();
    for_each_tail_pair(pi, class, |p| out.push(p));
    out.sort_unstable();
    out
}

/// `a_m(π)` for kind A, `b_m(π)` for kind B.
pub fn stat(pi: &Permutation, class: PatternClass) -> usize {
    let mut count = 0;
    for_each_tail_pair(pi, class, |_| count += 1);
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremes {
    LeftToRightMinima,
    RightToLeftMaxima,
}

pub fn extreme_positions(pi: &Permutation, kind: Extremes) -> Vec<usize> {
    let w = pi.as_slice();
    match kind {
        Extremes::LeftToRightMinima => {
            let mut min = usize::MAX;
            let mut out = Vec::new();
            for (i, &v) in w.iter().enumerate() {
                if v < min {
                    min = v;
                    out.push(i + 1);
                }
            }
            out
        }
        Extremes::RightToLeftMaxima => {
            let mut max = 0;
            let mut out = Vec::new();
            for (i, &v) in w.iter().enumerate().rev() {
                if v > max {
                    max = v;
                    out.push(i + 1);
                }
            }
            out.reverse();
            out
        }
    }
}

/// `true` iff `pi` has no occurrence of `pattern`.
pub fn avoids(pi: &Permutation, pattern: &Permutation) -> bool {
    let mut found = false;
    search_occurrences(pattern, pi, &mut |_| {
        found = true;
        ControlFlow::Break(())
    });
    !found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn make_permutation_examples() {
        let pi = Permutation::new(vec![3, 8, 5, 10, 2, 4, 1, 9, 6, 7]).unwrap();
        assert_eq!(pi.len(), 10);
        assert_eq!(Permutation::new(vec![1]).unwrap().len(), 1);
        assert!(matches!(
            Permutation::new(vec![1, 1, 2]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("3,8,5,10,2,4,1,9,6,7"), p("3 8 5 10 2 4 1 9 6 7"));
        assert_eq!(p("3, 1 2").to_string(), "3 1 2");
        assert!("1 x 2".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn occurrence_examples() {
        let host = p("7 1 4 2 6 3 5");
        assert_eq!(
            occurrences(&p("1 2 4 3"), &host),
            vec![vec![2, 3, 5, 7], vec![2, 4, 5, 6], vec![2, 4, 5, 7]]
        );
        assert_eq!(occurrences(&p("2 1 4 3"), &host), vec![vec![3, 4, 5, 7]]);
        assert_eq!(occurrences(&p("1 2 3 4"), &host).len(), 1);
        assert!(occurrences(&p("2 1 3 4"), &host).is_empty());
        assert!(occurrences(&p("1 2"), &p("2 1")).is_empty());
        assert!(occurrences(&p("1 2 3"), &p("1 2")).is_empty());
    }

    #[test]
    fn tail_pair_examples() {
        let host = p("7 1 4 2 6 3 5");
        assert_eq!(
            tail_pairs(&host, PatternClass::a(4).unwrap()),
            vec![TailPair::new(5, 6), TailPair::new(5, 7)]
        );
        assert_eq!(tail_pairs(&host, PatternClass::b(4).unwrap()), vec![TailPair::new(6, 7)]);
        assert_eq!(stat(&host, PatternClass::a(4).unwrap()), 2);
        assert_eq!(stat(&host, PatternClass::b(4).unwrap()), 1);
        for n in 1..6 {
            for m in 2..8 {
                assert!(tail_pairs(&Permutation::identity(n), PatternClass::a(m).unwrap()).is_empty());
            }
        }
    }

    #[test]
    fn stat_examples() {
        assert_eq!(stat(&p("3 2 1"), PatternClass::a(2).unwrap()), 3);
        assert_eq!(stat(&p("1 2 3 4"), PatternClass::b(3).unwrap()), 3);
        assert_eq!(
            tail_pairs(&p("1 2 3 4"), PatternClass::b(3).unwrap()),
            vec![TailPair::new(2, 3), TailPair::new(2, 4), TailPair::new(3, 4)]
        );
        // m > n
        assert_eq!(stat(&p("2 1 3"), PatternClass::b(5).unwrap()), 0);
    }

    #[test]
    fn class_members() {
        let a4 = PatternClass::a(4).unwrap().members();
        assert_eq!(a4, vec![p("1 2 4 3"), p("2 1 4 3")]);
        assert_eq!(PatternClass::b(2).unwrap().members(), vec![p("1 2")]);
        assert_eq!(PatternClass::a(5).unwrap().members().len(), 6);
        assert!(PatternClass::a(1).is_err());
    }

    #[test]
    fn extremes() {
        assert_eq!(
            extreme_positions(&p("2 6 7 1 3 4 5"), Extremes::LeftToRightMinima),
            vec![1, 4]
        );
        assert_eq!(extreme_positions(&p("1 3 2"), Extremes::RightToLeftMaxima), vec![2, 3]);
        assert_eq!(
            extreme_positions(&Permutation::identity(6), Extremes::LeftToRightMinima),
            vec![1]
        );
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = Permutations::new(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]);
        assert_eq!(Permutations::new(6).count(), 720);
        assert_eq!(Permutations::new(0).count(), 0);
    }
}
