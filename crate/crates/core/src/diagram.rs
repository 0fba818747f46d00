//! Ranked permutation diagrams.
//!
//! The `n x n` array has row 1 at the top and column `c` standing for value
//! `c`; position `i` puts its dot at `(i, π_i)`. Every dot shades its own
//! cell and all cells due south and due east. The cells left white are the
//! diagram squares, and the rank of a square is the number of dots strictly
//! northwest of it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A `(row, col)` cell of the array.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RankedSquare {
    pub row: usize,
    pub col: usize,
    pub rank: usize,
}

impl RankedSquare {
    pub fn cell(&self) -> Cell {
        (self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagram {
    n: usize,
    /// Sorted by `(row, col)`.
    squares: Vec<RankedSquare>,
    /// `squares[row_start[i - 1]..row_start[i]]` is row `i`.
    #[serde(skip)]
    row_start: Vec<usize>,
}

impl Diagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn squares(&self) -> &[RankedSquare] {
        &self.squares
    }

    pub fn row(&self, row: usize) -> &[RankedSquare] {
        &self.squares[self.row_start[row - 1]..self.row_start[row]]
    }

    pub fn rank_at(&self, row: usize, col: usize) -> Option<usize> {
        let r = self.row(row);
        r.binary_search_by_key(&col, |s| s.col)
            .ok()
            .map(|k| r[k].rank)
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        self.squares.iter().map(RankedSquare::cell).collect()
    }

    /// Cells of the squares satisfying `keep`.
    pub fn cells_where(&self, keep: impl Fn(&RankedSquare) -> bool) -> BTreeSet<Cell> {
        self.squares.iter().filter(|s| keep(s)).map(RankedSquare::cell).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }
}

pub fn build_diagram(pi: &Permutation) -> Diagram {
    let n = pi.len();
    let inv = pi.inverse();
    // placed[v] is set once the dot of value v lies in a row above the current one
    let mut placed = vec![false; n + 1];
    let mut squares = Vec::new();
    let mut row_start = Vec::with_capacity(n + 1);
    row_start.push(0);
    for row in 1..=n {
        let mut rank = 0;
        for col in 1..pi.at(row) {
            if placed[col] {
                rank += 1;
            } else if inv[col - 1] > row {
                squares.push(RankedSquare { row, col, rank });
            }
        }
        placed[pi.at(row)] = true;
        row_start.push(squares.len());
    }
    Diagram {
        n,
        squares,
        row_start,
    }
}

/// Number of squares of rank at least `m - 2`; equals `a_m` of the source
/// permutation.
pub fn stat_a_via_diagram(d: &Diagram, m: usize) -> usize {
    let min_rank = m.saturating_sub(2);
    d.squares.iter().filter(|s| s.rank >= min_rank).count()
}

/// Row by row, puts a dot in the leftmost non-white cell whose column is
/// still free. Fails if some row has no such cell.
pub(crate) fn greedy_dots(n: usize, white: &BTreeSet<Cell>) -> Result<Vec<usize>> {
    let mut used = vec![false; n + 1];
    let mut cols = Vec::with_capacity(n);
    for row in 1..=n {
        let col = (1..=n)
            .find(|&c| !used[c] && !white.contains(&(row, c)))
            .ok_or_else(|| Error::NotRealizable {
                n,
                reason: format!("row {row} has no admissible cell"),
            })?;
        used[col] = true;
        cols.push(col);
    }
    Ok(cols)
}

/// Inverts [`build_diagram`]: the unique permutation whose diagram squares
/// are exactly `white`.
pub fn permutation_from_diagram(n: usize, white: &BTreeSet<Cell>) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::NotRealizable {
            n,
            reason: "empty array".into(),
        });
    }
    if let Some(&(r, c)) = white
        .iter()
        .find(|&&(r, c)| r == 0 || c == 0 || r > n || c > n)
    {
        return Err(Error::NotRealizable {
            n,
            reason: format!("cell ({r},{c}) lies outside the array"),
        });
    }
    let pi = Permutation::from_word_unchecked(greedy_dots(n, white)?);
    if build_diagram(&pi).cells() != *white {
        return Err(Error::NotRealizable {
            n,
            reason: format!("greedy placement {pi} does not reproduce the squares"),
        });
    }
    Ok(pi)
}

/// Row lengths of the rank-0 region.
pub fn rank0_shape(pi: &Permutation) -> Vec<usize> {
    let d = build_diagram(pi);
    (1..=pi.len())
        .map(|row| d.row(row).iter().filter(|s| s.rank == 0).count())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_high_ranks() {
        let d = build_diagram(&p("3 8 5 10 2 4 1 9 6 7"));
        let high: Vec<_> = d.squares().iter().filter(|s| s.rank >= 3).copied().collect();
        assert_eq!(
            high,
            vec![
                RankedSquare { row: 4, col: 9, rank: 3 },
                RankedSquare { row: 8, col: 6, rank: 5 },
                RankedSquare { row: 8, col: 7, rank: 5 },
            ]
        );
        assert_eq!(stat_a_via_diagram(&d, 5), 3);
        // a few nonzero ranks below the top band
        assert_eq!(d.rank_at(2, 5), Some(1));
        assert_eq!(d.rank_at(4, 6), Some(2));
        assert_eq!(d.rank_at(4, 4), Some(1));
        assert_eq!(d.rank_at(6, 1), Some(0));
        assert_eq!(d.rank_at(7, 1), None);
    }

    #[test]
    fn small_diagrams() {
        assert!(build_diagram(&Permutation::identity(6)).squares().is_empty());
        let d = build_diagram(&p("1 3 2"));
        assert_eq!(d.squares(), &[RankedSquare { row: 2, col: 2, rank: 1 }]);
        assert_eq!(stat_a_via_diagram(&d, 3), 1);
        assert_eq!(stat_a_via_diagram(&d, 2), 1);
        let d = build_diagram(&p("4 1 3 2"));
        assert_eq!(stat_a_via_diagram(&d, 2), d.squares().len());
    }

    #[test]
    fn from_diagram_examples() {
        let cells = |v: &[Cell]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(permutation_from_diagram(3, &cells(&[])).unwrap(), p("1 2 3"));
        assert_eq!(permutation_from_diagram(3, &cells(&[(2, 2)])).unwrap(), p("1 3 2"));
        assert_eq!(
            permutation_from_diagram(3, &cells(&[(1, 1), (2, 1)])).unwrap(),
            p("2 3 1")
        );
    }

    #[test]
    fn from_diagram_rejects_garbage() {
        let cells = |v: &[Cell]| v.iter().copied().collect::<BTreeSet<_>>();
        // (1,2) white forces a dot further right but (1,1) is shaded: mismatch
        assert!(matches!(
            permutation_from_diagram(3, &cells(&[(1, 2)])),
            Err(Error::NotRealizable { .. })
        ));
        // full first row leaves nowhere for the dot
        assert!(permutation_from_diagram(2, &cells(&[(1, 1), (1, 2)])).is_err());
        assert!(permutation_from_diagram(2, &cells(&[(3, 1)])).is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(rank0_shape(&Permutation::identity(5)), vec![0; 5]);
        assert_eq!(rank0_shape(&Permutation::reversal(5)), vec![4, 3, 2, 1, 0]);
        assert_eq!(rank0_shape(&p("5 4 6 7 3 1 2")), vec![4, 3, 3, 3, 2, 0, 0]);
        assert_eq!(rank0_shape(&p("5 4 7 6 3 1 2")), vec![4, 3, 3, 3, 2, 0, 0]);
    }

    #[test]
    fn json_rendering() {
        let d = build_diagram(&p("1 3 2"));
        assert_eq!(
            d.to_json(),
            r#"{"n":3,"squares":[{"row":2,"col":2,"rank":1}]}"#
        );
    }
}
