//! Recovering a permutation from its low-rank diagram squares plus the
//! first components of its `B_m` tail pairs, and the involution `phi_m`
//! built on that recovery.
//!
//! A permutation `π` splits into *kept* letters (those exceeding at most
//! `m - 3` letters to their left) and the rest. The diagram squares of rank
//! at most `m - 3` pin down the kept letters; the multiset of first
//! components of `B_m` tail pairs orders the rest. `phi_m` keeps the low
//! squares and feeds in the row indices of the high-rank squares as if they
//! were tail-pair first components, which swaps `a_m` and `b_m`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::{build_diagram, greedy_dots, Cell};
use crate::error::{Error, Result};
use crate::perm::{avoids, extreme_positions, stat, tail_pairs, Extremes, PatternClass, Permutation};

/// Low-rank squares and `B_m` tail rows of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialData {
    pub n: usize,
    pub m: usize,
    /// Squares of rank at most `m - 3`.
    pub low_squares: BTreeSet<Cell>,
    /// Multiset of first components, kept sorted.
    pub tail_rows: Vec<usize>,
}

/// Working vectors of the dot arrangement step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangeTrace {
    /// Dotless rows, increasing.
    pub r: Vec<usize>,
    /// Dotless columns, decreasing.
    pub c: Vec<usize>,
    pub e: Vec<usize>,
    pub c_prime: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    pub input: Permutation,
    pub m: usize,
    pub data: PartialData,
    pub arrange: ArrangeTrace,
    pub image: Permutation,
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::InvalidM(m))
    } else {
        Ok(())
    }
}

/// Whether a rank belongs to the low part for this `m`, i.e. `rank <= m - 3`.
fn is_low(rank: usize, m: usize) -> bool {
    rank + 3 <= m
}

pub fn decompose(pi: &Permutation, m: usize) -> Result<PartialData> {
    check_m(m)?;
    let d = build_diagram(pi);
    let tail_rows = tail_pairs(pi, PatternClass::b(m)?)
        .into_iter()
        .map(|p| p.i)
        .collect();
    Ok(PartialData {
        n: pi.len(),
        m,
        low_squares: d.cells_where(|s| is_low(s.rank, m)),
        tail_rows,
    })
}

/// For `i = 1..=s`, takes `c'_i = c_{e_i + 1}` and removes it from `c`.
///
/// `r` only fixes the length; the rows themselves are not consulted.
pub fn arrange_dots(r: &[usize], c: &[usize], e: &[usize]) -> Result<Vec<usize>> {
    if r.len() != c.len() || r.len() != e.len() {
        return Err(Error::Inconsistent(format!(
            "|r| = {}, |c| = {}, |e| = {} must agree",
            r.len(),
            c.len(),
            e.len()
        )));
    }
    let mut remaining = c.to_vec();
    let mut out = Vec::with_capacity(c.len());
    for (&row, &skip) in r.iter().zip(e) {
        if skip >= remaining.len() {
            return Err(Error::Inconsistent(format!(
                "e = {skip} for row {row} but only {} columns remain",
                remaining.len()
            )));
        }
        out.push(remaining.remove(skip));
    }
    Ok(out)
}

/// Rebuilds the permutation, returning it with the arrangement vectors.
pub fn reconstruct_traced(data: &PartialData) -> Result<(Permutation, ArrangeTrace)> {
    check_m(data.m)?;
    let n = data.n;
    let provisional = greedy_dots(n, &data.low_squares)
        .map_err(|e| Error::Inconsistent(e.to_string()))?;

    // a provisional dot with more than m-3 provisional dots northwest is dropped
    let kept: Vec<bool> = (0..n)
        .map(|i| {
            let northwest = provisional[..i].iter().filter(|&&c| c < provisional[i]).count();
            is_low(northwest, data.m)
        })
        .collect();

    let r: Vec<usize> = (1..=n).filter(|&row| !kept[row - 1]).collect();
    let mut taken = vec![false; n + 1];
    for (i, &col) in provisional.iter().enumerate() {
        if kept[i] {
            taken[col] = true;
        }
    }
    let c: Vec<usize> = (1..=n).rev().filter(|&col| !taken[col]).collect();

    if let Some(&stray) = data.tail_rows.iter().find(|row| r.binary_search(row).is_err()) {
        return Err(Error::Inconsistent(format!(
            "tail row {stray} carries a kept dot"
        )));
    }
    let e: Vec<usize> = r
        .iter()
        .map(|row| data.tail_rows.iter().filter(|&t| t == row).count())
        .collect();
    let c_prime = arrange_dots(&r, &c, &e)?;

    let mut word = provisional;
    for (&row, &col) in r.iter().zip(&c_prime) {
        word[row - 1] = col;
    }
    let pi = Permutation::new(word).map_err(|e| Error::Inconsistent(e.to_string()))?;

    let again = decompose(&pi, data.m)?;
    if again != *data {
        return Err(Error::Inconsistent(format!(
            "rebuilt {pi} does not reproduce the input data"
        )));
    }
    Ok((pi, ArrangeTrace { r, c, e, c_prime }))
}

pub fn reconstruct(data: &PartialData) -> Result<Permutation> {
    reconstruct_traced(data).map(|(pi, _)| pi)
}

pub fn phi_traced(pi: &Permutation, m: usize) -> Result<PhiTrace> {
    check_m(m)?;
    let d = build_diagram(pi);
    let mut tail_rows: Vec<usize> = d
        .squares()
        .iter()
        .filter(|s| !is_low(s.rank, m))
        .map(|s| s.row)
        .collect();
    tail_rows.sort_unstable();
    let data = PartialData {
        n: pi.len(),
        m,
        low_squares: d.cells_where(|s| is_low(s.rank, m)),
        tail_rows,
    };
    let (image, arrange) = reconstruct_traced(&data)?;
    Ok(PhiTrace {
        input: pi.clone(),
        m,
        data,
        arrange,
        image,
    })
}

/// The involution exchanging `a_m` and `b_m`.
///
/// Only fails if the recovery round trip breaks, which would mean a bug.
pub fn phi(pi: &Permutation, m: usize) -> Result<Permutation> {
    phi_traced(pi, m).map(|t| t.image)
}

/// `phi` restricted to permutations avoiding every pattern of `A_m`: keep
/// each letter exceeding at most `m - 3` letters to its left, and write the
/// other letters into the free positions in decreasing order.
pub fn phi_on_avoider(pi: &Permutation, m: usize) -> Result<Permutation> {
    if stat(pi, PatternClass::a(m)?) != 0 {
        return Err(Error::NotAvoiding {
            pattern: "every pattern of A_m",
        });
    }
    let left = pi.left_smaller_counts();
    let mut moved: Vec<usize> = (0..pi.len())
        .filter(|&i| !is_low(left[i], m))
        .map(|i| pi.as_slice()[i])
        .collect();
    moved.sort_unstable_by(|a, b| b.cmp(a));
    let mut moved = moved.into_iter();
    let word = (0..pi.len())
        .map(|i| {
            if is_low(left[i], m) {
                pi.as_slice()[i]
            } else {
                moved.next().expect("one moved value per moved position")
            }
        })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}

/// The classic map from 132-avoiders to 123-avoiders: left-to-right minima
/// stay, every other value is refilled in decreasing order.
pub fn simion_schmidt(pi: &Permutation) -> Result<Permutation> {
    let p132 = Permutation::from_word_unchecked(vec![1, 3, 2]);
    if !avoids(pi, &p132) {
        return Err(Error::NotAvoiding { pattern: "132" });
    }
    let minima = extreme_positions(pi, Extremes::LeftToRightMinima);
    let mut is_min = vec![false; pi.len() + 1];
    for &pos in &minima {
        is_min[pos] = true;
    }
    let mut rest: Vec<usize> = (1..=pi.len())
        .filter(|&pos| !is_min[pos])
        .map(|pos| pi.at(pos))
        .collect();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut rest = rest.into_iter();
    let word = (1..=pi.len())
        .map(|pos| if is_min[pos] { pi.at(pos) } else { rest.next().unwrap() })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}
