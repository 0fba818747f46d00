//! The two constructions counting permutations with exactly one
//! positive-rank diagram square (`a_3 = 1`) or exactly one `B_3` tail pair
//! (`b_3 = 1`).

use super::sweep::{fold_permutations, guard, Jobs};
use crate::diagram::{build_diagram, permutation_from_diagram, Cell};
use crate::dyck::{boundary_path, tunnels, DyckPath, Step, Tunnel};
use crate::error::{Error, Result};
use crate::perm::{avoids, count_occurrences, extreme_positions, Extremes, Permutation, TailPair};

pub const MAX_OCCURRENCE_COUNT_N: usize = 8;

/// `|{π in S_n : π has exactly t occurrences of pattern}|`
pub fn count_exact_occurrences(n: usize, pattern: &Permutation, t: usize, jobs: Jobs) -> Result<u64> {
    guard("occurrence counting", n, MAX_OCCURRENCE_COUNT_N)?;
    Ok(fold_permutations(
        n,
        jobs,
        || 0u64,
        |acc, pi| {
            if count_occurrences(pattern, pi) == t {
                *acc += 1;
            }
        },
        |a, b| a + b,
    ))
}

/// The array cell joined by a tunnel of a boundary path: the row of its
/// up-step and the column of its down-step.
pub fn tunnel_cell(path: &DyckPath, t: &Tunnel) -> Cell {
    debug_assert_eq!(path.steps()[t.left_x], Step::U);
    debug_assert_eq!(path.steps()[t.right_x - 1], Step::D);
    let n = path.semilength();
    (n + 1 - path.ordinal(t.left_x), path.ordinal(t.right_x - 1))
}

/// Adds the square joined by a qualifying tunnel of `pi`'s boundary path to
/// `pi`'s diagram and returns the permutation with that diagram.
pub fn prop9_forward(pi: &Permutation, t: &Tunnel) -> Result<Permutation> {
    let path = boundary_path(pi)?;
    if !tunnels(&path).contains(t) {
        return Err(Error::InvalidTunnel(format!("{t} is not a tunnel of {path}")));
    }
    if !t.is_qualifying() {
        return Err(Error::InvalidTunnel(format!(
            "{t} needs positive height and length at least 4"
        )));
    }
    let mut white = build_diagram(pi).cells();
    white.insert(tunnel_cell(&path, t));
    permutation_from_diagram(pi.len(), &white)
}

fn p123() -> Permutation {
    Permutation::from_word_unchecked(vec![1, 2, 3])
}

/// Consecutive right-to-left maxima `(i, j)` of a 123-avoider with some
/// letter left of `i` smaller than `σ_j`.
pub fn thomas_pairs(sigma: &Permutation) -> Result<Vec<TailPair>> {
    if !avoids(sigma, &p123()) {
        return Err(Error::NotAvoiding { pattern: "123" });
    }
    let maxima = extreme_positions(sigma, Extremes::RightToLeftMaxima);
    Ok(maxima
        .windows(2)
        .map(|w| TailPair::new(w[0], w[1]))
        .filter(|p| (1..p.i).any(|k| sigma.at(k) < sigma.at(p.j)))
        .collect())
}

/// Swaps the letters at an admissible pair.
pub fn thomas_map(sigma: &Permutation, p: TailPair) -> Result<Permutation> {
    if !thomas_pairs(sigma)?.contains(&p) {
        return Err(Error::InvalidPair(p.i, p.j));
    }
    let mut word = sigma.as_slice().to_vec();
    word.swap(p.i - 1, p.j - 1);
    Ok(Permutation::from_word_unchecked(word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{stat, tail_pairs, PatternClass};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn exact_occurrence_examples() {
        let j = Jobs::new(2);
        assert_eq!(count_exact_occurrences(3, &p("1 2 3"), 1, j).unwrap(), 1);
        assert_eq!(count_exact_occurrences(5, &p("1 3 2"), 1, j).unwrap(), 21);
        // avoiders of 123 in S_5: Catalan(5)
        assert_eq!(count_exact_occurrences(5, &p("1 2 3"), 0, j).unwrap(), 42);
        assert!(count_exact_occurrences(9, &p("1 2 3"), 1, j).is_err());
    }

    #[test]
    fn forward_n3() {
        let id = Permutation::identity(3);
        let t = Tunnel { left_x: 1, right_x: 5, height: 1 };
        assert_eq!(prop9_forward(&id, &t).unwrap(), p("1 3 2"));
        let outer = Tunnel { left_x: 0, right_x: 6, height: 0 };
        assert!(matches!(prop9_forward(&id, &outer), Err(Error::InvalidTunnel(_))));
        let bogus = Tunnel { left_x: 0, right_x: 4, height: 1 };
        assert!(prop9_forward(&id, &bogus).is_err());
        assert!(prop9_forward(&p("1 3 2"), &t).is_err());
    }

    #[test]
    fn forward_drawn_example() {
        // boundary UUDDUDUUUDUDDD; the up-step at x=7 pairs with the down-step ending at x=13
        let pi = p("5 4 6 7 3 1 2");
        let path = boundary_path(&pi).unwrap();
        let t = Tunnel { left_x: 7, right_x: 13, height: 1 };
        assert_eq!(tunnel_cell(&path, &t), (3, 6));
        let sigma = prop9_forward(&pi, &t).unwrap();
        assert_eq!(sigma, p("5 4 7 6 3 1 2"));
        let d = build_diagram(&sigma);
        assert_eq!(d.rank_at(3, 6), Some(2));
        assert_eq!(stat(&sigma, PatternClass::a(3).unwrap()), 1);
    }

    #[test]
    fn thomas_examples() {
        assert_eq!(thomas_pairs(&p("1 3 2")).unwrap(), vec![TailPair::new(2, 3)]);
        assert!(thomas_pairs(&p("3 1 2")).unwrap().is_empty());
        assert!(thomas_pairs(&Permutation::reversal(6)).unwrap().is_empty());
        assert!(matches!(thomas_pairs(&p("1 2 3")), Err(Error::NotAvoiding { .. })));

        let pi = thomas_map(&p("1 3 2"), TailPair::new(2, 3)).unwrap();
        assert_eq!(pi, p("1 2 3"));
        assert_eq!(tail_pairs(&pi, PatternClass::b(3).unwrap()), vec![TailPair::new(2, 3)]);
        assert!(matches!(
            thomas_map(&p("1 3 2"), TailPair::new(1, 2)),
            Err(Error::InvalidPair(1, 2))
        ));
    }
}
