//! Exhaustive enumeration, count tables, closed forms and the bijections
//! behind the `a_3 = 1` / `b_3 = 1` counts.

mod bijections;
mod fixed_points;
mod formula;
mod sweep;
mod table;
pub mod verify;

pub use bijections::{
    count_exact_occurrences, prop9_forward, thomas_map, thomas_pairs, tunnel_cell,
    MAX_OCCURRENCE_COUNT_N,
};
pub use fixed_points::{fixed_point_report, FixedPointReport};
pub use formula::{binomial, formula, Formula};
pub use sweep::{factorial, filter_permutations, fold_permutations, unrank, Jobs, MAX_SWEEP_N};
pub use table::{distribution, CountRow, CountTable};
