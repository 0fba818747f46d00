//! Ranked permutation diagrams, the pattern-tail statistics `a_m` and `b_m`,
//! the involution `phi_m` exchanging them, and Dyck path tunnels.

pub mod diagram;
pub mod dyck;
mod error;
pub mod involution;
pub mod lab;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{PatternClass, PatternKind, Permutation, TailPair};
