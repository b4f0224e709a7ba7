//! Ground-truth checks that never touch the counting formulas: exhaustive
//! enumeration of draws, and seeded Monte Carlo sampling.
//!
//! Both operate on labeled positions `0..n(n-1)`. Position `p` belongs to type
//! `p / (n-1)`, and types `0..y` are the designated ones. By symmetry the
//! choice of which `y` types are designated does not matter.

mod exhaustive;
mod montecarlo;

pub use exhaustive::{pvalue_exhaustive, tail_count_exhaustive};
pub use montecarlo::{pvalue_montecarlo, MonteCarloEstimate};
