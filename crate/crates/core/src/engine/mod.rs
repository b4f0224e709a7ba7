//! Counting formulas for the occurrence-in-subtuple tail probability.
//!
//! The multiset holds `n` element types with `n - 1` copies each. Drawing `x`
//! of its `n(n-1)` positions uniformly at random, [`pvalue_fast`] returns the
//! exact probability that at least `z` of `y` designated types appear. It
//! collapses the sum over count vectors with an inclusion-exclusion closed form
//! and runs in `O(min(x, y) * x^2)` big-integer operations. [`pvalue_naive`]
//! evaluates the same expression by enumerating count vectors and exists to
//! cross-check the closed form.

mod compositions;
mod inner;
mod instance;
mod tail;

pub use compositions::{count_bounded_compositions, Compositions, CountVector};
pub use inner::{generalized_vandermonde_lhs, inner_sum_closed, inner_sum_enumerated};
pub use instance::{InstanceError, ProblemInstance, RemainderPoolMode};
pub use tail::{
    favorable_count_fast, favorable_count_naive, pvalue_fast, pvalue_naive, tail_count_fast,
    tail_count_naive, TailCount,
};
