//! Exact tail probabilities for the occurrence-in-subtuple problem.
//!
//! A multiset holds `n` element types, each occurring `n - 1` times. Drawing
//! `x` items without replacement, how likely is it that at least `z` of `y`
//! designated types show up? This crate answers with an exact rational, using
//! an inclusion-exclusion closed form as the production path and several
//! slower, independent counting routes as oracles.
//!
//! ```
//! use subtuple_core::{pvalue_fast, ProblemInstance, RemainderPoolMode};
//!
//! let inst = ProblemInstance::new(3, 2, 1, 1).unwrap();
//! assert_eq!(pvalue_fast(&inst, RemainderPoolMode::Corrected).to_string(), "3/5");
//! ```

pub mod budget;
pub mod combinatorics;
pub mod engine;
pub mod ingest;
pub mod oracles;
pub mod report;

pub use budget::{Budget, BudgetExceeded};
pub use combinatorics::{
    binomial, make_rational, BinomialProvider, ExactRational, ZeroDenominator,
};
pub use engine::{
    favorable_count_fast, generalized_vandermonde_lhs, inner_sum_closed, inner_sum_enumerated,
    pvalue_fast, pvalue_naive, tail_count_fast, tail_count_naive, CountVector, InstanceError,
    ProblemInstance, RemainderPoolMode, TailCount,
};
pub use ingest::{
    derive_instance, parse_edge_list, DerivePolicy, Derived, IngestError, RegulatoryNetworkInput,
};
pub use oracles::{
    pvalue_exhaustive, pvalue_montecarlo, tail_count_exhaustive, MonteCarloEstimate,
};
pub use report::{ComputationMode, PValueReport, Provenance};
