//! Arbitrary-precision combinatorics primitives shared by every counting path.

mod binomial;
mod rational;

pub use binomial::{binomial, BinomialProvider};
pub use rational::{make_rational, ExactRational, ZeroDenominator};
