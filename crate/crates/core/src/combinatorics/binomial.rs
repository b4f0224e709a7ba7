use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Lower indices above this are computed directly instead of being cached as
/// part of a row prefix. Rows store every coefficient up to the requested
/// lower index, so an unbounded prefix on a large upper index would hold
/// gigabytes of digits.
const ROW_PREFIX_LIMIT: u64 = 512;

/// Memoizing source of binomial coefficients.
///
/// Coefficients are cached as row prefixes `C(a, 0..=b)` keyed by the upper
/// index, since the tail formula queries many lower indices against a shared
/// upper index. The cache is never observable: every query returns exactly
/// the value a cache-free evaluation would.
#[derive(Debug, Default)]
pub struct BinomialProvider {
    rows: Mutex<HashMap<u64, Vec<BigUint>>>,
}

impl BinomialProvider {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide provider used by the free functions of this crate.
    pub fn global() -> &'static BinomialProvider {
        static GLOBAL: OnceLock<BinomialProvider> = OnceLock::new();
        GLOBAL.get_or_init(BinomialProvider::new)
    }

    /// `C(a, b)`, with the convention that the coefficient is zero whenever
    /// `b < 0` or `b > a`.
    pub fn binomial(&self, a: u64, b: i64) -> BigUint {
        if b < 0 || b as u64 > a {
            return BigUint::zero();
        }
        let b = (b as u64).min(a - b as u64);
        if b == 0 {
            return BigUint::one();
        }
        if b > ROW_PREFIX_LIMIT {
            return binomial_multiplicative(a, b);
        }

        let mut rows = self.rows.lock().unwrap_or_else(|e| e.into_inner());
        let row = rows.entry(a).or_insert_with(|| vec![BigUint::one()]);
        while (row.len() as u64) <= b {
            let j = row.len() as u64;
            // C(a, j) = C(a, j-1) * (a - j + 1) / j, exact at every step.
            let next = row[row.len() - 1].clone() * (a - j + 1) / j;
            row.push(next);
        }
        row[b as usize].clone()
    }

    /// Number of upper indices with a cached row.
    pub fn cached_rows(&self) -> usize {
        self.rows.lock().unwrap_or_else(|e| e.into_inner()).len()
    }
}

fn binomial_multiplicative(a: u64, b: u64) -> BigUint {
    let mut acc = BigUint::one();
    for j in 1..=b {
        acc = acc * (a - j + 1) / j;
    }
    acc
}

/// `C(a, b)` through the process-wide [`BinomialProvider`].
pub fn binomial(a: u64, b: i64) -> BigUint {
    BinomialProvider::global().binomial(a, b)
}
