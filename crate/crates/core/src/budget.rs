use std::fmt;

use thiserror::Error;

/// Cap on the number of items an enumerating path may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(100_000_000);

    pub fn limit(self) -> u64 {
        self.0
    }

    /// Fails unless `required` visits fit.
    pub fn check(self, what: &'static str, required: u64) -> Result<(), BudgetExceeded> {
        if required > self.0 {
            Err(BudgetExceeded {
                what,
                required,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An enumeration would visit more items than its [`Budget`] allows.
///
/// `required` saturates at `u64::MAX`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub required: u64,
    pub budget: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "enumeration budget exceeded: {} needs ", self.what)?;
        if self.required == u64::MAX {
            write!(f, "more than {} visits", u64::MAX - 1)?;
        } else {
            write!(f, "{} visits", self.required)?;
        }
        write!(f, ", budget is {} (raise it with --budget)", self.budget)
    }
}
