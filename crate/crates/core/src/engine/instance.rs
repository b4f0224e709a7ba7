use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("n must be at least 2 (got n = {0})")]
    TooFewTypes(u64),
    #[error("x must not exceed n(n-1) = {max} (got x = {x})")]
    DrawTooLarge { x: u64, max: u64 },
    #[error("y must not exceed n = {n} (got y = {y})")]
    TooManyDesignated { y: u64, n: u64 },
    #[error("n = {0} is too large: n(n-1) overflows")]
    Overflow(u64),
}

/// Parameters `(n, x, y, z)` of one tail query.
///
/// `z` above `min(x, y)` is allowed; the probability is then zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ProblemInstance {
    n: u64,
    x: u64,
    y: u64,
    z: u64,
}

impl ProblemInstance {
    pub fn new(n: u64, x: u64, y: u64, z: u64) -> Result<Self, InstanceError> {
        if n < 2 {
            return Err(InstanceError::TooFewTypes(n));
        }
        let positions = n.checked_mul(n - 1).ok_or(InstanceError::Overflow(n))?;
        // Keep n(n-1) * n representable for the remainder-pool products.
        if positions.checked_mul(n).is_none() || positions > i64::MAX as u64 {
            return Err(InstanceError::Overflow(n));
        }
        if x > positions {
            return Err(InstanceError::DrawTooLarge { x, max: positions });
        }
        if y > n {
            return Err(InstanceError::TooManyDesignated { y, n });
        }
        Ok(Self { n, x, y, z })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    /// Size of the multiset, `n(n-1)`.
    pub fn positions(&self) -> u64 {
        self.n * (self.n - 1)
    }

    /// Copies of each type, `n - 1`.
    pub fn copies(&self) -> u64 {
        self.n - 1
    }

    /// Largest attainable count of designated types, `min(x, y)`.
    pub fn max_found(&self) -> u64 {
        self.x.min(self.y)
    }

    pub fn with_z(self, z: u64) -> Self {
        Self { z, ..self }
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} x={} y={} z={}", self.n, self.x, self.y, self.z)
    }
}

/// How many types feed the positions not taken by found designated types.
///
/// `PaperFaithful` uses `n - min(x, y)` types, as in the originally published
/// formula. `Corrected` uses `n - y`, which excludes designated types that
/// must stay absent. The two agree whenever `x >= y`. For `x < y` the
/// published variant can count more subsets than exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RemainderPoolMode {
    #[serde(rename = "paper")]
    PaperFaithful,
    #[default]
    Corrected,
}

impl RemainderPoolMode {
    pub const ALL: [RemainderPoolMode; 2] = [
        RemainderPoolMode::PaperFaithful,
        RemainderPoolMode::Corrected,
    ];

    /// Number of element types in the remainder pool.
    pub fn pool_types(self, inst: &ProblemInstance) -> u64 {
        match self {
            RemainderPoolMode::PaperFaithful => inst.n() - inst.max_found(),
            RemainderPoolMode::Corrected => inst.n() - inst.y(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RemainderPoolMode::PaperFaithful => "paper",
            RemainderPoolMode::Corrected => "corrected",
        }
    }
}

impl fmt::Display for RemainderPoolMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RemainderPoolMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" | "paper-faithful" => Ok(RemainderPoolMode::PaperFaithful),
            "corrected" => Ok(RemainderPoolMode::Corrected),
            other => Err(format!(
                "unknown remainder mode `{other}` (expected `corrected` or `paper`)"
            )),
        }
    }
}
