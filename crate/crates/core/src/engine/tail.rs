use num_bigint::BigUint;
use num_traits::Zero;

use super::compositions::count_bounded_compositions;
use super::inner::{enumerate_inner, inner_sum_closed};
use super::instance::{ProblemInstance, RemainderPoolMode};
use crate::budget::{Budget, BudgetExceeded};
use crate::combinatorics::{binomial, ExactRational};

/// Unreduced tail probability: favorable draws over all `C(n(n-1), x)` draws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCount {
    pub favorable: BigUint,
    pub total: BigUint,
}

impl TailCount {
    pub fn probability(&self) -> ExactRational {
        ExactRational::from_counts(&self.favorable, &self.total)
            .expect("total count of draws is positive")
    }
}

fn total_draws(inst: &ProblemInstance) -> BigUint {
    binomial(inst.positions(), inst.x() as i64)
}

/// Resolves the `z = 0` and `z > min(x, y)` cases, which carry no count
/// vectors.
fn shortcut(inst: &ProblemInstance, total: &BigUint) -> Option<BigUint> {
    if inst.z() == 0 {
        Some(total.clone())
    } else if inst.z() > inst.max_found() {
        Some(BigUint::zero())
    } else {
        None
    }
}

/// Number of draws containing at least `z` designated types, via the
/// inclusion-exclusion closed form for the inner sum:
///
/// `sum_{k=z}^{min(x,y)} C(y, k) sum_{s=k}^{x} inner(k, s) C(R(n-1), x - s)`
///
/// where `R` is the remainder pool type count of `mode`.
///
/// # Panics
///
/// Unless `1 <= z <= min(x, y)`; [`tail_count_fast`] handles the rest.
pub fn favorable_count_fast(inst: &ProblemInstance, mode: RemainderPoolMode) -> BigUint {
    let (n, x, y, z) = (inst.n(), inst.x(), inst.y(), inst.z());
    let top = inst.max_found();
    assert!(
        1 <= z && z <= top,
        "favorable_count_fast needs 1 <= z <= min(x, y)"
    );
    let pool = mode.pool_types(inst) * inst.copies();

    let mut favorable = BigUint::zero();
    for k in z..=top {
        // inner(k, s) vanishes once s exceeds k(n-1).
        let s_max = x.min(k * inst.copies());
        let mut by_total = BigUint::zero();
        for s in k..=s_max {
            let rest = binomial(pool, (x - s) as i64);
            if rest.is_zero() {
                continue;
            }
            by_total += inner_sum_closed(k, s, n) * rest;
        }
        favorable += binomial(y, k as i64) * by_total;
    }
    favorable
}

pub fn tail_count_fast(inst: &ProblemInstance, mode: RemainderPoolMode) -> TailCount {
    let total = total_draws(inst);
    let favorable = shortcut(inst, &total).unwrap_or_else(|| favorable_count_fast(inst, mode));
    TailCount { favorable, total }
}

/// Exact probability that at least `z` of the `y` designated types appear
/// among `x` positions drawn without replacement.
pub fn pvalue_fast(inst: &ProblemInstance, mode: RemainderPoolMode) -> ExactRational {
    tail_count_fast(inst, mode).probability()
}

/// Count vectors the naive path visits for `inst`, saturating.
fn naive_visits(inst: &ProblemInstance) -> u64 {
    let mut visits = 0u64;
    for k in inst.z()..=inst.max_found() {
        for s in k..=inst.x() {
            visits =
                visits.saturating_add(count_bounded_compositions(k as usize, s, 1, inst.copies()));
        }
        if visits == u64::MAX {
            break;
        }
    }
    visits
}

/// Same count as [`favorable_count_fast`], visiting every count vector instead
/// of using the closed form. Fails before doing any work when the number of
/// vectors exceeds `budget`.
///
/// # Panics
///
/// Unless `1 <= z <= min(x, y)`.
pub fn favorable_count_naive(
    inst: &ProblemInstance,
    mode: RemainderPoolMode,
    budget: Budget,
) -> Result<BigUint, BudgetExceeded> {
    let (x, y, z) = (inst.x(), inst.y(), inst.z());
    let top = inst.max_found();
    assert!(
        1 <= z && z <= top,
        "favorable_count_naive needs 1 <= z <= min(x, y)"
    );
    budget.check("naive count-vector sum", naive_visits(inst))?;
    let pool = mode.pool_types(inst) * inst.copies();

    let mut favorable = BigUint::zero();
    for k in z..=top {
        let mut by_total = BigUint::zero();
        for s in k..=x {
            let inner = enumerate_inner(k, s, 1, inst.copies());
            by_total += inner * binomial(pool, (x - s) as i64);
        }
        favorable += binomial(y, k as i64) * by_total;
    }
    Ok(favorable)
}

pub fn tail_count_naive(
    inst: &ProblemInstance,
    mode: RemainderPoolMode,
    budget: Budget,
) -> Result<TailCount, BudgetExceeded> {
    let total = total_draws(inst);
    let favorable = match shortcut(inst, &total) {
        Some(f) => f,
        None => favorable_count_naive(inst, mode, budget)?,
    };
    Ok(TailCount { favorable, total })
}

pub fn pvalue_naive(
    inst: &ProblemInstance,
    mode: RemainderPoolMode,
    budget: Budget,
) -> Result<ExactRational, BudgetExceeded> {
    Ok(tail_count_naive(inst, mode, budget)?.probability())
}
