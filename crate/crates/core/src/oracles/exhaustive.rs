use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::budget::{Budget, BudgetExceeded};
use crate::combinatorics::{binomial, ExactRational};
use crate::engine::{ProblemInstance, TailCount};

/// Visits every `x`-subset of the positions and counts those showing at least
/// `z` distinct designated types. The total is the number of subsets visited.
pub fn tail_count_exhaustive(
    inst: &ProblemInstance,
    budget: Budget,
) -> Result<TailCount, BudgetExceeded> {
    let subsets = binomial(inst.positions(), inst.x() as i64)
        .to_u64()
        .unwrap_or(u64::MAX);
    budget.check("exhaustive subset enumeration", subsets)?;

    let positions = inst.positions() as usize;
    let x = inst.x() as usize;
    let copies = inst.copies() as usize;
    let designated_end = inst.y() as usize * copies;
    let z = inst.z() as usize;

    let mut chosen: Vec<usize> = (0..x).collect();
    let mut favorable = 0u64;
    let mut visited = 0u64;
    loop {
        visited += 1;
        // Chosen positions are sorted, so copies of one type are adjacent.
        let mut found = 0usize;
        let mut last_type = usize::MAX;
        for &p in chosen.iter().take_while(|&&p| p < designated_end) {
            let t = p / copies;
            if t != last_type {
                found += 1;
                last_type = t;
            }
        }
        if found >= z {
            favorable += 1;
        }

        // Next combination in lexicographic order.
        let Some(i) = (0..x).rev().find(|&i| chosen[i] < positions - x + i) else {
            break;
        };
        chosen[i] += 1;
        for j in i + 1..x {
            chosen[j] = chosen[j - 1] + 1;
        }
    }

    Ok(TailCount {
        favorable: BigUint::from(favorable),
        total: BigUint::from(visited),
    })
}

pub fn pvalue_exhaustive(
    inst: &ProblemInstance,
    budget: Budget,
) -> Result<ExactRational, BudgetExceeded> {
    Ok(tail_count_exhaustive(inst, budget)?.probability())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::make_rational;

    fn inst(n: u64, x: u64, y: u64, z: u64) -> ProblemInstance {
        ProblemInstance::new(n, x, y, z).unwrap()
    }

    #[test]
    fn examples() {
        let b = Budget::DEFAULT;
        let count = tail_count_exhaustive(&inst(3, 2, 1, 1), b).unwrap();
        assert_eq!(count.favorable, BigUint::from(9u32));
        assert_eq!(count.total, BigUint::from(15u32));
        assert_eq!(
            pvalue_exhaustive(&inst(2, 2, 1, 1), b).unwrap(),
            make_rational(1, 1).unwrap()
        );
        let count = tail_count_exhaustive(&inst(4, 2, 3, 1), b).unwrap();
        assert_eq!(
            (count.favorable, count.total),
            (BigUint::from(63u32), BigUint::from(66u32))
        );
    }

    #[test]
    fn empty_draw() {
        let b = Budget::DEFAULT;
        assert!(pvalue_exhaustive(&inst(3, 0, 2, 0), b).unwrap().is_one());
        assert!(pvalue_exhaustive(&inst(3, 0, 2, 1), b).unwrap().is_zero());
    }

    #[test]
    fn visits_every_subset() {
        for x in 0..=12 {
            let count = tail_count_exhaustive(&inst(4, x, 0, 0), Budget::DEFAULT).unwrap();
            assert_eq!(count.total, binomial(12, x as i64));
            assert_eq!(count.favorable, count.total);
        }
    }

    #[test]
    fn budget_enforced() {
        let err = tail_count_exhaustive(&inst(8, 28, 3, 1), Budget(1000)).unwrap_err();
        assert_eq!(err.budget, 1000);
        assert!(err.required > 1000);
    }
}
