use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::compositions::{count_bounded_compositions, Compositions};
use crate::budget::{Budget, BudgetExceeded};
use crate::combinatorics::binomial;

/// Sum of `prod_j C(n-1, i_j)` over length-`k` vectors of positive components
/// with total `s`, in closed form:
///
/// `C(k(n-1), s) + sum_{j=1}^{k-1} (-1)^j C(k, j) C((k-j)(n-1), s)`.
///
/// The omitted `j = k` term is `(-1)^k C(0, s)`, nonzero only at `s = 0`,
/// where the result is zero because no positive vector sums to zero.
///
/// # Panics
///
/// If `k == 0` or `n < 2`.
pub fn inner_sum_closed(k: u64, s: u64, n: u64) -> BigUint {
    assert!(k >= 1, "inner sum needs at least one component");
    assert!(n >= 2, "inner sum needs n >= 2");
    if s == 0 {
        return BigUint::zero();
    }
    let copies = n - 1;
    let s = s as i64;
    let mut acc = BigInt::zero();
    for j in 0..k {
        let term = binomial(k, j as i64) * binomial((k - j) * copies, s);
        if j % 2 == 0 {
            acc += BigInt::from(term);
        } else {
            acc -= BigInt::from(term);
        }
    }
    match acc.into_parts() {
        (Sign::Minus, _) => unreachable!("inclusion-exclusion count is nonnegative"),
        (_, magnitude) => magnitude,
    }
}

/// Same sum as [`inner_sum_closed`], by visiting every count vector.
///
/// With `components_from_zero` the components range over `0..=n-1` instead of
/// `1..=n-1`, and the result equals `C(k(n-1), s)`.
///
/// # Panics
///
/// If `k == 0` or `n < 2`.
pub fn inner_sum_enumerated(
    k: u64,
    s: u64,
    n: u64,
    components_from_zero: bool,
    budget: Budget,
) -> Result<BigUint, BudgetExceeded> {
    assert!(k >= 1, "inner sum needs at least one component");
    assert!(n >= 2, "inner sum needs n >= 2");
    let lo = if components_from_zero { 0 } else { 1 };
    let hi = n - 1;
    budget.check(
        "count-vector enumeration",
        count_bounded_compositions(k as usize, s, lo, hi),
    )?;
    Ok(enumerate_inner(k, s, lo, hi))
}

/// Unchecked enumeration; callers account for the budget.
pub(crate) fn enumerate_inner(k: u64, s: u64, lo: u64, hi: u64) -> BigUint {
    let row: Vec<BigUint> = (0..=hi).map(|i| binomial(hi, i as i64)).collect();
    let mut acc = BigUint::zero();
    for vector in Compositions::new(k as usize, s, lo, hi) {
        let mut product = BigUint::one();
        for &i in vector.components() {
            product *= &row[i as usize];
        }
        acc += product;
    }
    acc
}

/// Left-hand side of the generalized Vandermonde identity,
///
/// `sum_{k_1..k_{f-1} = 0..=n} C(n, k_1) ... C(n, k_{f-1}) C(n, x - sum k_j)`
///
/// with `f = factor_count`, by visiting all `(n+1)^(f-1)` free index tuples.
/// Equals `C(f * n, x)`.
///
/// # Panics
///
/// If `factor_count == 0`.
pub fn generalized_vandermonde_lhs(
    n: u64,
    factor_count: u64,
    x: u64,
    budget: Budget,
) -> Result<BigUint, BudgetExceeded> {
    assert!(factor_count >= 1, "identity needs at least one factor");
    let free = (factor_count - 1) as usize;
    let visits = u32::try_from(free)
        .ok()
        .and_then(|free| (n + 1).checked_pow(free))
        .unwrap_or(u64::MAX);
    budget.check("Vandermonde index enumeration", visits)?;

    let mut indices = vec![0u64; free];
    let mut acc = BigUint::zero();
    loop {
        let used: u64 = indices.iter().sum();
        let last = x as i64 - used as i64;
        let tail = binomial(n, last);
        if !tail.is_zero() {
            let mut product = tail;
            for &k in &indices {
                product *= binomial(n, k as i64);
            }
            acc += product;
        }
        // Odometer step.
        let mut pos = free;
        loop {
            if pos == 0 {
                return Ok(acc);
            }
            pos -= 1;
            if indices[pos] < n {
                indices[pos] += 1;
                break;
            }
            indices[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Product of binomials over every vector in `lo..=hi`^k with the given
    /// total, without any pruning.
    fn oracle_inner(k: u32, s: u64, n: u64, lo: u64) -> BigUint {
        let hi = n - 1;
        let width = hi - lo + 1;
        let mut acc = BigUint::zero();
        for code in 0..width.pow(k) {
            let mut c = code;
            let mut total = 0;
            let mut product = BigUint::one();
            for _ in 0..k {
                let i = lo + c % width;
                c /= width;
                total += i;
                product *= binomial(hi, i as i64);
            }
            if total == s {
                acc += product;
            }
        }
        acc
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(inner_sum_closed(1, 3, 5), big(4));
        assert_eq!(inner_sum_closed(2, 2, 3), big(4));
        assert_eq!(inner_sum_closed(2, 3, 3), big(4));
        assert_eq!(inner_sum_closed(3, 2, 4), big(0));
        assert_eq!(inner_sum_closed(3, 0, 4), big(0));
    }

    #[test]
    fn enumerated_examples() {
        let b = Budget::DEFAULT;
        assert_eq!(inner_sum_enumerated(2, 2, 3, false, b).unwrap(), big(4));
        assert_eq!(inner_sum_enumerated(2, 2, 3, true, b).unwrap(), big(6));
        assert_eq!(inner_sum_enumerated(1, 0, 4, false, b).unwrap(), big(0));
        assert_eq!(inner_sum_enumerated(3, 2, 4, false, b).unwrap(), big(0));
    }

    #[test]
    fn enumerated_matches_unpruned_oracle() {
        for k in 1..=3u32 {
            for n in 2..=5 {
                for s in 0..=(k as u64 * (n - 1) + 1) {
                    for lo in 0..=1 {
                        assert_eq!(
                            inner_sum_enumerated(k as u64, s, n, lo == 0, Budget::DEFAULT).unwrap(),
                            oracle_inner(k, s, n, lo),
                            "k={k} s={s} n={n} lo={lo}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn from_zero_collapses_to_single_binomial() {
        for k in 1..=4 {
            for n in 2..=6 {
                for s in 0..=(k * (n - 1) + 2) {
                    assert_eq!(
                        inner_sum_enumerated(k, s, n, true, Budget::DEFAULT).unwrap(),
                        binomial(k * (n - 1), s as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn closed_equals_enumerated() {
        for k in 1..=6 {
            for n in 2..=8 {
                for s in 0..=20 {
                    assert_eq!(
                        inner_sum_closed(k, s, n),
                        inner_sum_enumerated(k, s, n, false, Budget::DEFAULT).unwrap(),
                        "k={k} s={s} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_respects_budget() {
        let err = inner_sum_enumerated(4, 8, 5, false, Budget(10)).unwrap_err();
        assert_eq!(err.budget, 10);
        assert!(err.required > 10);
    }

    #[test]
    fn vandermonde_examples() {
        let b = Budget::DEFAULT;
        assert_eq!(generalized_vandermonde_lhs(2, 2, 2, b).unwrap(), big(6));
        assert_eq!(generalized_vandermonde_lhs(3, 3, 4, b).unwrap(), big(126));
        assert_eq!(generalized_vandermonde_lhs(2, 1, 5, b).unwrap(), big(0));
        assert!(generalized_vandermonde_lhs(10, 12, 5, Budget(1000)).is_err());
    }

    #[test]
    fn vandermonde_identity_grid() {
        for f in 1..=4 {
            for n in 0..=6 {
                for x in 0..=f * n {
                    assert_eq!(
                        generalized_vandermonde_lhs(n, f, x, Budget::DEFAULT).unwrap(),
                        binomial(f * n, x as i64),
                        "f={f} n={n} x={x}"
                    );
                }
            }
        }
    }

    /// The rejected shortcut `k * sum over (k-1)-vectors from zero` for the
    /// count of vectors having a zero component.
    fn rejected_difference(k: u64, s: u64, n: u64) -> BigUint {
        big(k) * inner_sum_enumerated(k - 1, s, n, true, Budget::DEFAULT).unwrap()
    }

    #[test]
    fn single_subtraction_overcounts() {
        let mut witness = None;
        'search: for k in 2..=4 {
            for n in 2..=5 {
                // s = 0 is a trivial witness: the all-zero vector is subtracted k times.
                for s in 1..=8 {
                    let from_zero = inner_sum_enumerated(k, s, n, true, Budget::DEFAULT).unwrap();
                    let from_one = inner_sum_enumerated(k, s, n, false, Budget::DEFAULT).unwrap();
                    if rejected_difference(k, s, n) != from_zero - from_one {
                        witness = Some((k, s, n));
                        break 'search;
                    }
                }
            }
        }
        let (k, s, n) = witness.expect("a witness exists in the searched range");
        assert!(k >= 2);
        // First witness in search order: three components, total one, n = 2.
        assert_eq!((k, s, n), (3, 1, 2));
        let true_difference = inner_sum_enumerated(k, s, n, true, Budget::DEFAULT).unwrap()
            - inner_sum_enumerated(k, s, n, false, Budget::DEFAULT).unwrap();
        assert_eq!(true_difference, big(3));
        assert_eq!(rejected_difference(k, s, n), big(6));
    }
}
