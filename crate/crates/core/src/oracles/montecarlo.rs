use std::num::NonZeroU64;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::ExactRational;
use crate::engine::ProblemInstance;

/// Sampled tail probability. Equal inputs give bit-identical records.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub estimate: ExactRational,
    pub hits: u64,
    pub samples: u64,
    /// `sqrt(p (1 - p) / samples)` at the estimated `p`.
    pub standard_error: f64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    /// Whether `exact` lies within `k` standard errors of the estimate.
    pub fn within(&self, exact: &ExactRational, k: f64) -> bool {
        self.estimate.abs_diff(exact).to_f64() <= k * self.standard_error
    }
}

/// Draws `samples` uniform `x`-subsets with a ChaCha8 generator seeded from
/// `seed` and reports the fraction showing at least `z` designated types.
pub fn pvalue_montecarlo(
    inst: &ProblemInstance,
    samples: NonZeroU64,
    seed: u64,
) -> MonteCarloEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions = inst.positions() as usize;
    let x = inst.x() as usize;
    let copies = inst.copies() as usize;
    let designated_end = inst.y() as usize * copies;
    let z = inst.z() as usize;

    // Per-type stamp of the last sample that saw it.
    let mut seen = vec![0u64; inst.y() as usize];
    let mut hits = 0u64;
    for round in 1..=samples.get() {
        let mut found = 0usize;
        for p in rand::seq::index::sample(&mut rng, positions, x) {
            if p < designated_end {
                let t = p / copies;
                if seen[t] != round {
                    seen[t] = round;
                    found += 1;
                }
            }
        }
        if found >= z {
            hits += 1;
        }
    }

    let samples = samples.get();
    let p = hits as f64 / samples as f64;
    MonteCarloEstimate {
        estimate: ExactRational::new(hits.into(), samples.into()).expect("samples is nonzero"),
        hits,
        samples,
        standard_error: (p * (1.0 - p) / samples as f64).sqrt(),
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::make_rational;

    fn inst(n: u64, x: u64, y: u64, z: u64) -> ProblemInstance {
        ProblemInstance::new(n, x, y, z).unwrap()
    }

    fn samples(v: u64) -> NonZeroU64 {
        NonZeroU64::new(v).unwrap()
    }

    #[test]
    fn zero_threshold_always_hits() {
        let est = pvalue_montecarlo(&inst(5, 7, 3, 0), samples(10), 99);
        assert!(est.estimate.is_one());
        assert_eq!(est.standard_error, 0.0);
    }

    #[test]
    fn close_to_exact() {
        let est = pvalue_montecarlo(&inst(3, 2, 1, 1), samples(100_000), 7);
        assert!(est.within(&make_rational(3, 5).unwrap(), 4.0), "{est:?}");
        let est = pvalue_montecarlo(&inst(3, 1, 1, 1), samples(100_000), 7);
        assert!(est.within(&make_rational(1, 3).unwrap(), 4.0), "{est:?}");
    }

    #[test]
    fn deterministic_per_seed() {
        let a = pvalue_montecarlo(&inst(6, 9, 3, 2), samples(5000), 1234);
        let b = pvalue_montecarlo(&inst(6, 9, 3, 2), samples(5000), 1234);
        assert_eq!(a, b);
        assert_eq!(a.standard_error.to_bits(), b.standard_error.to_bits());
        let c = pvalue_montecarlo(&inst(6, 9, 3, 2), samples(5000), 1235);
        assert_ne!(a.hits, c.hits);
    }

    #[test]
    fn hits_bounded_by_samples() {
        let est = pvalue_montecarlo(&inst(4, 3, 2, 1), samples(321), 5);
        assert!(est.hits <= est.samples);
        assert_eq!(est.samples, 321);
        assert!(est.estimate.is_probability());
    }
}
