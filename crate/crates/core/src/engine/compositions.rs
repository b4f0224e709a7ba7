use std::ops::Deref;

/// One composition `(i_1, ..., i_k)` of a fixed total: how many copies of each
/// chosen type appear in the draw.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector(Vec<u64>);

impl CountVector {
    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Deref for CountVector {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

/// Lexicographic enumeration of all length-`k` vectors with components in
/// `lo..=hi` summing to `total`.
#[derive(Debug, Clone)]
pub struct Compositions {
    parts: Vec<u64>,
    total: u64,
    lo: u64,
    hi: u64,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Compositions {
    pub fn new(k: usize, total: u64, lo: u64, hi: u64) -> Self {
        Self {
            parts: vec![0; k],
            total,
            lo,
            hi,
            state: State::Fresh,
        }
    }

    fn feasible(&self, slots: usize, remaining: u64) -> bool {
        let slots = slots as u64;
        slots.saturating_mul(self.lo) <= remaining && remaining <= slots.saturating_mul(self.hi)
    }

    /// Writes the lexicographically smallest tail starting at `from`.
    fn fill_min(&mut self, from: usize, mut remaining: u64) {
        let k = self.parts.len();
        for i in from..k {
            let after = (k - i - 1) as u64;
            let v = self
                .lo
                .max(remaining.saturating_sub(after.saturating_mul(self.hi)));
            self.parts[i] = v;
            remaining -= v;
        }
    }

    fn advance(&mut self) -> bool {
        let k = self.parts.len();
        if k < 2 {
            return false;
        }
        let mut prefix: u64 = self.parts[..k - 1].iter().sum();
        for i in (0..k - 1).rev() {
            prefix -= self.parts[i];
            let v = self.parts[i] + 1;
            if v > self.hi || prefix + v > self.total {
                continue;
            }
            let remaining = self.total - prefix - v;
            if self.feasible(k - 1 - i, remaining) {
                self.parts[i] = v;
                self.fill_min(i + 1, remaining);
                return true;
            }
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = CountVector;

    fn next(&mut self) -> Option<CountVector> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                if self.lo > self.hi || !self.feasible(self.parts.len(), self.total) {
                    self.state = State::Done;
                    return None;
                }
                self.fill_min(0, self.total);
                self.state = State::Running;
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(CountVector(self.parts.clone()))
    }
}

/// Number of vectors [`Compositions::new`] would yield, saturating at
/// `u64::MAX`.
pub fn count_bounded_compositions(k: usize, total: u64, lo: u64, hi: u64) -> u64 {
    if lo > hi {
        return 0;
    }
    let slots = k as u64;
    if slots.saturating_mul(lo) > total || total > slots.saturating_mul(hi) {
        return 0;
    }
    // Shift to components in 0..=width summing to total - k*lo.
    let target = (total - slots * lo) as usize;
    let width = (hi - lo).min(target as u64) as usize;
    let mut ways = vec![0u64; target + 1];
    ways[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; target + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            let mut acc = 0u64;
            for v in 0..=width.min(t) {
                acc = acc.saturating_add(ways[t - v]);
            }
            *slot = acc;
        }
        ways = next;
    }
    ways[target]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(k: usize, total: u64, lo: u64, hi: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = vec![lo; k];
        if lo > hi {
            return out;
        }
        loop {
            if cur.iter().sum::<u64>() == total {
                out.push(cur.clone());
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi {
                    cur[i] += 1;
                    for c in &mut cur[i + 1..] {
                        *c = lo;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_in_order() {
        for k in 0..=4 {
            for lo in 0..=2 {
                for hi in lo..=4 {
                    for total in 0..=14 {
                        let got: Vec<Vec<u64>> = Compositions::new(k, total, lo, hi)
                            .map(|v| v.components().to_vec())
                            .collect();
                        let want = brute(k, total, lo, hi);
                        assert_eq!(got, want, "k={k} total={total} lo={lo} hi={hi}");
                        assert_eq!(
                            count_bounded_compositions(k, total, lo, hi),
                            want.len() as u64
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(Compositions::new(0, 0, 1, 3).count(), 1);
        assert_eq!(Compositions::new(0, 2, 1, 3).count(), 0);
        assert_eq!(Compositions::new(1, 0, 1, 3).count(), 0);
        assert_eq!(Compositions::new(3, 2, 1, 3).count(), 0);
        assert_eq!(Compositions::new(2, 5, 3, 2).count(), 0);
        assert_eq!(count_bounded_compositions(2, 5, 3, 2), 0);
    }

    #[test]
    fn counting_saturates() {
        assert_eq!(count_bounded_compositions(50, 200, 1, 499), u64::MAX);
    }
}
