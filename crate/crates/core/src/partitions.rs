//! Brute-force partition enumeration and the excludant statistics.
//!
//! This is the oracle side of every identity check, so nothing here touches
//! the series engine. Enumeration is exhaustive and only intended for small
//! weights: all partitions up to about 35, distinct-part partitions up to
//! about 60.

use num_bigint::BigInt;
use num_traits::Zero;

/// A partition stored as a non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
    distinct: bool,
}

impl Partition {
    /// Sorts `parts` into non-increasing order. Returns `None` when a part is
    /// zero or when `distinct` is requested but a part repeats.
    pub fn new(mut parts: Vec<u64>, distinct: bool) -> Option<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.contains(&0) {
            return None;
        }
        if distinct && parts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Partition { parts, distinct })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            distinct: true,
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> Option<u64> {
        self.parts.last().copied()
    }

    /// Least positive integer that is not a part.
    pub fn mex(&self) -> u64 {
        let mut m = 1;
        for &p in self.parts.iter().rev() {
            if p == m {
                m += 1;
            } else if p > m {
                break;
            }
        }
        m
    }

    /// Least odd positive integer that is not a part.
    pub fn moex(&self) -> u64 {
        let mut m = 1;
        for &p in self.parts.iter().rev() {
            if p == m {
                m += 2;
            } else if p > m {
                break;
            }
        }
        m
    }

    /// Largest non-negative integer below the largest part that is not a
    /// part; 0 for the empty partition.
    pub fn maex(&self) -> u64 {
        let Some(&largest) = self.parts.first() else {
            return 0;
        };
        let mut candidate = largest - 1;
        for &p in &self.parts[1..] {
            if p == candidate {
                // 0 is never a part, so this stops before underflow
                candidate -= 1;
            } else if p < candidate {
                break;
            }
        }
        candidate
    }

    pub fn stat(&self, kind: StatKind) -> u64 {
        match kind {
            StatKind::Mex => self.mex(),
            StatKind::Moex => self.moex(),
            StatKind::Maex => self.maex(),
            StatKind::Largest => self.largest(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatKind {
    Mex,
    Moex,
    Maex,
    Largest,
}

/// Counting predicates for [`refined_count_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedKind {
    /// `mex(π) = index`
    MexEq,
    /// `mex(π) > index`
    MexGt,
    /// smallest part `> index` (the empty partition qualifies)
    SmallestGt,
    /// `mex(π)` odd; index ignored
    OddMex,
}

/// Streams the partitions of `n` in reverse-lexicographic order.
///
/// Only the current partition is held in memory. `n = 0` yields the empty
/// partition exactly once.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Vec<u64>,
    distinct: bool,
    started: bool,
    done: bool,
}

pub fn enum_partitions(n: u64, distinct_only: bool) -> Partitions {
    Partitions {
        current: if n == 0 { Vec::new() } else { vec![n] },
        distinct: distinct_only,
        started: false,
        done: false,
    }
}

impl Partitions {
    fn fill(&mut self, mut remaining: u64, mut cap: u64) {
        while remaining > 0 {
            let part = remaining.min(cap);
            self.current.push(part);
            remaining -= part;
            if self.distinct {
                cap = part - 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        let mut remaining = 0;
        while let Some(v) = self.current.pop() {
            remaining += v;
            if v == 1 {
                continue;
            }
            let lowered = v - 1;
            let rest = remaining - lowered;
            let cap = if self.distinct { lowered - 1 } else { lowered };
            let fits = !self.distinct || rest <= cap * (cap + 1) / 2;
            if fits {
                self.current.push(lowered);
                self.fill(rest, cap);
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Partition {
            parts: self.current.clone(),
            distinct: self.distinct,
        })
    }
}

/// Sum of `kind` over all partitions of `n` (distinct-part ones only when
/// `distinct_only`).
pub fn stat_sum_oracle(kind: StatKind, n: u64, distinct_only: bool) -> BigInt {
    let total: u64 = enum_partitions(n, distinct_only).map(|p| p.stat(kind)).sum();
    BigInt::from(total)
}

/// Number of partitions of `n` satisfying the predicate `kind` at `index`.
pub fn refined_count_oracle(kind: RefinedKind, index: u64, n: u64, distinct_only: bool) -> BigInt {
    let count = enum_partitions(n, distinct_only)
        .filter(|p| match kind {
            RefinedKind::MexEq => p.mex() == index,
            RefinedKind::MexGt => p.mex() > index,
            RefinedKind::SmallestGt => p.smallest().is_none_or(|s| s > index),
            RefinedKind::OddMex => p.mex() % 2 == 1,
        })
        .count();
    BigInt::from(count)
}

/// Number of ordered pairs `(λ, μ)` of distinct-part partitions with
/// `|λ| + |μ| = n`.
pub fn two_colored_distinct_count(n: u64) -> BigInt {
    let counts: Vec<u64> = (0..=n).map(|k| enum_partitions(k, true).count() as u64).collect();
    (0..=n as usize).fold(BigInt::zero(), |acc, k| {
        acc + BigInt::from(counts[k]) * BigInt::from(counts[n as usize - k])
    })
}

fn is_triangular(n: u64) -> bool {
    let k = ((2.0 * n as f64).sqrt()) as u64;
    (k.saturating_sub(1)..=k + 1).any(|k| k * (k + 1) / 2 == n)
}

/// Adds one to the largest part. Maps distinct partitions of `n` into
/// distinct partitions of `n + 1` whose two largest parts differ by at
/// least two.
pub fn bump_largest(p: &Partition) -> Partition {
    let mut parts = p.parts.clone();
    if let Some(first) = parts.first_mut() {
        *first += 1;
    } else {
        parts.push(1);
    }
    Partition {
        parts,
        distinct: p.distinct,
    }
}

/// The staircase `(k, k-1, ..., 1)` when `n` is triangular.
pub fn staircase(n: u64) -> Option<Partition> {
    if n == 0 || !is_triangular(n) {
        return None;
    }
    let k = (1..).find(|k| k * (k + 1) / 2 == n)?;
    Some(Partition {
        parts: (1..=k).rev().collect(),
        distinct: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec(), false).unwrap()
    }

    fn listing(n: u64, distinct: bool) -> Vec<Vec<u64>> {
        enum_partitions(n, distinct).map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(listing(3, true), vec![vec![3], vec![2, 1]]);
        assert_eq!(listing(0, true), vec![Vec::<u64>::new()]);
        assert_eq!(listing(0, false), vec![Vec::<u64>::new()]);
        assert_eq!(
            listing(4, false),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(listing(6, true), vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
        assert_eq!(enum_partitions(9, true).count(), 8);
    }

    #[test]
    fn enumeration_counts_and_order() {
        // p(n) and q(n) for n = 0..15
        let p_n = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];
        let q_n = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27];
        for n in 0..16u64 {
            assert_eq!(enum_partitions(n, false).count(), p_n[n as usize]);
            assert_eq!(enum_partitions(n, true).count(), q_n[n as usize]);
            for distinct in [false, true] {
                let all = listing(n, distinct);
                assert!(all.windows(2).all(|w| w[0] > w[1]), "not reverse-lex at n={n}");
                for parts in &all {
                    assert_eq!(parts.iter().sum::<u64>(), n);
                    if distinct {
                        assert!(parts.windows(2).all(|w| w[0] > w[1]));
                    } else {
                        assert!(parts.windows(2).all(|w| w[0] >= w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2, 1]).mex(), 3);
        assert_eq!(Partition::empty().mex(), 1);
        assert_eq!(p(&[8, 1]).mex(), 2);
        assert_eq!(p(&[1, 1, 1]).mex(), 2);

        assert_eq!(p(&[3, 1]).moex(), 5);
        assert_eq!(Partition::empty().moex(), 1);
        assert_eq!(p(&[2]).moex(), 1);

        assert_eq!(p(&[5]).maex(), 4);
        assert_eq!(p(&[2, 1]).maex(), 0);
        assert_eq!(p(&[4, 1]).maex(), 3);
        assert_eq!(p(&[3, 3, 1]).maex(), 2);
        assert_eq!(Partition::empty().maex(), 0);
        assert_eq!(Partition::empty().largest(), 0);
    }

    #[test]
    fn statistic_invariants() {
        for n in 0..=20 {
            for distinct in [false, true] {
                for pi in enum_partitions(n, distinct) {
                    let parts = pi.parts();
                    let m = pi.mex();
                    assert!(!parts.contains(&m));
                    assert!((1..m).all(|j| parts.contains(&j)));
                    assert_eq!(pi.moex() % 2, 1);
                    assert!(!parts.contains(&pi.moex()));
                    if parts.is_empty() {
                        assert_eq!(pi.maex(), 0);
                    } else {
                        assert!(pi.maex() < pi.largest());
                        assert!(!parts.contains(&pi.maex()));
                    }
                }
            }
        }
    }

    #[test]
    fn stat_sums() {
        assert_eq!(stat_sum_oracle(StatKind::Mex, 3, true), BigInt::from(4));
        assert_eq!(stat_sum_oracle(StatKind::Mex, 3, false), BigInt::from(6));
        assert_eq!(stat_sum_oracle(StatKind::Largest, 4, false), BigInt::from(12));
        assert_eq!(stat_sum_oracle(StatKind::Maex, 4, false), BigInt::from(6));
        assert_eq!(stat_sum_oracle(StatKind::Moex, 4, true), BigInt::from(6));
        assert_eq!(stat_sum_oracle(StatKind::Maex, 5, true), BigInt::from(8));
    }

    #[test]
    fn refined_counts() {
        assert_eq!(refined_count_oracle(RefinedKind::MexGt, 1, 3, true), BigInt::from(1));
        assert_eq!(refined_count_oracle(RefinedKind::SmallestGt, 1, 2, true), BigInt::from(1));
        assert_eq!(refined_count_oracle(RefinedKind::OddMex, 0, 1, true), BigInt::zero());
        assert_eq!(refined_count_oracle(RefinedKind::MexEq, 2, 4, true), BigInt::from(1));
    }

    #[test]
    fn mex_gt_bijection_with_smallest_gt() {
        for n in 0..=40u64 {
            for i in 0..=9u64 {
                let shift = i * (i + 1) / 2;
                if n < shift {
                    continue;
                }
                assert_eq!(
                    refined_count_oracle(RefinedKind::MexGt, i, n, true),
                    refined_count_oracle(RefinedKind::SmallestGt, i, n - shift, true),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn two_colored() {
        assert_eq!(two_colored_distinct_count(1), BigInt::from(2));
        assert_eq!(two_colored_distinct_count(2), BigInt::from(3));
        assert_eq!(two_colored_distinct_count(3), BigInt::from(6));
        for n in 0..=20 {
            assert_eq!(two_colored_distinct_count(n), stat_sum_oracle(StatKind::Mex, n, false));
        }
    }

    #[test]
    fn bump_largest_preserves_mex_off_the_staircase() {
        for n in 8..=40u64 {
            let stair = staircase(n);
            for pi in enum_partitions(n, true) {
                let bumped = bump_largest(&pi);
                assert_eq!(bumped.weight(), n + 1);
                assert!(bumped.parts().len() < 2 || bumped.parts()[0] - bumped.parts()[1] >= 2);
                if stair.as_ref() == Some(&pi) {
                    let k = pi.largest();
                    assert_eq!((pi.mex(), bumped.mex()), (k + 1, k), "n={n}");
                } else {
                    assert_eq!(pi.mex(), bumped.mex(), "n={n} {:?}", pi.parts());
                }
            }
        }
        assert!(staircase(28).is_some());
        assert!(staircase(27).is_none());
    }
}
