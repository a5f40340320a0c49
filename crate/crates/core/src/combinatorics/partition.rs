use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::guard;

/// An integer partition, stored as weakly decreasing positive parts.
///
/// The derived ordering is the canonical listing order used for every basis
/// expansion: by weight first, then reverse lexicographic within a weight
/// (`[3] < [2,1] < [1,1,1]`).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(i, 1^{n-i})`, for `1 <= i <= n`.
    pub fn hook(i: u32, n: u32) -> Self {
        assert!(1 <= i && i <= n, "hook arm out of range");
        let mut parts = vec![i];
        parts.extend(std::iter::repeat(1).take((n - i) as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Multiplicity `r_i` of every part size, indexed by `i` (entry 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut r = vec![0; self.part(0) as usize + 1];
        for &p in &self.0 {
            r[p as usize] += 1;
        }
        r
    }

    /// `r_1! r_2! ...`, the factor relating augmented and ordinary monomials.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &r| acc * factorial(r as usize))
    }

    /// Size of the centralizer of a permutation of cycle type `self`.
    pub fn z_lambda(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigInt::one(), |acc, (i, &r)| {
                acc * BigInt::from(i).pow(r) * factorial(r as usize)
            })
    }

    /// `(-1)^{|λ| - ℓ(λ)}`: the sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Multiset union of parts (the partition indexing `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Whether every part is odd.
    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Parts padded with zeros up to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    guard::check("partitions_of", n, guard::PARTITIONS)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(partitions_of(3).unwrap(), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn pentagonal_counts() {
        // p(n) via Euler's pentagonal recurrence
        let mut counts = vec![1i64];
        for m in 1..=25i64 {
            let mut total = 0;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * counts[(m - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    total += sign * counts[(m - g2) as usize];
                }
            }
            counts.push(total);
        }
        assert_eq!(counts[8], 22);
        for n in 0..=25 {
            assert_eq!(partitions_of(n).unwrap().len() as i64, counts[n], "n = {n}");
        }
    }

    #[test]
    fn listing_is_sorted_and_distinct() {
        let all = partitions_of(10).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|l| l.weight() == 10));
    }

    #[test]
    fn guard_rejects_large_n() {
        assert!(partitions_of(26).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 2, 2, 1]).conjugate(), p(&[5, 4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
        for l in partitions_of(9).unwrap() {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[1, 1, 1]).z_lambda(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z_lambda(), BigInt::from(2));
        assert_eq!(p(&[3]).z_lambda(), BigInt::from(3));
        // class sizes n!/z_λ sum to n!
        for n in 0..=7 {
            let total: BigInt = partitions_of(n)
                .unwrap()
                .iter()
                .map(|l| factorial(n) / l.z_lambda())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn union_merges_parts() {
        assert_eq!(p(&[2]).union(&p(&[2, 1])), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 1]).union(&Partition::empty()), p(&[3, 1]));
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(2, 4), p(&[2, 1, 1]));
        assert_eq!(Partition::hook(4, 4), p(&[4]));
    }
}
