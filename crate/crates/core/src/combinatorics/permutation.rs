use std::fmt;

use crate::combinatorics::Partition;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A permutation of a vertex subset `I ⊆ {0, …, n-1}`.
///
/// Images are stored for the whole ambient range; points outside the domain
/// are fixed and ignored by every statistic. Vertices are 0-indexed
/// internally and printed 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    domain: u64,
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            domain: full_mask(n),
        }
    }

    /// A permutation of `{0, …, n-1}` from its 0-indexed images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Precondition(format!("{images:?} is not a bijection")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images,
            domain: full_mask(n),
        })
    }

    /// A permutation from its one-line word in 1-indexed values, e.g. `[3,2,5,6,4,1]`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::Precondition("one-line words are 1-indexed".into()));
        }
        Self::from_images(word.iter().map(|&v| v - 1).collect())
    }

    /// Builds a permutation of the vertex set `domain` (a bitmask over `n`
    /// ambient vertices) from 0-indexed cycles; unlisted domain points are fixed.
    pub fn from_cycles(n: usize, domain: u64, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = 0u64;
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v >= n || domain & (1 << v) == 0 || used & (1 << v) != 0 {
                    return Err(Error::Precondition(format!("bad cycle {cycle:?}")));
                }
                used |= 1 << v;
                images[v] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images, domain })
    }

    /// Ambient size `n`.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn domain(&self) -> u64 {
        self.domain
    }

    pub fn domain_size(&self) -> usize {
        self.domain.count_ones() as usize
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// One-line word with 1-indexed values.
    pub fn word(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Disjoint cycles over the domain (fixed points included), each starting
    /// at its least vertex, listed by least vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            let bit = 1u64 << start;
            if self.domain & bit == 0 || seen & bit != 0 {
                continue;
            }
            let mut cycle = vec![start];
            seen |= bit;
            let mut v = self.images[start];
            while v != start {
                seen |= 1 << v;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect::<Vec<_>>())
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// Number of cycles of length at least two.
    pub fn psi(&self) -> u32 {
        self.cycles().iter().filter(|c| c.len() > 1).count() as u32
    }

    /// Σ (ℓ(γ) - 1) over the cycles γ of `self` that are cycles of `d`.
    pub fn phi(&self, d: &Digraph) -> u32 {
        self.cycles()
            .iter()
            .filter(|c| d.contains_cycle(c))
            .map(|c| c.len() as u32 - 1)
            .sum()
    }

    /// Every permutation of `{0, …, n-1}`, in lexicographic order of words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: word.clone(),
                domain: full_mask(n),
            });
            if !next_permutation(&mut word) {
                break;
            }
        }
        out
    }

    /// Every permutation of the vertex subset `domain` of an `n`-vertex ambient set.
    pub fn all_on(n: usize, domain: u64) -> Vec<Permutation> {
        let verts: Vec<usize> = (0..n).filter(|&v| domain & (1 << v) != 0).collect();
        let mut arrangement = verts.clone();
        let mut out = Vec::new();
        loop {
            let mut images: Vec<usize> = (0..n).collect();
            for (&v, &w) in verts.iter().zip(&arrangement) {
                images[v] = w;
            }
            out.push(Permutation { images, domain });
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
        out
    }
}

pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.domain_size() == 0 {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Partition of the gaps between consecutive records (left-to-right maxima)
/// of a one-line word.
pub fn record_partition(sigma: &Permutation) -> Partition {
    let word = sigma.images();
    let n = word.len();
    let mut records = Vec::new();
    let mut best: Option<usize> = None;
    for (i, &v) in word.iter().enumerate() {
        if best.map_or(true, |b| v > b) {
            records.push(i);
            best = Some(v);
        }
    }
    records.push(n);
    Partition::new(records.windows(2).map(|w| (w[1] - w[0]) as u32).collect::<Vec<_>>())
}

/// Foata's linearization: each cycle written largest element first, cycles
/// concatenated by increasing largest element.
///
/// A cycle is read backwards from its maximum (`m, σ⁻¹(m), σ⁻²(m), …`), so
/// `(1 4 6)(2 3)(5)` becomes `325641`.
pub fn foata_linearize(sigma: &Permutation) -> Permutation {
    let mut cycles: Vec<Vec<usize>> = sigma
        .cycles()
        .into_iter()
        .map(|c| {
            let top = c.iter().enumerate().max_by_key(|(_, &v)| v).map(|(k, _)| k).unwrap();
            let mut rotated = c[top..].to_vec();
            rotated.extend_from_slice(&c[..top]);
            rotated[1..].reverse();
            rotated
        })
        .collect();
    cycles.sort_by_key(|c| c[0]);
    let images = cycles.concat();
    Permutation::from_images(images).expect("cycle concatenation is a bijection")
}
