//! Digraphs on `[n]` with loops permitted, their transforms and structure
//! predicates, plus the brute-force enumerators used as oracles elsewhere.
//!
//! Vertices are 0-indexed in the API and 1-indexed in every text format.
//! Vertex subsets are `u64` bitmasks, vertex `i` ↔ bit `i`.

mod enumerate;
mod generators;
mod io;

use std::fmt;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

pub use enumerate::{
    cycle_systems, enumerate_cycle_covers, enumerate_path_covers, enumerate_path_cycle_covers,
    for_each_path_cycle_cover, perms_with_all_cycles_in, perms_with_cycles_in_either, CoverKind,
    FixedPoints, PathCycleCover,
};
pub use generators::{
    all_digraphs, all_tournaments, complete_digraph, cycle_digraph, directed_path_digraph,
    empty_digraph, poset_digraph, random_acyclic_digraph, random_digraph, random_tournament,
    random_two_cycle_free_digraph, star_partition_digraph, transitive_tournament,
};

pub const MAX_VERTICES: usize = 64;

/// A digraph on `{0, …, n-1}`: an edge set with loops allowed and no
/// parallel edges. Row `u` of `out` has bit `v` set iff `(u, v)` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

/// An induced subgraph, relabeled onto `{0, …, k-1}`, with the original
/// labels of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub digraph: Digraph,
    pub labels: Vec<usize>,
}

impl Induced {
    /// Edges in the original vertex labels.
    pub fn edges_original(&self) -> Vec<(usize, usize)> {
        self.digraph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.labels[u], self.labels[v]))
            .collect()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                name: "digraph vertices",
                value: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Digraph { n, out: vec![0; n] })
    }

    /// Builds a digraph from 0-indexed edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in edges {
            d.add_edge(u, v)?;
        }
        Ok(d)
    }

    /// Builds a digraph from 1-indexed edges, as written in the text formats.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n });
            }
            d.add_edge(u - 1, v - 1)?;
        }
        Ok(d)
    }

    pub(crate) fn from_rows(n: usize, out: Vec<u64>) -> Self {
        debug_assert_eq!(out.len(), n);
        Digraph { n, out }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w + 1, n: self.n });
            }
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u] & (1 << v) != 0
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    /// Out-neighbourhood of `u` as a bitmask.
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn out_masks(&self) -> &[u64] {
        &self.out
    }

    /// Edges in lexicographic order, 0-indexed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (0..self.n).filter(move |&v| self.out[u] & (1 << v) != 0).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// The 0/1 adjacency matrix.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }

    /// `(u, v)` is an edge iff it is not an edge of `self`, loops included.
    pub fn complement(&self) -> Digraph {
        let full = full_mask(self.n);
        Digraph {
            n: self.n,
            out: self.out.iter().map(|r| !r & full).collect(),
        }
    }

    /// Every edge reversed.
    pub fn opposite(&self) -> Digraph {
        let mut out = vec![0u64; self.n];
        for (u, v) in self.edges() {
            out[v] |= 1 << u;
        }
        Digraph { n: self.n, out }
    }

    /// The subgraph induced by the vertex set `vertices`.
    pub fn induced(&self, vertices: u64) -> Result<Induced> {
        if vertices & !full_mask(self.n) != 0 {
            let vertex = (64 - vertices.leading_zeros()) as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let labels: Vec<usize> = (0..self.n).filter(|&v| vertices & (1 << v) != 0).collect();
        let mut d = Digraph::new(labels.len())?;
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate() {
                if self.has_edge(u, v) {
                    d.out[a] |= 1 << b;
                }
            }
        }
        Ok(Induced { digraph: d, labels })
    }

    /// No directed cycle of any length; a loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut remaining = full_mask(self.n);
        loop {
            // a vertex with no out-edge into the remaining set is a sink
            let sink = (0..self.n).find(|&v| remaining & (1 << v) != 0 && self.out[v] & remaining == 0);
            match sink {
                Some(v) => remaining &= !(1 << v),
                None => return remaining == 0,
            }
        }
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|i| {
            !self.has_loop(i) && (i + 1..self.n).all(|j| self.has_edge(i, j) != self.has_edge(j, i))
        })
    }

    pub fn has_two_cycle(&self) -> bool {
        (0..self.n).any(|i| (i + 1..self.n).any(|j| self.has_edge(i, j) && self.has_edge(j, i)))
    }

    /// Whether `i > j` for every edge `(i, j)`.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.edges().iter().all(|&(i, j)| i > j)
    }

    /// Whether the cyclic vertex sequence `cycle` is a cycle of `self`
    /// (a single vertex needs a loop).
    pub fn contains_cycle(&self, cycle: &[usize]) -> bool {
        !cycle.is_empty()
            && (0..cycle.len()).all(|k| self.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]))
    }

    /// The positions `i ∈ [n-1]` with `(π_i, π_{i+1})` an edge, as a mask
    /// with position `i` ↔ bit `i - 1`.
    pub fn descent_set(&self, pi: &Permutation) -> u64 {
        let w = pi.images();
        let mut mask = 0;
        for i in 1..w.len() {
            if self.has_edge(w[i - 1], w[i]) {
                mask |= 1 << (i - 1);
            }
        }
        mask
    }

    /// A stable 64-bit FNV-1a fingerprint of the text form, hex encoded.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in self.to_text().bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D(n={}, {{", self.n)?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", u + 1, v + 1)?;
        }
        write!(f, "}})")
    }
}

#[cfg(test)]
pub(crate) fn figure_one() -> Digraph {
    Digraph::from_one_based(3, &[(1, 1), (1, 3), (3, 2)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_based(d: &Digraph) -> Vec<(usize, usize)> {
        d.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    #[test]
    fn transforms_of_figure_one() {
        let d = figure_one();
        assert_eq!(
            one_based(&d.complement()),
            vec![(1, 2), (2, 1), (2, 2), (2, 3), (3, 1), (3, 3)]
        );
        assert_eq!(one_based(&d.opposite()), vec![(1, 1), (2, 3), (3, 1)]);
        let ind = d.induced(0b101).unwrap();
        let mut e: Vec<_> = ind.edges_original().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        e.sort();
        assert_eq!(e, vec![(1, 1), (1, 3)]);
        assert!(d.induced(0b1000).is_err());
    }

    #[test]
    fn involutions() {
        for seed in 0..20 {
            let d = random_digraph(5, 0.4, seed).unwrap();
            assert_eq!(d.complement().complement(), d);
            assert_eq!(d.opposite().opposite(), d);
            let a = d.adjacency();
            let b = d.complement().adjacency();
            for i in 0..5 {
                for j in 0..5 {
                    assert_eq!(a[i][j] + b[i][j], 1);
                }
            }
        }
    }

    #[test]
    fn predicates() {
        assert!(!figure_one().is_acyclic());
        let tree = Digraph::from_one_based(4, &[(2, 1), (3, 2), (3, 1), (4, 3)]).unwrap();
        assert!(tree.is_acyclic());
        let c3 = Digraph::from_one_based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(c3.is_tournament());
        assert!(!c3.has_two_cycle());
        assert!(!c3.is_acyclic());
        assert!(!figure_one().is_tournament());
        assert!(figure_one().complement().has_two_cycle());
    }

    #[test]
    fn descent_sets() {
        let d = figure_one();
        let pi = Permutation::from_word(&[1, 3, 2]).unwrap();
        // (1,3) and (3,2) are both edges
        assert_eq!(d.descent_set(&pi), 0b11);
        let pi = Permutation::from_word(&[1, 2, 3]).unwrap();
        assert_eq!(d.descent_set(&pi), 0);
        let empty = Digraph::new(4).unwrap();
        let full = empty.complement();
        for pi in Permutation::all(4) {
            assert_eq!(empty.descent_set(&pi), 0);
            assert_eq!(full.descent_set(&pi), 0b111);
        }
    }

    #[test]
    fn cycle_membership() {
        let c3 = Digraph::from_one_based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(c3.contains_cycle(&[0, 1, 2]));
        assert!(!c3.contains_cycle(&[0, 2, 1]));
        assert!(figure_one().contains_cycle(&[0]));
        assert!(!figure_one().contains_cycle(&[1]));
    }

    #[test]
    fn out_of_range_edges() {
        assert!(Digraph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Digraph::from_one_based(2, &[(0, 1)]).is_err());
        assert!(Digraph::new(65).is_err());
    }
}
