use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::{full_mask, Digraph};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} not in [0, 1]")));
    }
    Ok(())
}

pub fn empty_digraph(n: usize) -> Result<Digraph> {
    Digraph::new(n)
}

/// All edges between distinct vertices, plus every loop when `loops` is set.
pub fn complete_digraph(n: usize, loops: bool) -> Result<Digraph> {
    let d = Digraph::new(n)?;
    let full = full_mask(n);
    let out = (0..n).map(|u| if loops { full } else { full & !(1 << u) }).collect();
    Ok(Digraph::from_rows(d.n(), out))
}

/// Each of the `n²` ordered pairs, loops included, is an edge independently
/// with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut d = Digraph::new(n)?;
    let mut r = rng(seed);
    for u in 0..n {
        for v in 0..n {
            if r.gen_bool(p) {
                d.add_edge(u, v)?;
            }
        }
    }
    Ok(d)
}

pub fn random_tournament(n: usize, seed: u64) -> Result<Digraph> {
    let mut d = Digraph::new(n)?;
    let mut r = rng(seed);
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(0.5) {
                d.add_edge(i, j)?;
            } else {
                d.add_edge(j, i)?;
            }
        }
    }
    Ok(d)
}

/// A random acyclic digraph: edges go from higher to lower positions of a
/// random vertex ordering. With `decreasing` the ordering is the identity,
/// so every edge `(i, j)` has `i > j`.
pub fn random_acyclic_digraph(n: usize, p: f64, decreasing: bool, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut d = Digraph::new(n)?;
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    if !decreasing {
        order.shuffle(&mut r);
    }
    for i in 0..n {
        for j in 0..i {
            if r.gen_bool(p) {
                d.add_edge(order[i], order[j])?;
            }
        }
    }
    Ok(d)
}

/// Random digraph without 2-cycles: each unordered pair gets no edge or one
/// of the two orientations; each loop is present with probability `p`.
pub fn random_two_cycle_free_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut d = Digraph::new(n)?;
    let mut r = rng(seed);
    for i in 0..n {
        if r.gen_bool(p) {
            d.add_edge(i, i)?;
        }
        for j in i + 1..n {
            match r.gen_range(0..3) {
                0 => {}
                1 => d.add_edge(i, j)?,
                _ => d.add_edge(j, i)?,
            }
        }
    }
    Ok(d)
}

/// Edge set `⋃_{i > j} V_i × V_j` for the blocks `V_1, …, V_k`, which must
/// partition `{0, …, n-1}`.
pub fn star_partition_digraph(blocks: &[Vec<usize>]) -> Result<Digraph> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = 0u64;
    for &v in blocks.iter().flatten() {
        if v >= n || seen & (1 << v) != 0 {
            return Err(Error::Precondition(format!("{blocks:?} is not a set partition of [{n}]")));
        }
        seen |= 1 << v;
    }
    let mut d = Digraph::new(n)?;
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[..i] {
            for &u in bi {
                for &v in bj {
                    d.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(d)
}

impl Digraph {
    /// The star digraph on consecutive blocks of the given sizes.
    pub fn star_from_sizes(sizes: &[usize]) -> Result<Digraph> {
        let mut blocks = Vec::new();
        let mut next = 0;
        for &s in sizes {
            if s == 0 {
                return Err(Error::Precondition("block sizes must be positive".into()));
            }
            blocks.push((next..next + s).collect());
            next += s;
        }
        star_partition_digraph(&blocks)
    }
}

/// `Y_P = {(i, j) : i >_P j}` for the partial order generated by `relations`,
/// where `(i, j)` asserts `i >_P j`. The transitive closure is taken; a
/// relation set implying `i >_P i` is rejected.
pub fn poset_digraph(n: usize, relations: &[(usize, usize)]) -> Result<Digraph> {
    let mut d = Digraph::from_edges(n, relations)?;
    // Warshall closure on bitmask rows
    for k in 0..n {
        for i in 0..n {
            if d.out[i] & (1 << k) != 0 {
                d.out[i] |= d.out[k];
            }
        }
    }
    if (0..n).any(|i| d.has_loop(i)) {
        return Err(Error::Precondition("relations do not define a strict partial order".into()));
    }
    Ok(d)
}

/// Edges `(i+1, i)` for `i = 1, …, n-1` in 1-indexed labels.
pub fn directed_path_digraph(n: usize) -> Result<Digraph> {
    let edges: Vec<_> = (1..n).map(|i| (i, i - 1)).collect();
    Digraph::from_edges(n, &edges)
}

/// The directed `n`-cycle `1 → 2 → ⋯ → n → 1`.
pub fn cycle_digraph(n: usize) -> Result<Digraph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_edges(n, &edges)
}

/// The tournament with `(i, j)` an edge exactly when `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Digraph::from_edges(n, &edges)
}

/// Every digraph on `n` vertices with loops allowed (`2^(n²)` of them),
/// indexed by the row-major adjacency bit string.
pub fn all_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > 4 {
        return Err(Error::Guard {
            name: "exhaustive digraph vertices",
            value: n,
            limit: 4,
        });
    }
    let bits = n * n;
    Ok((0..1u64 << bits).map(move |code| {
        let out = (0..n).map(|u| (code >> (u * n)) & full_mask(n)).collect();
        Digraph::from_rows(n, out)
    }))
}

/// Every labeled tournament on `n` vertices.
pub fn all_tournaments(n: usize) -> Result<Vec<Digraph>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if pairs.len() > 20 {
        return Err(Error::Guard {
            name: "exhaustive tournament vertices",
            value: n,
            limit: 7,
        });
    }
    let mut out = Vec::with_capacity(1 << pairs.len());
    for code in 0..1u64 << pairs.len() {
        let mut d = Digraph::new(n)?;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if code & (1 << k) != 0 {
                d.add_edge(i, j)?;
            } else {
                d.add_edge(j, i)?;
            }
        }
        out.push(d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_path() {
        let s = star_partition_digraph(&[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(s.edges(), vec![(2, 0), (2, 1)]);
        assert_eq!(Digraph::star_from_sizes(&[2, 1]).unwrap(), s);
        assert!(star_partition_digraph(&[vec![0, 0]]).is_err());
        assert_eq!(directed_path_digraph(3).unwrap().edges(), vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn tournaments() {
        for seed in 0..10 {
            assert!(random_tournament(5, seed).unwrap().is_tournament());
        }
        assert_eq!(all_tournaments(4).unwrap().len(), 64);
        assert!(all_tournaments(4).unwrap().iter().all(Digraph::is_tournament));
        assert!(transitive_tournament(5).unwrap().is_acyclic());
    }

    #[test]
    fn determinism_and_families() {
        assert_eq!(random_digraph(6, 0.3, 42).unwrap(), random_digraph(6, 0.3, 42).unwrap());
        assert_eq!(all_digraphs(3).unwrap().count(), 512);
        assert!(all_digraphs(5).is_err());
        for seed in 0..20 {
            assert!(random_acyclic_digraph(6, 0.5, false, seed).unwrap().is_acyclic());
            assert!(random_acyclic_digraph(6, 0.5, true, seed).unwrap().is_strictly_decreasing());
            assert!(!random_two_cycle_free_digraph(6, 0.5, seed).unwrap().has_two_cycle());
        }
        assert!(random_digraph(3, 1.5, 0).is_err());
    }

    #[test]
    fn poset_closure() {
        // 3 > 2 > 1 as a chain gives the transitive tournament reversed
        let d = poset_digraph(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(d.edges(), vec![(1, 0), (2, 0), (2, 1)]);
        assert!(poset_digraph(2, &[(0, 1), (1, 0)]).is_err());
        assert_eq!(complete_digraph(3, false).unwrap().edge_count(), 6);
        assert_eq!(complete_digraph(3, true).unwrap().edge_count(), 9);
    }
}
