use crate::combinatorics::{Partition, Permutation};
use crate::error::Result;
use crate::guard;

use super::Digraph;

/// A spanning, vertex-disjoint union of directed paths and cycles.
///
/// Paths keep their orientation (a single vertex is a path with no edges);
/// cycles start at their least vertex. Paths are listed by first vertex and
/// cycles by least vertex, so equal covers compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCycleCover {
    pub paths: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
}

impl PathCycleCover {
    /// Partition formed by the vertex counts of the paths.
    pub fn path_partition(&self) -> Partition {
        Partition::new(self.paths.iter().map(|p| p.len() as u32).collect::<Vec<_>>())
    }

    pub fn cycle_partition(&self) -> Partition {
        Partition::new(self.cycles.iter().map(|c| c.len() as u32).collect::<Vec<_>>())
    }

    /// Checks that the components partition `[n]` and use only edges of `d`.
    pub fn is_cover_of(&self, d: &Digraph) -> bool {
        let mut seen = 0u64;
        for comp in self.paths.iter().chain(&self.cycles) {
            for &v in comp {
                if v >= d.n() || seen & (1 << v) != 0 {
                    return false;
                }
                seen |= 1 << v;
            }
        }
        seen == super::full_mask(d.n())
            && self.paths.iter().all(|p| p.windows(2).all(|w| d.has_edge(w[0], w[1])))
            && self.cycles.iter().all(|c| d.contains_cycle(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Paths,
    Cycles,
    PathsAndCycles,
}

/// Calls `visit` once for every cover of `d` of the requested kind.
pub fn for_each_path_cycle_cover(
    d: &Digraph,
    kind: CoverKind,
    mut visit: impl FnMut(&PathCycleCover),
) -> Result<()> {
    guard::check("cover enumeration vertices", d.n(), guard::ENUMERATION)?;
    let mut succ = vec![None; d.n()];
    assign(d, kind, 0, 0, &mut succ, &mut visit);
    Ok(())
}

// Vertices are given successors in increasing order; `targets` holds the
// vertices already used as somebody's successor.
fn assign(
    d: &Digraph,
    kind: CoverKind,
    u: usize,
    targets: u64,
    succ: &mut [Option<usize>],
    visit: &mut impl FnMut(&PathCycleCover),
) {
    let n = d.n();
    if u == n {
        visit(&decompose(succ, targets));
        return;
    }
    if kind != CoverKind::Cycles {
        succ[u] = None;
        assign(d, kind, u + 1, targets, succ, visit);
    }
    let mut free = d.out_mask(u) & !targets;
    while free != 0 {
        let w = free.trailing_zeros() as usize;
        free &= free - 1;
        if kind == CoverKind::Paths && closes_cycle(succ, u, w) {
            continue;
        }
        succ[u] = Some(w);
        assign(d, kind, u + 1, targets | 1 << w, succ, visit);
    }
    succ[u] = None;
}

fn closes_cycle(succ: &[Option<usize>], u: usize, w: usize) -> bool {
    let mut v = w;
    loop {
        if v == u {
            return true;
        }
        match succ[v] {
            Some(next) if v < u => v = next,
            _ => return false,
        }
    }
}

fn decompose(succ: &[Option<usize>], targets: u64) -> PathCycleCover {
    let n = succ.len();
    let mut seen = 0u64;
    let mut paths = Vec::new();
    for start in (0..n).filter(|&v| targets & (1 << v) == 0) {
        let mut path = vec![start];
        seen |= 1 << start;
        let mut v = start;
        while let Some(w) = succ[v] {
            path.push(w);
            seen |= 1 << w;
            v = w;
        }
        paths.push(path);
    }
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut cycle = vec![start];
        seen |= 1 << start;
        let mut v = succ[start].expect("vertex on a cycle has a successor");
        while v != start {
            cycle.push(v);
            seen |= 1 << v;
            v = succ[v].expect("vertex on a cycle has a successor");
        }
        cycles.push(cycle);
    }
    PathCycleCover { paths, cycles }
}

fn collect(d: &Digraph, kind: CoverKind) -> Result<Vec<PathCycleCover>> {
    let mut out = Vec::new();
    for_each_path_cycle_cover(d, kind, |c| out.push(c.clone()))?;
    out.sort();
    Ok(out)
}

pub fn enumerate_path_covers(d: &Digraph) -> Result<Vec<PathCycleCover>> {
    collect(d, CoverKind::Paths)
}

pub fn enumerate_cycle_covers(d: &Digraph) -> Result<Vec<PathCycleCover>> {
    collect(d, CoverKind::Cycles)
}

pub fn enumerate_path_cycle_covers(d: &Digraph) -> Result<Vec<PathCycleCover>> {
    collect(d, CoverKind::PathsAndCycles)
}

/// How fixed points of a permutation are treated when every cycle must
/// be a cycle of some digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPoints {
    /// Fixed points are always allowed; only nontrivial cycles are constrained.
    Free,
    /// A fixed point `i` is allowed only if `(i, i)` is a loop.
    LoopsOnly,
}

/// Enumerates permutations of `domain` each of whose nontrivial cycles is a
/// cycle of one of the digraphs given by `colors` (out-neighbour masks).
/// A cycle lying in several colors is produced once per color, so callers
/// should pass edge-disjoint colors.
pub fn cycle_systems(
    n: usize,
    domain: u64,
    colors: &[&[u64]],
    fixed: FixedPoints,
    mut visit: impl FnMut(&Permutation),
) -> Result<()> {
    guard::check("permutation enumeration size", domain.count_ones() as usize, guard::ENUMERATION)?;
    let mut images: Vec<usize> = (0..n).collect();
    systems(n, domain, domain, colors, fixed, &mut images, &mut visit);
    Ok(())
}

fn systems(
    n: usize,
    domain: u64,
    remaining: u64,
    colors: &[&[u64]],
    fixed: FixedPoints,
    images: &mut Vec<usize>,
    visit: &mut impl FnMut(&Permutation),
) {
    if remaining == 0 {
        visit(&perm_from(images.clone(), domain));
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let fixed_ok = match fixed {
        FixedPoints::Free => true,
        FixedPoints::LoopsOnly => colors.iter().any(|c| c[v] & (1 << v) != 0),
    };
    if fixed_ok {
        images[v] = v;
        systems(n, domain, rest, colors, fixed, images, visit);
    }
    for color in colors {
        let mut path = vec![v];
        extend(n, domain, rest, color, colors, fixed, &mut path, rest, images, visit);
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    n: usize,
    domain: u64,
    rest: u64,
    color: &[u64],
    colors: &[&[u64]],
    fixed: FixedPoints,
    path: &mut Vec<usize>,
    avail: u64,
    images: &mut Vec<usize>,
    visit: &mut impl FnMut(&Permutation),
) {
    let last = *path.last().unwrap();
    let mut next = color[last] & avail;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(w);
        if color[w] & (1 << path[0]) != 0 {
            for k in 0..path.len() {
                images[path[k]] = path[(k + 1) % path.len()];
            }
            let used: u64 = path.iter().fold(0, |m, &x| m | 1 << x);
            systems(n, domain, rest & !used, colors, fixed, images, visit);
            for &x in path.iter() {
                images[x] = x;
            }
        }
        extend(n, domain, rest, color, colors, fixed, path, avail & !(1 << w), images, visit);
        path.pop();
    }
}

fn perm_from(images: Vec<usize>, domain: u64) -> Permutation {
    let n = images.len();
    let cycles = {
        let mut seen = 0u64;
        let mut cs = Vec::new();
        for s in 0..n {
            if domain & (1 << s) == 0 || seen & (1 << s) != 0 {
                continue;
            }
            let mut c = vec![s];
            seen |= 1 << s;
            let mut v = images[s];
            while v != s {
                c.push(v);
                seen |= 1 << v;
                v = images[v];
            }
            cs.push(c);
        }
        cs
    };
    Permutation::from_cycles(n, domain, &cycles).expect("images form a permutation of the domain")
}

/// `𝔖_I(D)`: permutations of `domain` whose nontrivial cycles are cycles of `d`.
pub fn perms_with_all_cycles_in(d: &Digraph, domain: u64, fixed: FixedPoints) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    cycle_systems(d.n(), domain, &[d.out_masks()], fixed, |p| out.push(p.clone()))?;
    Ok(out)
}

/// `𝔖_I(D, D̄)`: permutations of `domain` each of whose cycles is a cycle of
/// `d` or of its complement. Every fixed point qualifies, being a loop of
/// exactly one of the two.
pub fn perms_with_cycles_in_either(d: &Digraph, domain: u64) -> Result<Vec<Permutation>> {
    let comp = d.complement();
    let mut out = Vec::new();
    cycle_systems(
        d.n(),
        domain,
        &[d.out_masks(), comp.out_masks()],
        FixedPoints::LoopsOnly,
        |p| out.push(p.clone()),
    )?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{figure_one, full_mask, random_digraph};
    use super::*;

    fn shapes(covers: &[PathCycleCover], paths: &[u32], cycles: &[u32]) -> usize {
        let (p, c) = (Partition::new(paths.to_vec()), Partition::new(cycles.to_vec()));
        covers
            .iter()
            .filter(|s| s.path_partition() == p && s.cycle_partition() == c)
            .count()
    }

    #[test]
    fn complement_of_figure_one() {
        let dbar = figure_one().complement();
        let pc = enumerate_path_covers(&dbar).unwrap();
        assert_eq!(shapes(&pc, &[2, 1], &[]), 4);
        let all = enumerate_path_cycle_covers(&dbar).unwrap();
        assert_eq!(shapes(&all, &[2], &[1]), 3);
        for s in &all {
            assert!(s.is_cover_of(&dbar));
        }
    }

    #[test]
    fn edgeless_digraph_has_one_cover() {
        for n in 0..5 {
            let d = Digraph::new(n).unwrap();
            let pc = enumerate_path_covers(&d).unwrap();
            assert_eq!(pc.len(), 1);
            assert_eq!(pc[0].paths.len(), n);
            assert_eq!(enumerate_cycle_covers(&d).unwrap().len(), (n == 0) as usize);
        }
    }

    #[test]
    fn covers_are_distinct_and_valid() {
        for seed in 0..10 {
            let d = random_digraph(5, 0.5, seed).unwrap();
            let all = enumerate_path_cycle_covers(&d).unwrap();
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            assert!(all.iter().all(|s| s.is_cover_of(&d)));
            let paths = enumerate_path_covers(&d).unwrap();
            let cycles = enumerate_cycle_covers(&d).unwrap();
            assert_eq!(paths.len(), all.iter().filter(|s| s.cycles.is_empty()).count());
            assert_eq!(cycles.len(), all.iter().filter(|s| s.paths.is_empty()).count());
        }
    }

    #[test]
    fn either_class_for_figure_one() {
        let d = figure_one();
        let mut got: Vec<String> = perms_with_cycles_in_either(&d, 0b111)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        got.sort();
        assert_eq!(got, vec!["(1 2 3)", "(1 2)(3)", "(1)(2)(3)"]);
    }

    #[test]
    fn cycle_classes() {
        let none = Digraph::new(3).unwrap();
        let only = perms_with_all_cycles_in(&none, 0b111, FixedPoints::Free).unwrap();
        assert_eq!(only, vec![Permutation::identity(3)]);
        assert!(perms_with_all_cycles_in(&none, 0b111, FixedPoints::LoopsOnly).unwrap().is_empty());

        let c3 = Digraph::from_one_based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let perms = perms_with_all_cycles_in(&c3, 0b111, FixedPoints::Free).unwrap();
        let up = Permutation::from_cycles(3, 0b111, &[vec![0, 1, 2]]).unwrap();
        let down = Permutation::from_cycles(3, 0b111, &[vec![0, 2, 1]]).unwrap();
        assert!(perms.contains(&up));
        assert!(!perms.contains(&down));
    }

    #[test]
    fn complement_swaps_classes_and_brute_force_agrees() {
        for seed in 0..8 {
            let d = random_digraph(4, 0.5, seed).unwrap();
            for domain in 0..16u64 {
                let mine = perms_with_all_cycles_in(&d, domain, FixedPoints::Free).unwrap();
                let brute: Vec<_> = Permutation::all_on(4, domain)
                    .into_iter()
                    .filter(|p| p.cycles().iter().all(|c| c.len() == 1 || d.contains_cycle(c)))
                    .collect();
                assert_eq!(mine.len(), brute.len());
                for p in &brute {
                    assert!(mine.contains(p));
                }
                let either = perms_with_cycles_in_either(&d, domain).unwrap();
                let brute_either = Permutation::all_on(4, domain)
                    .into_iter()
                    .filter(|p| {
                        p.cycles()
                            .iter()
                            .all(|c| d.contains_cycle(c) || d.complement().contains_cycle(c))
                    })
                    .count();
                assert_eq!(either.len(), brute_either);
            }
            // the opposite digraph reverses cycles bijectively
            let full = full_mask(4);
            assert_eq!(
                perms_with_all_cycles_in(&d, full, FixedPoints::Free).unwrap().len(),
                perms_with_all_cycles_in(&d.opposite(), full, FixedPoints::Free).unwrap().len()
            );
        }
    }
}
