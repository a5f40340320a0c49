//! Hamiltonian path and cycle counts, and the parity theorems.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::digraph::{enumerate_cycle_covers, full_mask, Digraph};
use crate::error::{Error, Result};
use crate::guard;
use crate::matrix::integer::bareiss_i128;

fn rows_of(d: &Digraph) -> Vec<u64> {
    d.out_masks().to_vec()
}

/// `det M[S]` for the 0/1 matrix with row masks `rows`.
fn det01(rows: &[u64], s: u64) -> i128 {
    let verts: Vec<usize> = (0..64).filter(|&v| s >> v & 1 == 1).collect();
    let k = verts.len();
    let mut a: Vec<i128> = Vec::with_capacity(k * k);
    for &i in &verts {
        a.extend(verts.iter().map(|&j| (rows[i] >> j & 1) as i128));
    }
    // entries are 0/1 and k ≤ 22, so every Bareiss minor fits comfortably
    bareiss_i128(&mut a, k).expect("0/1 minors fit in i128")
}

/// `per M[T]` for a 0/1 matrix by Ryser's formula with a Gray-code walk.
fn per01(rows: &[u64], t: u64) -> i128 {
    let verts: Vec<usize> = (0..64).filter(|&v| t >> v & 1 == 1).collect();
    let k = verts.len();
    if k == 0 {
        return 1;
    }
    let local: Vec<u32> = verts
        .iter()
        .map(|&i| verts.iter().enumerate().fold(0u32, |m, (c, &j)| m | ((rows[i] >> j & 1) as u32) << c))
        .collect();
    if local.iter().any(|&r| r == 0) {
        return 0;
    }
    let mut sums = vec![0i64; k];
    let mut total = 0i128;
    let mut gray = 0u32;
    for step in 1u32..(1 << k) {
        let bit = step.trailing_zeros();
        gray ^= 1 << bit;
        let add = gray >> bit & 1 == 1;
        for (s, r) in sums.iter_mut().zip(&local) {
            if r >> bit & 1 == 1 {
                *s += if add { 1 } else { -1 };
            }
        }
        let prod = sums.iter().fold(1i128, |p, &s| p * s as i128);
        if (k - gray.count_ones() as usize) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// `ham(D) = Σ_{S ⊆ [n]} det Ā[S] · per A[S^c]`.
pub fn ham_detper(d: &Digraph) -> Result<BigInt> {
    let n = d.n();
    guard::check("ham det-per vertices", n, guard::HAM_DETPER)?;
    let a = rows_of(d);
    let abar = rows_of(&d.complement());
    let full = full_mask(n);
    let total: i128 = (0..=full)
        .into_par_iter()
        .map(|s| {
            let det = det01(&abar, s);
            if det == 0 {
                0
            } else {
                det * per01(&a, full & !s)
            }
        })
        .sum();
    Ok(total.into())
}

fn binomials(n: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; n + 2]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
    c
}

/// Counts Hamiltonian paths by a dynamic program over (visited set, last
/// vertex). Only two popcount layers are alive at a time; a set of size `k`
/// is addressed by its colex rank and its `k` end vertices by bit position.
pub fn ham_dp(d: &Digraph) -> Result<BigInt> {
    let n = d.n();
    guard::check("ham DP vertices", n, guard::HAM_DP)?;
    if n == 0 {
        return Ok(1.into());
    }
    let binom = binomials(n);
    // in-neighbour masks
    let mut into = vec![0u64; n];
    for (u, v) in d.edges() {
        into[v] |= 1 << u;
    }
    let mut layer: Vec<u128> = vec![1; n];
    for k in 1..n {
        let size = binom[n][k + 1];
        let mut next = vec![0u128; size * (k + 1)];
        let mut mask: u64 = (1 << (k + 1)) - 1;
        for rank in 0..size {
            let bits: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).collect();
            // prefix[t] = Σ_{i<t} C(b_i, i+1), suffix[t] = Σ_{i>t} C(b_i, i)
            let mut prefix = vec![0usize; k + 2];
            for (i, &b) in bits.iter().enumerate() {
                prefix[i + 1] = prefix[i] + binom[b][i + 1];
            }
            let mut suffix = vec![0usize; k + 2];
            for i in (0..=k).rev() {
                suffix[i] = suffix[i + 1] + binom[bits[i]][i];
            }
            for (t, &w) in bits.iter().enumerate() {
                let prev_rank = prefix[t] + suffix[t + 1];
                let prev = &layer[prev_rank * k..prev_rank * k + k];
                let preds = into[w] & mask & !(1 << w);
                let mut acc = 0u128;
                for (pos, &v) in bits.iter().filter(|&&v| v != w).enumerate() {
                    if preds >> v & 1 == 1 {
                        acc += prev[pos];
                    }
                }
                next[rank * (k + 1) + t] = acc;
            }
            if rank + 1 < size {
                // Gosper's hack: next mask with the same popcount
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        layer = next;
    }
    Ok(layer.iter().sum::<u128>().into())
}

/// Hamiltonian paths by depth-first enumeration.
pub fn ham_bruteforce(d: &Digraph) -> Result<BigInt> {
    let n = d.n();
    guard::check("brute-force Hamiltonian vertices", n, guard::HAM_BRUTE)?;
    if n == 0 {
        return Ok(1.into());
    }
    fn extend(d: &Digraph, last: usize, seen: u64, full: u64) -> u64 {
        if seen == full {
            return 1;
        }
        let mut count = 0;
        let mut next = d.out_mask(last) & !seen;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            count += extend(d, v, seen | 1 << v, full);
        }
        count
    }
    let full = full_mask(n);
    Ok((0..n).map(|s| extend(d, s, 1 << s, full)).sum::<u64>().into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleRoute {
    /// `Σ_{S ⊆ [n]∖{i}} (-1)^{|S|} det A[S] · per A[S^c]` for a 0-indexed `i`
    FormulaA(usize),
    /// `(1/n) Σ_S (-1)^{|S|} |S^c| det A[S] · per A[S^c]`
    FormulaB,
    BruteForce,
}

/// Number of directed Hamiltonian cycles. A one-vertex digraph has one iff
/// it has a loop.
pub fn ham_cycles(d: &Digraph, route: CycleRoute) -> Result<BigInt> {
    let n = d.n();
    if n == 0 {
        return Err(Error::Precondition("Hamiltonian cycles need at least one vertex".into()));
    }
    let a = rows_of(d);
    let full = full_mask(n);
    let signed = |s: u64| -> i128 {
        let det = det01(&a, s);
        if det == 0 {
            return 0;
        }
        let v = det * per01(&a, full & !s);
        if s.count_ones() % 2 == 0 {
            v
        } else {
            -v
        }
    };
    match route {
        CycleRoute::FormulaA(i) => {
            guard::check("Hamiltonian cycle vertices", n, guard::HAM_CYCLES)?;
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            let rest = full & !(1 << i);
            let total: i128 = (0..=full)
                .into_par_iter()
                .filter(|&s| s & !rest == 0)
                .map(signed)
                .sum();
            Ok(total.into())
        }
        CycleRoute::FormulaB => {
            guard::check("Hamiltonian cycle vertices", n, guard::HAM_CYCLES)?;
            let total: i128 = (0..=full)
                .into_par_iter()
                .map(|s| (n - s.count_ones() as usize) as i128 * signed(s))
                .sum();
            if total % n as i128 != 0 {
                return Err(Error::NonIntegral(format!("{total} / {n}")));
            }
            Ok((total / n as i128).into())
        }
        CycleRoute::BruteForce => {
            guard::check("brute-force Hamiltonian vertices", n, guard::HAM_BRUTE)?;
            // rotation-canonical: every cycle is read from vertex 0
            fn extend(d: &Digraph, last: usize, seen: u64, full: u64) -> u64 {
                if seen == full {
                    return d.has_edge(last, 0) as u64;
                }
                let mut count = 0;
                let mut next = d.out_mask(last) & !seen;
                while next != 0 {
                    let v = next.trailing_zeros() as usize;
                    next &= next - 1;
                    count += extend(d, v, seen | 1 << v, full);
                }
                count
            }
            Ok(extend(d, 0, 1, full).into())
        }
    }
}

fn as_number<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i128::try_from(v) {
        Ok(x) => s.serialize_i128(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

fn as_numbers<S: Serializer>(m: &BTreeMap<String, BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    #[derive(Serialize)]
    struct N<'a>(#[serde(serialize_with = "as_number")] &'a BigInt);
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(k, &N(v))?;
    }
    map.end()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HamReport {
    pub digraph: String,
    pub n: usize,
    #[serde(serialize_with = "as_number")]
    pub ham_paths: BigInt,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_number")]
    pub ham_cycles: Option<BigInt>,
    #[serde(serialize_with = "as_numbers")]
    pub routes: BTreeMap<String, BigInt>,
    pub timings_ms: BTreeMap<String, f64>,
    pub agree: bool,
}

fn opt_number<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => as_number(v, s),
        None => s.serialize_none(),
    }
}

/// Counts Hamiltonian paths (and optionally cycles). With `all_routes`
/// every route within its guard is run and compared.
pub fn ham_report(d: &Digraph, cycles: bool, all_routes: bool) -> Result<HamReport> {
    let n = d.n();
    let mut routes = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    let mut run = |name: &str, f: &dyn Fn() -> Result<BigInt>| -> Result<()> {
        let start = Instant::now();
        let v = f()?;
        timings_ms.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        routes.insert(name.to_string(), v);
        Ok(())
    };
    let within = |g: usize| n <= guard::limit(g);

    if all_routes || !within(guard::HAM_DP) {
        run("paths:det-per", &|| ham_detper(d))?;
    }
    if within(guard::HAM_DP) {
        run("paths:dp", &|| ham_dp(d))?;
    }
    if all_routes && within(guard::HAM_BRUTE) {
        run("paths:bruteforce", &|| ham_bruteforce(d))?;
    }
    if cycles && n > 0 {
        run("cycles:formula-b", &|| ham_cycles(d, CycleRoute::FormulaB))?;
        if all_routes {
            for i in 0..n {
                run(&format!("cycles:formula-a({})", i + 1), &|| ham_cycles(d, CycleRoute::FormulaA(i)))?;
            }
            if within(guard::HAM_BRUTE) {
                run("cycles:bruteforce", &|| ham_cycles(d, CycleRoute::BruteForce))?;
            }
        }
    }
    let group = |prefix: &str| -> Vec<&BigInt> {
        routes.iter().filter(|(k, _)| k.starts_with(prefix)).map(|(_, v)| v).collect()
    };
    let paths = group("paths:");
    let cyc = group("cycles:");
    let agree = paths.windows(2).all(|w| w[0] == w[1]) && cyc.windows(2).all(|w| w[0] == w[1]);
    Ok(HamReport {
        digraph: d.fingerprint(),
        n,
        ham_paths: paths[0].clone(),
        ham_cycles: cyc.first().map(|v| (*v).clone()),
        agree,
        routes,
        timings_ms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub ham: u128,
    pub ham_complement: u128,
    /// `ham(D) ≡ ham(D̄) (mod 2)`
    pub berge: bool,
    /// oddness of `ham(D)`, for tournaments only
    pub redei: Option<bool>,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.berge && self.redei != Some(false)
    }
}

pub fn parity_suite(d: &Digraph) -> Result<ParityReport> {
    guard::check("parity vertices", d.n(), guard::PARITY)?;
    let to_u128 = |v: BigInt| u128::try_from(v).expect("path counts are nonnegative");
    let ham = to_u128(ham_dp(d)?);
    let ham_complement = to_u128(ham_dp(&d.complement())?);
    Ok(ParityReport {
        ham,
        ham_complement,
        berge: ham % 2 == ham_complement % 2,
        redei: d.is_tournament().then_some(ham % 2 == 1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WisemanReport {
    pub ham_complement: String,
    pub permanent: String,
    pub cycle_covers: usize,
    pub passed: bool,
}

/// For acyclic `D`: `ham(D̄) = per Ā =` number of cycle covers of `D̄`.
pub fn wiseman_check(d: &Digraph) -> Result<WisemanReport> {
    guard::check("Wiseman vertices", d.n(), guard::ENUMERATION)?;
    if !d.is_acyclic() {
        return Err(Error::Precondition(format!("{d} is not acyclic")));
    }
    let comp = d.complement();
    let ham = ham_detper(&comp)?;
    let per = BigInt::from(per01(&rows_of(&comp), full_mask(d.n())));
    let covers = enumerate_cycle_covers(&comp)?.len();
    Ok(WisemanReport {
        passed: ham == per && per == BigInt::from(covers),
        ham_complement: ham.to_string(),
        permanent: per.to_string(),
        cycle_covers: covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{
        all_digraphs, all_tournaments, complete_digraph, cycle_digraph, figure_one, random_digraph,
        random_tournament,
    };
    use crate::matrix::{permanent_ryser, RingMatrix};

    #[test]
    fn figure_one_counts() {
        let d = figure_one();
        assert_eq!(ham_detper(&d).unwrap(), 1.into());
        assert_eq!(ham_dp(&d).unwrap(), 1.into());
        assert_eq!(ham_detper(&d.complement()).unwrap(), 3.into());
        let r = parity_suite(&d).unwrap();
        assert_eq!((r.ham, r.ham_complement, r.berge, r.redei), (1, 3, true, None));
    }

    #[test]
    fn empty_and_complete() {
        let zero = Digraph::new(0).unwrap();
        assert_eq!(ham_detper(&zero).unwrap(), 1.into());
        assert_eq!(ham_dp(&zero).unwrap(), 1.into());
        for n in 1..=7 {
            let fact: u64 = (1..=n as u64).product();
            let k = complete_digraph(n, false).unwrap();
            assert_eq!(ham_dp(&k).unwrap(), fact.into());
            assert_eq!(ham_detper(&k).unwrap(), fact.into());
        }
        let e = Digraph::new(3).unwrap();
        let r = parity_suite(&e).unwrap();
        assert_eq!((r.ham, r.ham_complement), (0, 6));
    }

    #[test]
    fn path_routes_agree() {
        for n in 0..=3 {
            for d in all_digraphs(n).unwrap() {
                let b = ham_bruteforce(&d).unwrap();
                assert_eq!(ham_detper(&d).unwrap(), b, "{d}");
                assert_eq!(ham_dp(&d).unwrap(), b, "{d}");
            }
        }
        for seed in 0..40 {
            let d = random_digraph(4 + (seed as usize % 5), 0.5, seed).unwrap();
            let b = ham_bruteforce(&d).unwrap();
            assert_eq!(ham_detper(&d).unwrap(), b, "{d}");
            assert_eq!(ham_dp(&d).unwrap(), b, "{d}");
        }
    }

    #[test]
    fn cycle_routes_agree() {
        let c3 = cycle_digraph(3).unwrap();
        let k4 = complete_digraph(4, false).unwrap();
        for (d, want) in [(&c3, 1), (&k4, 6)] {
            for i in 0..d.n() {
                assert_eq!(ham_cycles(d, CycleRoute::FormulaA(i)).unwrap(), want.into());
            }
            assert_eq!(ham_cycles(d, CycleRoute::FormulaB).unwrap(), want.into());
            assert_eq!(ham_cycles(d, CycleRoute::BruteForce).unwrap(), want.into());
        }
        let mut one = Digraph::new(1).unwrap();
        for route in [CycleRoute::FormulaA(0), CycleRoute::FormulaB, CycleRoute::BruteForce] {
            assert_eq!(ham_cycles(&one, route).unwrap(), 0.into());
        }
        one.add_edge(0, 0).unwrap();
        for route in [CycleRoute::FormulaA(0), CycleRoute::FormulaB, CycleRoute::BruteForce] {
            assert_eq!(ham_cycles(&one, route).unwrap(), 1.into());
        }
        assert!(ham_cycles(&k4, CycleRoute::FormulaA(4)).is_err());
        for seed in 0..20 {
            let d = random_digraph(2 + seed as usize % 5, 0.6, seed).unwrap();
            let b = ham_cycles(&d, CycleRoute::BruteForce).unwrap();
            assert_eq!(ham_cycles(&d, CycleRoute::FormulaB).unwrap(), b);
            for i in 0..d.n() {
                assert_eq!(ham_cycles(&d, CycleRoute::FormulaA(i)).unwrap(), b, "{d}, i = {i}");
            }
        }
    }

    #[test]
    fn per01_matches_ryser() {
        for seed in 0..10 {
            let d = random_digraph(6, 0.5, seed).unwrap();
            let want = permanent_ryser(&RingMatrix::adjacency(&d)).unwrap();
            assert_eq!(BigInt::from(per01(&rows_of(&d), full_mask(6))), want);
        }
    }

    #[test]
    fn redei_and_berge() {
        for n in 1..=4 {
            for t in all_tournaments(n).unwrap() {
                assert!(parity_suite(&t).unwrap().passed(), "{t}");
            }
        }
        for seed in 0..5 {
            let t = random_tournament(9, seed).unwrap();
            assert_eq!(parity_suite(&t).unwrap().redei, Some(true));
        }
    }

    #[test]
    fn wiseman() {
        let tree = Digraph::from_one_based(4, &[(4, 3), (3, 2), (3, 1)]).unwrap();
        assert!(wiseman_check(&tree).unwrap().passed);
        let star = Digraph::star_from_sizes(&[2, 1]).unwrap();
        assert!(wiseman_check(&star).unwrap().passed);
        let r = wiseman_check(&Digraph::new(4).unwrap()).unwrap();
        assert_eq!(r.cycle_covers, 24);
        assert!(wiseman_check(&cycle_digraph(3).unwrap()).is_err());
    }

    #[test]
    fn report_json() {
        let r = ham_report(&figure_one(), true, true).unwrap();
        assert!(r.agree);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["ham_paths"], 1);
        assert_eq!(v["ham_cycles"], 0);
    }
}
