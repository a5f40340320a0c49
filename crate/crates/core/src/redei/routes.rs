//! The general-purpose routes to `U_D`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::{Partition, Permutation};
use crate::digraph::{enumerate_path_covers, full_mask, perms_with_cycles_in_either, Digraph};
use crate::error::{Error, Result};
use crate::guard;
use crate::matrix::{matrix_series, RingMatrix, SeriesKind};
use crate::symfun::{fundamental_f, Basis, MultivarPoly, Rational, SymFun};

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Sums `F_{Des_D(π)}` over `π ∈ 𝔖_n` in `n` variables and lifts the
/// result to the `m̃` basis. The lift fails with `NotSymmetric` unless the
/// polynomial is exactly symmetric.
pub fn u_via_fundamental(d: &Digraph) -> Result<(MultivarPoly, SymFun)> {
    let n = d.n();
    guard::check("fundamental route vertices", n, guard::FUNDAMENTAL_ROUTE)?;
    let mut by_descents: BTreeMap<u64, u64> = BTreeMap::new();
    for pi in Permutation::all(n) {
        *by_descents.entry(d.descent_set(&pi)).or_default() += 1;
    }
    let mut poly = MultivarPoly::zero(n);
    for (mask, count) in by_descents {
        poly = poly.add(&fundamental_f(mask, n, n).scale(&int(count)));
    }
    let lifted = lift_to_mtilde(&poly, n)?;
    Ok((poly, lifted))
}

/// Reads a symmetric polynomial of degree `n` in `n` variables off its
/// dominant exponents: the coefficient of `z^λ` is the `m_λ` coefficient.
fn lift_to_mtilde(poly: &MultivarPoly, n: usize) -> Result<SymFun> {
    let mut f = SymFun::zero(Basis::MTilde);
    for (exps, c) in poly.terms() {
        let is_partition = exps.windows(2).all(|w| w[0] >= w[1]);
        if is_partition {
            let lambda = Partition::new(exps.clone());
            let r = Rational::from_integer(lambda.multiplicity_factorial());
            f.add_term(lambda, c / r);
        }
    }
    let back = f.specialize(n)?;
    if back != *poly {
        let residual = poly.add(&back.scale(&int(-1)));
        let exps = residual.terms().next().map(|(e, _)| e.clone()).unwrap_or_default();
        return Err(Error::NotSymmetric(exps));
    }
    Ok(f)
}

/// `Σ_S m̃_{path(S)}` over the path covers `S` of the complement.
pub fn u_via_path_covers(d: &Digraph) -> Result<SymFun> {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for s in enumerate_path_covers(&d.complement())? {
        *counts.entry(s.path_partition()).or_default() += 1;
    }
    Ok(SymFun::from_terms(
        Basis::MTilde,
        counts.into_iter().map(|(l, c)| (l, int(c))),
    ))
}

/// `Σ (-1)^{φ(σ)} p_{cyc(σ)}` over permutations whose cycles are all
/// cycles of `D` or of its complement.
pub fn u_via_powersum_gs(d: &Digraph) -> Result<SymFun> {
    let mut f = SymFun::zero(Basis::P);
    for sigma in perms_with_cycles_in_either(d, full_mask(d.n()))? {
        let sign = if sigma.phi(d) % 2 == 0 { 1 } else { -1 };
        f.add_term(sigma.cycle_type(), int(sign));
    }
    Ok(f)
}

/// The double sum over `I ⊆ [n]`, `σ ∈ 𝔖_{I^c}`, `τ ∈ 𝔖_I`, with the
/// adjacency products used literally as weights.
pub fn u_via_subset_formula(d: &Digraph) -> Result<SymFun> {
    let n = d.n();
    guard::check("subset route vertices", n, guard::SUBSET_ROUTE)?;
    let a = d.adjacency();
    let weighted = |mask: u64, signed: bool, entry: &dyn Fn(usize, usize) -> i64| {
        let mut f = SymFun::zero(Basis::P);
        for sigma in Permutation::all_on(n, mask) {
            let w: i64 = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| entry(i, sigma.apply(i)))
                .product();
            if w != 0 {
                let s = if signed { sigma.sign() } else { 1 };
                f.add_term(sigma.cycle_type(), int(w * s));
            }
        }
        f
    };
    let full = full_mask(n);
    let mut total = SymFun::zero(Basis::P);
    for i_set in 0..=full {
        let tau_part = weighted(i_set, true, &|i, j| a[i][j]);
        if tau_part.is_zero() {
            continue;
        }
        let sigma_part = weighted(full & !i_set, false, &|i, j| 1 - a[i][j]);
        total = total.add(&sigma_part.multiply(&tau_part)?)?;
    }
    Ok(total)
}

/// `𝔏_n det H_z(XĀ) · det E_z(XA)`. Both determinants are expanded over
/// the multilinear ring; the product only needs complementary supports.
pub fn u_via_matrix_route(d: &Digraph) -> Result<SymFun> {
    let n = d.n();
    guard::check("matrix route vertices", n, guard::MATRIX_ROUTE)?;
    let a = RingMatrix::adjacency(d);
    let abar = RingMatrix::adjacency(&d.complement());
    let dh = matrix_series(&abar, SeriesKind::H)?.determinant();
    let de = matrix_series(&a, SeriesKind::E)?.determinant();
    let full = full_mask(n);
    let mut total = SymFun::zero(Basis::P);
    for (&mask, e_coeff) in de.terms() {
        let h_coeff = dh.coeff_extract(full & !mask);
        if h_coeff.is_zero() {
            continue;
        }
        let term = h_coeff.convert(Basis::P)?.multiply(&e_coeff.convert(Basis::P)?)?;
        total = total.add(&term)?;
    }
    Ok(total)
}

/// `Σ_P z_1^{|P_1|} ⋯ z_N^{|P_N|}` over sequences of `N` vertex-disjoint,
/// possibly empty paths of the complement covering every vertex.
pub fn path_sequence_polynomial(d: &Digraph, nvars: usize) -> Result<MultivarPoly> {
    guard::check("path sequence vertices", d.n(), guard::ENUMERATION)?;
    let comp = d.complement();
    // paths[mask] = number of directed paths of the complement on vertex set mask
    let n = d.n();
    let mut by_set = vec![0u64; 1 << n];
    let mut ends = vec![0u64; (1usize << n) * n.max(1)];
    for v in 0..n {
        ends[(1usize << v) * n + v] = 1;
    }
    for mask in 1usize..1 << n {
        for v in 0..n {
            let c = ends[mask * n + v];
            if c == 0 {
                continue;
            }
            by_set[mask] += c;
            let mut next = comp.out_mask(v) & !(mask as u64);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[(mask | 1 << w) * n + w] += c;
            }
        }
    }
    by_set[0] = 1; // the empty path
    let mut out = MultivarPoly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    fill(&by_set, full_mask(n) as usize, 0, 1, &mut exps, &mut out);
    Ok(out)
}

fn fill(by_set: &[u64], remaining: usize, pos: usize, weight: u64, exps: &mut Vec<u32>, out: &mut MultivarPoly) {
    if pos == exps.len() {
        if remaining == 0 {
            out.add_term(exps.clone(), int(weight));
        }
        return;
    }
    // every subset of the remaining vertices, the empty one included
    let mut sub = remaining;
    loop {
        let c = by_set[sub];
        if c != 0 {
            exps[pos] = sub.count_ones();
            fill(by_set, remaining & !sub, pos + 1, weight * c, exps, out);
            exps[pos] = 0;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & remaining;
    }
}
