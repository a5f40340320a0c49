//! Schur-basis routes: Jacobi–Trudi determinants of path polynomials, the
//! immanant / Littlewood–Richardson expansion, and hook coefficients.

use num_bigint::BigInt;

use crate::combinatorics::{partitions_of, Partition, Permutation};
use crate::digraph::{full_mask, Digraph};
use crate::error::{Error, Result};
use crate::guard;
use crate::matrix::{immanant, MultilinearPoly, Ring, RingMatrix};
use crate::symfun::{littlewood_richardson, Basis, Rational, SymFun};
use crate::walks::xi_all;

fn jacobi_trudi(xi: &[MultilinearPoly<BigInt>], lambda: &Partition, full: u64) -> BigInt {
    let l = lambda.len();
    let m = RingMatrix::from_fn(l, |i, j| {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if k < 0 || k as usize >= xi.len() {
            MultilinearPoly::zero()
        } else {
            xi[k as usize].clone()
        }
    });
    m.determinant().coeff_extract(full)
}

/// `[s_λ] U_D` as `𝔏_n det P_λ(D̄)`, checked against `𝔏_n det P_{λᵀ}(D)`.
pub fn schur_coeff_jt(d: &Digraph, lambda: &Partition) -> Result<BigInt> {
    let xi_d = xi_all(d)?;
    let xi_bar = xi_all(&d.complement())?;
    schur_coeff_with(d, lambda, &xi_d, &xi_bar)
}

fn schur_coeff_with(
    d: &Digraph,
    lambda: &Partition,
    xi_d: &[MultilinearPoly<BigInt>],
    xi_bar: &[MultilinearPoly<BigInt>],
) -> Result<BigInt> {
    let n = d.n();
    guard::check("Jacobi-Trudi vertices", n, guard::SCHUR_JT)?;
    if lambda.weight() != n {
        return Err(Error::WeightMismatch {
            left: lambda.clone(),
            right: Partition::column(n as u32),
        });
    }
    let full = full_mask(n);
    let first = jacobi_trudi(xi_bar, lambda, full);
    let second = jacobi_trudi(xi_d, &lambda.conjugate(), full);
    if first != second {
        return Err(Error::Mismatch(format!(
            "Jacobi-Trudi forms disagree at {lambda}: {first} vs {second}"
        )));
    }
    Ok(first)
}

/// Every Schur coefficient by the Jacobi–Trudi route.
pub fn u_via_schur_jt(d: &Digraph) -> Result<SymFun> {
    let xi_d = xi_all(d)?;
    let xi_bar = xi_all(&d.complement())?;
    let mut f = SymFun::zero(Basis::S);
    for lambda in partitions_of(d.n())? {
        let c = schur_coeff_with(d, &lambda, &xi_d, &xi_bar)?;
        f.add_term(lambda, Rational::from_integer(c));
    }
    Ok(f)
}

/// `Σ_I Σ_{λ, μ} Imm_λ Ā[I^c] · Imm_{μᵀ} A[I] · s_λ s_μ`, with products of
/// Schur functions resolved by Littlewood–Richardson coefficients.
pub fn u_via_immanant_lr(d: &Digraph) -> Result<SymFun> {
    let n = d.n();
    guard::check("immanant route vertices", n, guard::IMMANANT_ROUTE)?;
    let a = RingMatrix::adjacency(d);
    let abar = RingMatrix::adjacency(&d.complement());
    let full = full_mask(n);
    let targets = partitions_of(n)?;
    let mut f = SymFun::zero(Basis::S);
    for i_set in 0..=full {
        let inner = a.principal(i_set);
        let outer = abar.principal(full & !i_set);
        let mut left = Vec::new();
        for lambda in partitions_of(outer.n())? {
            let v = immanant(&outer, &lambda)?;
            if v != BigInt::from(0) {
                left.push((lambda, v));
            }
        }
        let mut right = Vec::new();
        for mu in partitions_of(inner.n())? {
            let v = immanant(&inner, &mu.conjugate())?;
            if v != BigInt::from(0) {
                right.push((mu, v));
            }
        }
        for (lambda, x) in &left {
            for (mu, y) in &right {
                for nu in &targets {
                    let c = littlewood_richardson(lambda, mu, nu)?;
                    if c != BigInt::from(0) {
                        f.add_term(nu.clone(), Rational::from_integer(x * y * c));
                    }
                }
            }
        }
    }
    Ok(f)
}

/// A hook coefficient computed two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCoefficient {
    pub i: usize,
    pub schur: BigInt,
    pub descent_count: BigInt,
}

/// `[s_{(i,1^{n-i})}] U_D` by Jacobi–Trudi, checked against the number of
/// permutations with `Des_D(σ) = {i, …, n-1}`.
pub fn hook_coefficient(d: &Digraph, i: usize) -> Result<HookCoefficient> {
    let n = d.n();
    if i == 0 || i > n {
        return Err(Error::Precondition(format!("hook index {i} not in 1..={n}")));
    }
    guard::check("hook coefficient vertices", n, guard::SCHUR_JT)?;
    let schur = schur_coeff_jt(d, &Partition::hook(i as u32, n as u32))?;
    let target: u64 = (i..n).fold(0, |m, pos| m | 1 << (pos - 1));
    let count = Permutation::all(n).iter().filter(|p| d.descent_set(p) == target).count();
    let descent_count = BigInt::from(count);
    if schur != descent_count {
        return Err(Error::Mismatch(format!(
            "hook ({i},1^{}) coefficient {schur} but {descent_count} permutations",
            n - i
        )));
    }
    Ok(HookCoefficient { i, schur, descent_count })
}
