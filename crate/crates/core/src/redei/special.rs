//! Closed forms for acyclic digraphs and tournaments.

use num_bigint::BigInt;

use crate::combinatorics::{partitions_of, record_partition, Permutation};
use crate::digraph::{full_mask, perms_with_all_cycles_in, Digraph, FixedPoints};
use crate::error::{Error, Result};
use crate::guard;
use crate::matrix::{immanant, RingMatrix};
use crate::symfun::{Basis, Rational, SymFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcyclicFlavor {
    /// `Σ_σ p_{cyc(σ)} ∏ Ā_{i,σ(i)}`
    Powersum,
    /// `Σ_λ Imm_λ(Ā) s_λ`
    Schur,
    /// `Σ p_{rp(σ)}` over `σ` with no `D`-descents; needs `i > j` on every edge
    Records,
}

pub fn u_acyclic(d: &Digraph, flavor: AcyclicFlavor) -> Result<SymFun> {
    if !d.is_acyclic() {
        return Err(Error::Precondition("digraph is not acyclic".into()));
    }
    let n = d.n();
    let one = |c: i64| Rational::from_integer(c.into());
    match flavor {
        AcyclicFlavor::Powersum => {
            let mut f = SymFun::zero(Basis::P);
            for sigma in perms_with_all_cycles_in(&d.complement(), full_mask(n), FixedPoints::LoopsOnly)? {
                f.add_term(sigma.cycle_type(), one(1));
            }
            Ok(f)
        }
        AcyclicFlavor::Schur => {
            guard::check("immanant size", n, guard::IMMANANT)?;
            let abar = RingMatrix::adjacency(&d.complement());
            let mut f = SymFun::zero(Basis::S);
            for lambda in partitions_of(n)? {
                let v = immanant(&abar, &lambda)?;
                f.add_term(lambda, Rational::from_integer(v));
            }
            Ok(f)
        }
        AcyclicFlavor::Records => {
            if !d.is_strictly_decreasing() {
                return Err(Error::Precondition("every edge (i, j) must have i > j".into()));
            }
            guard::check("permutation enumeration size", n, guard::ENUMERATION)?;
            let mut f = SymFun::zero(Basis::P);
            for sigma in Permutation::all(n) {
                if d.descent_set(&sigma) == 0 {
                    f.add_term(record_partition(&sigma), one(1));
                }
            }
            Ok(f)
        }
    }
}

/// `Σ 2^{ψ(σ)} p_{cyc(σ)}` over `σ ∈ 𝔖(D)` with every cycle of odd length.
pub fn u_tournament(d: &Digraph) -> Result<SymFun> {
    if !d.is_tournament() {
        return Err(Error::Precondition("digraph is not a tournament".into()));
    }
    let mut f = SymFun::zero(Basis::P);
    for sigma in perms_with_all_cycles_in(d, full_mask(d.n()), FixedPoints::Free)? {
        let cyc = sigma.cycle_type();
        if cyc.all_odd() {
            f.add_term(cyc, Rational::from_integer(BigInt::from(1u64 << sigma.psi())));
        }
    }
    Ok(f)
}
