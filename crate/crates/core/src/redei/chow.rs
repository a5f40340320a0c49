//! Chow's path-cycle symmetric function `Ξ_D(z, y)` and its variant `Ξ̂_D`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinatorics::Partition;
use crate::digraph::{for_each_path_cycle_cover, full_mask, perms_with_all_cycles_in, CoverKind, Digraph, FixedPoints};
use crate::error::Result;
use crate::guard;
use crate::symfun::{Basis, Rational, SymFun, TwoAlphabetSymFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowRoute {
    /// enumeration of path-cycle covers
    Direct,
    /// signed double sum over permutations
    Powersum,
}

/// Cover counts keyed by `(path(S), cycle(S))`: the coefficients of
/// `Ξ_D` in the `m̃(z) ⊗ p(y)` basis.
pub fn chow_xi_mtilde(d: &Digraph) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    guard::check("Chow vertices", d.n(), guard::CHOW)?;
    let mut counts: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    for_each_path_cycle_cover(d, CoverKind::PathsAndCycles, |s| {
        *counts.entry((s.path_partition(), s.cycle_partition())).or_default() += 1;
    })?;
    Ok(counts)
}

fn mtilde_in_p(lambda: &Partition) -> Result<SymFun> {
    SymFun::basis_element(Basis::MTilde, lambda.clone()).convert(Basis::P)
}

/// `Ξ_D(z, y)` in the `p(z) ⊗ p(y)` normal form.
pub fn chow_xi(d: &Digraph, route: ChowRoute) -> Result<TwoAlphabetSymFun> {
    guard::check("Chow vertices", d.n(), guard::CHOW)?;
    let mut out = TwoAlphabetSymFun::zero();
    match route {
        ChowRoute::Direct => {
            for ((path, cycle), count) in chow_xi_mtilde(d)? {
                let z = TwoAlphabetSymFun::from_z(&mtilde_in_p(&path)?)?;
                let term = z.mul(&TwoAlphabetSymFun::pure(Partition::empty(), cycle));
                out.add_assign(&term.scale(&Rational::from_integer(count)));
            }
        }
        ChowRoute::Powersum => {
            let n = d.n();
            let full = full_mask(n);
            let comp = d.complement();
            // (cyc σ, cyc τ) -> signed count
            let mut counts: BTreeMap<(Partition, Partition), i64> = BTreeMap::new();
            for i_set in 0..=full {
                let sigmas = perms_with_all_cycles_in(&comp, i_set, FixedPoints::LoopsOnly)?;
                if sigmas.is_empty() {
                    continue;
                }
                let taus = perms_with_all_cycles_in(d, full & !i_set, FixedPoints::LoopsOnly)?;
                for sigma in &sigmas {
                    for tau in &taus {
                        *counts.entry((sigma.cycle_type(), tau.cycle_type())).or_default() += sigma.sign();
                    }
                }
            }
            for ((zs, joint), c) in counts {
                let term = TwoAlphabetSymFun::pure(zs, Partition::empty()).mul(&TwoAlphabetSymFun::joint(&joint));
                out.add_assign(&term.scale(&Rational::from_integer(c.into())));
            }
        }
    }
    Ok(out)
}

/// `Ξ̂_D(z, y) = Σ_S (-2)^{ℓ(cycle(S))} m̃_{path(S)}(z, y) p_{cycle(S)}(y)`.
pub fn chow_xi_hat(d: &Digraph) -> Result<TwoAlphabetSymFun> {
    let mut out = TwoAlphabetSymFun::zero();
    for ((path, cycle), count) in chow_xi_mtilde(d)? {
        let weight = BigInt::from(-2).pow(cycle.len() as u32) * count;
        let paths = TwoAlphabetSymFun::joint_symfun(&mtilde_in_p(&path)?)?;
        let term = paths.mul(&TwoAlphabetSymFun::pure(Partition::empty(), cycle));
        out.add_assign(&term.scale(&Rational::from_integer(weight)));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChowReport {
    /// `[ω_z Ξ_D̄(z, -y)]_{z → (z, y)} = Ξ_D(z, y)`
    pub involution: bool,
    /// `ω_z Ξ̂_D(z, -y) = Ξ̂_D̄(z, y)`
    pub hat_involution: bool,
    pub failure: Option<String>,
}

pub fn verify_chow_identities(d: &Digraph) -> Result<ChowReport> {
    guard::check("Chow identity vertices", d.n(), guard::CHOW_IDENTITIES)?;
    let comp = d.complement();
    let mut failure = None;

    let lhs = chow_xi(&comp, ChowRoute::Direct)?.negate_y().omega_z().substitute_union();
    let rhs = chow_xi(d, ChowRoute::Powersum)?;
    let involution = match lhs.first_difference(&rhs) {
        None => true,
        Some((z, y, a, b)) => {
            failure = Some(format!("involution: coefficient of p{z}(z)p{y}(y) is {a} vs {b}"));
            false
        }
    };

    let lhs = chow_xi_hat(d)?.negate_y().omega_z();
    let rhs = chow_xi_hat(&comp)?;
    let hat_involution = match lhs.first_difference(&rhs) {
        None => true,
        Some((z, y, a, b)) => {
            failure.get_or_insert(format!("hat involution: coefficient of p{z}(z)p{y}(y) is {a} vs {b}"));
            false
        }
    };
    Ok(ChowReport {
        involution,
        hat_involution,
        failure,
    })
}
