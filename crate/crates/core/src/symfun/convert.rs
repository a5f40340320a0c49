//! Transition coefficients between the power sums and the other bases.
//!
//! * `h`, `e` → `p`: `h_k = Σ p_μ / z_μ`, `e_k = Σ ε_μ p_μ / z_μ`.
//! * `p` → `h`, `e`: Newton's identities.
//! * `s` ↔ `p`: characters, `p_μ = Σ χ^λ(μ) s_λ`, `s_λ = Σ χ^λ(μ) p_μ / z_μ`.
//! * `p` → `m`: the coefficient of `z^λ` in `p_μ`, read off by counting the
//!   ways to distribute the parts of `μ` over the rows of `λ`.
//! * `m` → `p`: triangular solve of the previous system, reverse
//!   lexicographic order being a linear extension of dominance.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat, Basis, Rational, SymFun};
use crate::combinatorics::{character_unchecked, partitions_of, Partition};

type Terms = BTreeMap<Partition, Rational>;
type Cache = RwLock<HashMap<(Basis, Partition), Arc<Terms>>>;

fn to_p_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn from_p_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cached(cache: &Cache, key: (Basis, Partition), build: impl FnOnce() -> Terms) -> Arc<Terms> {
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let value = Arc::new(build());
    cache.write().unwrap().insert(key, value.clone());
    value
}

fn add_into(acc: &mut Terms, l: Partition, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(l).or_insert_with(Rational::zero);
    *e += c;
}

fn prune(mut t: Terms) -> Terms {
    t.retain(|_, c| !c.is_zero());
    t
}

fn concat(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (x, c) in a {
        for (y, d) in b {
            add_into(&mut out, x.union(y), c * d);
        }
    }
    prune(out)
}

fn single(l: Partition) -> Terms {
    let mut t = Terms::new();
    t.insert(l, Rational::one());
    t
}

pub(super) fn to_power_sums(f: &SymFun) -> SymFun {
    let mut out = Terms::new();
    for (l, c) in &f.terms {
        let expansion = basis_in_p(f.basis, l);
        for (mu, d) in expansion.iter() {
            add_into(&mut out, mu.clone(), c * d);
        }
    }
    SymFun {
        basis: Basis::P,
        terms: prune(out),
    }
}

pub(super) fn from_power_sums(f: &SymFun, target: Basis) -> SymFun {
    debug_assert_eq!(f.basis, Basis::P);
    let mut out = Terms::new();
    for (mu, c) in &f.terms {
        let expansion = p_in_basis(target, mu);
        for (l, d) in expansion.iter() {
            add_into(&mut out, l.clone(), c * d);
        }
    }
    SymFun {
        basis: target,
        terms: prune(out),
    }
}

/// `b_λ` expanded in power sums.
fn basis_in_p(basis: Basis, l: &Partition) -> Arc<Terms> {
    if basis == Basis::P {
        return Arc::new(single(l.clone()));
    }
    cached(to_p_cache(), (basis, l.clone()), || match basis {
        Basis::P => unreachable!(),
        Basis::H | Basis::E => l.parts().iter().fold(single(Partition::empty()), |acc, &k| {
            let factor = one_part_in_p(basis, k);
            concat(&acc, &factor)
        }),
        Basis::S => {
            let mut t = Terms::new();
            for mu in partitions_of(l.weight()).expect("guarded degree") {
                let chi = character_unchecked(l, &mu);
                add_into(&mut t, mu.clone(), Rational::new(BigInt::from(chi), mu.z_lambda()));
            }
            prune(t)
        }
        Basis::M => monomial_in_p(l),
        Basis::MTilde => {
            let r = Rational::from_integer(l.multiplicity_factorial());
            basis_in_p(Basis::M, l).iter().map(|(mu, c)| (mu.clone(), c * &r)).collect()
        }
    })
}

/// `h_k` or `e_k` in power sums.
fn one_part_in_p(basis: Basis, k: u32) -> Terms {
    let mut t = Terms::new();
    for mu in partitions_of(k as usize).expect("guarded degree") {
        let sign = if basis == Basis::E { mu.sign() } else { 1 };
        add_into(&mut t, mu.clone(), Rational::new(BigInt::from(sign), mu.z_lambda()));
    }
    t
}

/// `p_μ` expanded in `basis`.
fn p_in_basis(basis: Basis, mu: &Partition) -> Arc<Terms> {
    if basis == Basis::P {
        return Arc::new(single(mu.clone()));
    }
    cached(from_p_cache(), (basis, mu.clone()), || match basis {
        Basis::P => unreachable!(),
        Basis::H | Basis::E => mu.parts().iter().fold(single(Partition::empty()), |acc, &k| {
            concat(&acc, &newton(basis, k))
        }),
        Basis::S => {
            let mut t = Terms::new();
            for l in partitions_of(mu.weight()).expect("guarded degree") {
                add_into(&mut t, l.clone(), rat(character_unchecked(&l, mu)));
            }
            prune(t)
        }
        Basis::M => {
            let mut t = Terms::new();
            for l in partitions_of(mu.weight()).expect("guarded degree") {
                add_into(&mut t, l.clone(), Rational::from_integer(BigInt::from(distributions(mu, &l))));
            }
            prune(t)
        }
        Basis::MTilde => p_in_basis(Basis::M, mu)
            .iter()
            .map(|(l, c)| (l.clone(), c / Rational::from_integer(l.multiplicity_factorial())))
            .collect(),
    })
}

/// `p_k` in the `h` or `e` basis by Newton's identities:
/// `p_k = k h_k - Σ_{i<k} p_i h_{k-i}` and
/// `p_k = (-1)^{k-1} (k e_k - Σ_{i<k} (-1)^{i-1} e_{k-i} p_i)`.
fn newton(basis: Basis, k: u32) -> Terms {
    cached(from_p_cache(), (basis, Partition::row(k)), || {
        let mut t = Terms::new();
        add_into(&mut t, Partition::row(k), rat(k as i64));
        for i in 1..k {
            let lower = newton(basis, i);
            let shifted = concat(&lower, &single(Partition::row(k - i)));
            let sign = if basis == Basis::E && (i - 1) % 2 == 1 { -1 } else { 1 };
            for (l, c) in shifted {
                add_into(&mut t, l, -c * rat(sign));
            }
        }
        if basis == Basis::E && (k - 1) % 2 == 1 {
            t = t.into_iter().map(|(l, c)| (l, -c)).collect();
        }
        prune(t)
    })
    .as_ref()
    .clone()
}

/// Number of ways to place the parts of `mu` into the rows of `lambda` so
/// that each row is filled exactly: the coefficient of `z^λ` in `p_μ`.
pub(crate) fn distributions(mu: &Partition, lambda: &Partition) -> u64 {
    fn go(parts: &[u32], room: &mut [u32]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= first {
                room[i] -= first;
                total += go(rest, room);
                room[i] += first;
            }
        }
        total
    }
    if mu.weight() != lambda.weight() {
        return 0;
    }
    let mut room = lambda.parts().to_vec();
    go(mu.parts(), &mut room)
}

/// `m_λ` in power sums, solving `p_μ = Σ_{ν ≥ μ} R(μ, ν) m_ν` from the top
/// of the reverse lexicographic order downwards.
fn monomial_in_p(lambda: &Partition) -> Terms {
    let diagonal = distributions(lambda, lambda);
    let mut t = single(lambda.clone());
    for nu in partitions_of(lambda.weight()).expect("guarded degree") {
        if nu >= *lambda {
            // ν comes at or after λ in canonical order, i.e. is lexicographically smaller
            break;
        }
        let r = distributions(lambda, &nu);
        if r == 0 {
            continue;
        }
        let m_nu = basis_in_p(Basis::M, &nu);
        for (mu, c) in m_nu.iter() {
            add_into(&mut t, mu.clone(), -c * rat(r as i64));
        }
    }
    let d = Rational::from_integer(BigInt::from(diagonal));
    prune(t.into_iter().map(|(l, c)| (l, c / &d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_counts() {
        let p = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(distributions(&p(&[1, 1, 1]), &p(&[1, 1, 1])), 6);
        assert_eq!(distributions(&p(&[1, 1, 1]), &p(&[2, 1])), 3);
        assert_eq!(distributions(&p(&[2, 1]), &p(&[1, 1, 1])), 0);
        assert_eq!(distributions(&p(&[3]), &p(&[3])), 1);
    }

    #[test]
    fn newton_low_degrees() {
        let e2 = newton(Basis::E, 2);
        // p_2 = e_1^2 - 2 e_2
        assert_eq!(e2.get(&Partition::new(vec![1, 1])), Some(&rat(1)));
        assert_eq!(e2.get(&Partition::row(2)), Some(&rat(-2)));
        let h3 = newton(Basis::H, 3);
        // p_3 = 3h_3 - 3h_2h_1 + h_1^3
        assert_eq!(h3.get(&Partition::row(3)), Some(&rat(3)));
        assert_eq!(h3.get(&Partition::new(vec![2, 1])), Some(&rat(-3)));
        assert_eq!(h3.get(&Partition::new(vec![1, 1, 1])), Some(&rat(1)));
    }
}
