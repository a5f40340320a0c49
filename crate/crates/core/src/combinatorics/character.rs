//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, using beta-sets: removing a border strip of length `k` from `λ`
//! moves one bead of the beta-set down by `k`, with sign given by the number
//! of beads jumped over.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ^λ(μ)`: the irreducible character indexed by `lambda` evaluated on the
/// conjugacy class of cycle type `mu`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.clone(),
            right: mu.clone(),
        });
    }
    Ok(character_unchecked(lambda, mu))
}

pub(crate) fn character_unchecked(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }

    let strip = mu.part(0) as usize;
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let len = lambda.len();
    // beta_i = λ_i + (ℓ - 1 - i), strictly decreasing
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) as usize + len - 1 - i).collect();
    let mut value = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape = from_beta(&moved);
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        value += sign * character_unchecked(&shape, &rest);
    }

    memo().write().unwrap().insert(key, value);
    value
}

fn from_beta(beta: &[usize]) -> Partition {
    let len = beta.len();
    Partition::new(beta.iter().enumerate().map(|(i, &b)| (b - (len - 1 - i)) as u32).collect::<Vec<_>>())
}
