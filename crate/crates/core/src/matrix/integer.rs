//! Exact kernels for integer matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{character, next_permutation, partitions_of, Partition, Permutation};
use crate::error::{Error, Result};
use crate::guard;

use super::RingMatrix;

/// Fraction-free (Bareiss) determinant. The 0×0 determinant is 1.
pub fn det_bareiss(m: &RingMatrix<i64>) -> BigInt {
    let n = m.n();
    let mut a: Vec<i128> = (0..n * n).map(|k| *m.get(k / n, k % n) as i128).collect();
    match bareiss_i128(&mut a, n) {
        Some(d) => BigInt::from(d),
        None => {
            let mut b: Vec<BigInt> = (0..n * n).map(|k| BigInt::from(*m.get(k / n, k % n))).collect();
            bareiss_big(&mut b, n)
        }
    }
}

pub(crate) fn bareiss_i128(a: &mut [i128], n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i * n + j].checked_mul(pivot)?;
                let y = a[i * n + k].checked_mul(a[k * n + j])?;
                a[i * n + j] = x.checked_sub(y)? / prev;
            }
        }
        prev = pivot;
    }
    Some(if n == 0 { 1 } else { sign * a[n * n - 1] })
}

fn bareiss_big(a: &mut [BigInt], n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    let d = if n == 0 { BigInt::one() } else { a[n * n - 1].clone() };
    if negate {
        -d
    } else {
        d
    }
}

/// Ryser's inclusion–exclusion permanent with Gray-code column updates.
/// The 0×0 permanent is 1.
pub fn permanent_ryser(m: &RingMatrix<i64>) -> Result<BigInt> {
    guard::check("permanent size", m.n(), guard::RYSER)?;
    let n = m.n();
    let rows: Vec<Vec<i64>> = m.rows();
    Ok(match ryser_i128(&rows, n) {
        Some(v) => BigInt::from(v),
        None => ryser_big(&rows, n),
    })
}

pub(crate) fn ryser_i128(rows: &[Vec<i64>], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sums = vec![0i128; n];
    let mut total = 0i128;
    let mut in_set = 0u64;
    for k in 1u64..(1 << n) {
        let j = k.trailing_zeros() as usize;
        let adding = in_set & (1 << j) == 0;
        in_set ^= 1 << j;
        for (s, row) in sums.iter_mut().zip(rows) {
            if adding {
                *s += row[j] as i128;
            } else {
                *s -= row[j] as i128;
            }
        }
        let mut prod = 1i128;
        for &s in &sums {
            prod = prod.checked_mul(s)?;
            if prod == 0 {
                break;
            }
        }
        if in_set.count_ones() % 2 == 1 {
            total = total.checked_sub(prod)?;
        } else {
            total = total.checked_add(prod)?;
        }
    }
    Some(if n % 2 == 1 { -total } else { total })
}

fn ryser_big(rows: &[Vec<i64>], n: usize) -> BigInt {
    let mut sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut in_set = 0u64;
    for k in 1u64..(1 << n) {
        let j = k.trailing_zeros() as usize;
        let adding = in_set & (1 << j) == 0;
        in_set ^= 1 << j;
        for (s, row) in sums.iter_mut().zip(rows) {
            if adding {
                *s += row[j];
            } else {
                *s -= row[j];
            }
        }
        let prod: BigInt = sums.iter().product();
        if in_set.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// `Imm_λ(M) = Σ_σ χ^λ(σ) ∏ M_{i,σ(i)}` by direct summation over `𝔖_n`.
pub fn immanant(m: &RingMatrix<i64>, lambda: &Partition) -> Result<BigInt> {
    let n = m.n();
    if lambda.weight() != n {
        return Err(Error::WeightMismatch {
            left: lambda.clone(),
            right: Partition::column(n as u32),
        });
    }
    guard::check("immanant size", n, guard::IMMANANT)?;
    let chars: HashMap<Partition, i64> = partitions_of(n)?
        .into_iter()
        .map(|mu| {
            let c = character(lambda, &mu).expect("weights agree");
            (mu, c)
        })
        .collect();
    let mut word: Vec<usize> = (0..n).collect();
    let mut acc = BigInt::zero();
    loop {
        let mut prod = 1i128;
        for (i, &j) in word.iter().enumerate() {
            prod *= *m.get(i, j) as i128;
            if prod == 0 {
                break;
            }
        }
        if prod != 0 {
            let sigma = Permutation::from_images(word.clone()).expect("word is a permutation");
            acc += BigInt::from(prod) * chars[&sigma.cycle_type()];
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(acc)
}
