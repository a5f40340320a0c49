//! Path and walk generating polynomials, and a randomized exact check of
//! `W_D(z) = det(I + zXĀ) / det(I - zXA)`.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::guard;
use crate::matrix::{MultilinearPoly, Ring, RingMatrix, ZPoly};

/// `ξ_k(D)`: squarefree generating polynomial of the directed paths on
/// exactly `k` vertices. `ξ_0 = 1`, and `ξ_k = 0` for `k < 0` or `k > n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathPolynomial {
    pub k: i64,
    pub value: MultilinearPoly<BigInt>,
}

/// `ξ_0, …, ξ_n` from one pass of the (vertex set, last vertex) DP.
pub fn xi_all(d: &Digraph) -> Result<Vec<MultilinearPoly<BigInt>>> {
    let n = d.n();
    guard::check("path polynomial vertices", n, guard::HAM_DP)?;
    let mut out = vec![MultilinearPoly::zero(); n + 1];
    out[0] = MultilinearPoly::one();
    if n == 0 {
        return Ok(out);
    }
    // paths[mask * n + v]: paths visiting exactly `mask`, ending at v
    let mut paths = vec![0u64; (1usize << n) * n];
    for v in 0..n {
        paths[(1usize << v) * n + v] = 1;
    }
    for mask in 1usize..1 << n {
        let mut total = 0u64;
        for v in 0..n {
            let c = paths[mask * n + v];
            if c == 0 {
                continue;
            }
            total += c;
            let mut next = d.out_mask(v) & !(mask as u64);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                paths[(mask | 1 << w) * n + w] += c;
            }
        }
        if total != 0 {
            out[mask.count_ones() as usize].add_term(mask as u64, BigInt::from(total));
        }
    }
    Ok(out)
}

pub fn xi(d: &Digraph, k: i64) -> Result<PathPolynomial> {
    let value = if k < 0 || k as usize > d.n() {
        MultilinearPoly::zero()
    } else {
        xi_all(d)?.swap_remove(k as usize)
    };
    Ok(PathPolynomial { k, value })
}

/// `γ_{k+1}(D) = 1ᵀ(XA)^k X 1` at the integer point `x`: the walks with `k`
/// edges, each weighted by the product of its vertices' values.
pub fn gamma(d: &Digraph, k: usize, x: &[i64]) -> Result<BigInt> {
    guard::check("walk length", k, guard::WALK_LENGTH)?;
    if x.len() != d.n() {
        return Err(Error::Precondition(format!(
            "evaluation point has {} coordinates for {} vertices",
            x.len(),
            d.n()
        )));
    }
    Ok(walk_sums(d, k, x).pop().expect("at least one term"))
}

// [γ_1, …, γ_{k+1}] at the point x
fn walk_sums(d: &Digraph, k: usize, x: &[i64]) -> Vec<BigInt> {
    let n = d.n();
    let mut v: Vec<BigInt> = x.iter().map(|&xi| BigInt::from(xi)).collect();
    let mut out = vec![v.iter().sum()];
    for _ in 0..k {
        v = (0..n)
            .map(|i| {
                let s: BigInt = (0..n).filter(|&j| d.has_edge(i, j)).map(|j| &v[j]).sum();
                s * x[i]
            })
            .collect();
        out.push(v.iter().sum());
    }
    out
}

/// `W_D(z)` up to `z^order` at the point `x`, from walk sums.
fn walk_series(d: &Digraph, order: usize, x: &[i64]) -> ZPoly {
    let mut c = vec![<BigInt as One>::one()];
    if order > 0 {
        c.extend(walk_sums(d, order - 1, x));
    }
    ZPoly::new(c)
}

/// `det(I + s·zXA)` as a polynomial in `z`.
fn det_linear(d: &Digraph, x: &[i64], s: i64) -> ZPoly {
    let m = RingMatrix::from_fn(d.n(), |i, j| {
        let a = s * x[i] * d.has_edge(i, j) as i64;
        ZPoly::linear((i == j) as i64, a)
    });
    m.determinant()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkReport {
    pub trials: usize,
    pub order: usize,
    pub acyclic_checked: bool,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks the walk identity, the reciprocal identity `W_D̄(z)·W_D(-z) = 1`,
/// and (for acyclic `D`) `W_D(z) = det(I + zXĀ)`, modulo `z^{order+1}` at
/// `trials` random integer points.
pub fn verify_walk_identity(d: &Digraph, order: usize, trials: usize, seed: u64) -> Result<WalkReport> {
    guard::check("walk identity vertices", d.n(), guard::WALK_VERTICES)?;
    guard::check("walk identity order", order, guard::WALK_LENGTH)?;
    let n = d.n();
    let comp = d.complement();
    let acyclic = d.is_acyclic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = WalkReport {
        trials,
        order,
        acyclic_checked: acyclic,
        passed: true,
        failure: None,
    };
    for t in 0..trials {
        let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        let num = det_linear(&comp, &x, 1);
        let den = det_linear(d, &x, -1);
        let w = walk_series(d, order, &x);
        let quotient = ZPoly::series_div(&num, &den, order).expect("det(I - zXA) has constant term 1");
        let w_bar = walk_series(&comp, order, &x);
        let reciprocal = w_bar.mul(&w.reflect()).truncate(order);
        let failure = if let Some(k) = first_difference(&quotient, &w, order) {
            Some(format!("point {x:?}: coefficient of z^{k} differs ({} vs {})", quotient.coeff(k), w.coeff(k)))
        } else if let Some(k) = first_difference(&reciprocal, &ZPoly::one(), order) {
            Some(format!("point {x:?}: reciprocal identity fails at z^{k}"))
        } else if acyclic && first_difference(&num.truncate(order), &w, order).is_some() {
            Some(format!("point {x:?}: acyclic walk series is not det(I + zXĀ)"))
        } else {
            None
        };
        if let Some(msg) = failure {
            report.passed = false;
            report.failure = Some(format!("trial {t}: {msg}"));
            break;
        }
    }
    Ok(report)
}

fn first_difference(a: &ZPoly, b: &ZPoly, order: usize) -> Option<usize> {
    (0..=order).find(|&k| a.coeff(k) != b.coeff(k))
}

/// Number of Hamiltonian paths read off `ξ_n`.
pub fn ham_from_xi(d: &Digraph) -> Result<BigInt> {
    let all = xi_all(d)?;
    let full = if d.n() == 0 { 0 } else { (1u64 << d.n()) - 1 };
    Ok(all[d.n()].coeff_extract(full))
}
