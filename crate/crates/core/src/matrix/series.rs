use num_bigint::BigInt;

use crate::combinatorics::Partition;
use crate::error::Result;
use crate::guard;
use crate::symfun::{Basis, Rational, SymFun};

use super::{MultilinearPoly, RingMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `H_z(XA) = Σ_k h_k (XA)^k`
    H,
    /// `E_z(XA) = Σ_k e_k (XA)^k`
    E,
}

fn xa(a: &RingMatrix<i64>) -> RingMatrix<MultilinearPoly<BigInt>> {
    RingMatrix::from_fn(a.n(), |i, j| {
        MultilinearPoly::monomial(1 << i, BigInt::from(*a.get(i, j)))
    })
}

/// `Σ_{k=0}^{n} (XA)^k`, which is `(I - XA)^{-1}` exactly: `(XA)^{n+1}`
/// vanishes once every variable squares to zero.
pub fn geometric_series(a: &RingMatrix<i64>) -> RingMatrix<MultilinearPoly<BigInt>> {
    let n = a.n();
    let step = xa(a);
    let mut power = RingMatrix::identity(n);
    let mut acc = power.clone();
    for _ in 0..n {
        power = power.mul(&step);
        acc = acc.add(&power);
    }
    acc
}

/// `H_z(XA)` or `E_z(XA)`: every entry of `(XA)^k` has supports of size
/// exactly `k`, so the geometric series is retagged term by term with
/// `h_k` or `e_k`.
pub fn matrix_series(a: &RingMatrix<i64>, kind: SeriesKind) -> Result<RingMatrix<MultilinearPoly<SymFun>>> {
    guard::check("matrix series size", a.n(), guard::MATRIX_ROUTE)?;
    let basis = match kind {
        SeriesKind::H => Basis::H,
        SeriesKind::E => Basis::E,
    };
    Ok(geometric_series(a).map(|entry| {
        entry.map_coeffs(|mask, c| {
            let tag = SymFun::basis_element(basis, Partition::row(mask.count_ones()));
            tag.scale(&Rational::from_integer(c.clone()))
        })
    }))
}
