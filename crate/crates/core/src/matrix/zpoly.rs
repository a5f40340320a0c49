use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ring;

/// A polynomial in one variable `z` with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// `c0 + c1 z`
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::new(vec![BigInt::from(c0), BigInt::from(c1)])
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(<BigInt as Zero>::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `p(-z)`
    pub fn reflect(&self) -> Self {
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn truncate(&self, order: usize) -> Self {
        ZPoly::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// `num / den mod z^{order+1}`; `den` must have constant term ±1 so the
    /// quotient stays integral.
    pub fn series_div(num: &ZPoly, den: &ZPoly, order: usize) -> Option<ZPoly> {
        let d0 = den.coeff(0);
        if d0 != <BigInt as One>::one() && d0 != -<BigInt as One>::one() {
            return None;
        }
        let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut r = num.coeff(k);
            for (i, qi) in q.iter().enumerate() {
                r -= qi * den.coeff(k - i);
            }
            q.push(r * &d0);
        }
        Some(ZPoly::new(q))
    }
}

impl Ring for ZPoly {
    fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        ZPoly::new(vec![<BigInt as One>::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        ZPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![<BigInt as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        ZPoly::new(c)
    }
    fn neg(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_i64(v: i64) -> Self {
        ZPoly::new(vec![BigInt::from(v)])
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}
