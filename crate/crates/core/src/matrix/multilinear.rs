use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::Ring;

/// A polynomial in `x_1, x_2, …` modulo `x_i² = 0`, stored as a map from
/// support masks to coefficients. Bit `i` of a mask stands for `x_{i+1}`.
#[derive(Clone, PartialEq)]
pub struct MultilinearPoly<R> {
    terms: BTreeMap<u64, R>,
}

impl<R: Ring> MultilinearPoly<R> {
    pub fn constant(c: R) -> Self {
        let mut p = MultilinearPoly { terms: BTreeMap::new() };
        p.add_term(0, c);
        p
    }

    /// The variable `x_{i+1}` (0-indexed `i`).
    pub fn var(i: usize) -> Self {
        Self::monomial(1 << i, R::one())
    }

    pub fn monomial(mask: u64, c: R) -> Self {
        let mut p = MultilinearPoly { terms: BTreeMap::new() };
        p.add_term(mask, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, mask: u64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `𝔏_I`: the coefficient of `∏_{i ∈ I} x_i`.
    pub fn coeff_extract(&self, mask: u64) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff_extract(0)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut p = MultilinearPoly { terms: BTreeMap::new() };
        for (&m, v) in &self.terms {
            p.add_term(m, v.mul(c));
        }
        p
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(u64, &R) -> S) -> MultilinearPoly<S> {
        let mut p = MultilinearPoly { terms: BTreeMap::new() };
        for (&m, v) in &self.terms {
            p.add_term(m, f(m, v));
        }
        p
    }

    /// Drops every term whose support meets `mask` (sets those variables to 0).
    pub fn kill_vars(&self, mask: u64) -> Self {
        MultilinearPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&m, _)| m & mask == 0)
                .map(|(&m, v)| (m, v.clone()))
                .collect(),
        }
    }

    /// The inverse of a polynomial with constant term 1: `Σ_k (1 - f)^k`,
    /// a finite sum since `1 - f` is nilpotent.
    pub fn inverse_unipotent(&self) -> Option<Self> {
        let c = self.constant_term();
        if !c.sub(&R::one()).is_zero() {
            return None;
        }
        let nil = Self::constant(R::one()).sub(self);
        let mut power = Self::constant(R::one());
        let mut acc = power.clone();
        loop {
            power = Ring::mul(&power, &nil);
            if power.terms.is_empty() {
                return Some(acc);
            }
            acc = Ring::add(&acc, &power);
        }
    }
}

impl<R: Ring> Ring for MultilinearPoly<R> {
    fn zero() -> Self {
        MultilinearPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (&m, v) in &other.terms {
            p.add_term(m, v.clone());
        }
        p
    }
    fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (&a, u) in &self.terms {
            for (&b, v) in &other.terms {
                if a & b == 0 {
                    p.add_term(a | b, u.mul(v));
                }
            }
        }
        p
    }
    fn neg(&self) -> Self {
        MultilinearPoly {
            terms: self.terms.iter().map(|(&m, v)| (m, v.neg())).collect(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
}

impl<R: fmt::Debug> fmt::Debug for MultilinearPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for i in 0..64 {
                if m & (1 << i) != 0 {
                    write!(f, "x{}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type P = MultilinearPoly<BigInt>;

    #[test]
    fn squares_vanish() {
        let s = P::var(0).add(&P::var(1));
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coeff_extract(0b11), BigInt::from(2));
        assert_eq!(sq.constant_term(), BigInt::from(0));
    }

    #[test]
    fn extraction() {
        // x1 x3 + x3 x2
        let f = P::var(0).mul(&P::var(2)).add(&P::var(2).mul(&P::var(1)));
        assert_eq!(f.coeff_extract(0b101), BigInt::from(1));
        assert_eq!(f.coeff_extract(0b110), BigInt::from(1));
        assert_eq!(f.coeff_extract(0), BigInt::from(0));
        let g = f.add(&P::from_i64(7));
        assert_eq!(g.coeff_extract(0), BigInt::from(7));
        assert_eq!(g.kill_vars(0b10).len(), 2);
    }

    #[test]
    fn unipotent_inverse() {
        let f = P::one().add(&P::var(0)).add(&P::var(1).scale(&BigInt::from(3)));
        let inv = f.inverse_unipotent().unwrap();
        assert_eq!(f.mul(&inv), P::one());
        assert!(P::from_i64(2).inverse_unipotent().is_none());
    }
}
