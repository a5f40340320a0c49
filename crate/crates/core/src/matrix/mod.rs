//! Matrices over commutative coefficient rings: integers, rationals,
//! symmetric functions, and multilinear polynomials over any of these.
//!
//! Determinants over general rings use the column-subset expansion, which
//! never divides and so works in the nilpotent multilinear quotient.

pub(crate) mod integer;
mod multilinear;
mod series;
mod zpoly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{next_permutation, Permutation};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::symfun::{Basis, Rational, SymFun};

pub use integer::{det_bareiss, immanant, permanent_ryser};
pub use multilinear::MultilinearPoly;
pub use series::{geometric_series, matrix_series, SeriesKind};
pub use zpoly::ZPoly;

/// A commutative ring with identity.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if v < 0 { Self::one().neg() } else { Self::one() };
        for _ in 0..v.unsigned_abs() {
            acc = acc.add(&unit);
        }
        acc
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

// Products stay within the degree guard for every matrix size the routes
// accept, so the guarded operations cannot fail here.
impl Ring for SymFun {
    fn zero() -> Self {
        SymFun::zero(Basis::P)
    }
    fn one() -> Self {
        SymFun::one(Basis::P)
    }
    fn is_zero(&self) -> bool {
        SymFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SymFun::add(self, other).expect("symmetric function degree within guard")
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("symmetric function degree within guard")
    }
    fn neg(&self) -> Self {
        SymFun::neg(self)
    }
    fn from_i64(v: i64) -> Self {
        SymFun::one(Basis::P).scale(&Rational::from_integer(BigInt::from(v)))
    }
}

/// A square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Clone> RingMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix must be square".into()));
        }
        Ok(RingMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        RingMatrix {
            n,
            entries: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// The principal submatrix on the index set `mask`.
    pub fn principal(&self, mask: u64) -> RingMatrix<T> {
        let idx: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).collect();
        RingMatrix::from_fn(idx.len(), |a, b| self.get(idx[a], idx[b]).clone())
    }

    pub fn transpose(&self) -> RingMatrix<T> {
        RingMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> RingMatrix<U> {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl RingMatrix<i64> {
    /// The 0/1 adjacency matrix of `d`.
    pub fn adjacency(d: &Digraph) -> Self {
        RingMatrix::from_fn(d.n(), |i, j| d.has_edge(i, j) as i64)
    }

    pub fn to_bigint(&self) -> RingMatrix<BigInt> {
        self.map(|&v| BigInt::from(v))
    }
}

impl<R: Ring> RingMatrix<R> {
    pub fn identity(n: usize) -> Self {
        RingMatrix::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        RingMatrix::from_fn(n, |i, j| {
            (0..n).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// Determinant by expansion over column subsets: `O(n·2^n)` ring
    /// operations and no division.
    pub fn determinant(&self) -> R {
        self.subset_expansion(true)
    }

    /// Permanent by the same expansion without signs.
    pub fn permanent(&self) -> R {
        self.subset_expansion(false)
    }

    fn subset_expansion(&self, signed: bool) -> R {
        let n = self.n;
        // minors[S] = signed sum over bijections rows 0..|S| -> columns S
        let mut minors: Vec<Option<R>> = vec![None; 1 << n];
        minors[0] = Some(R::one());
        for s in 0..(1usize << n) {
            let Some(m) = minors[s].take() else { continue };
            if s == (1 << n) - 1 {
                return m;
            }
            let row = s.count_ones() as usize;
            for j in 0..n {
                if s & (1 << j) != 0 {
                    continue;
                }
                let a = self.get(row, j);
                if a.is_zero() {
                    continue;
                }
                let mut term = m.mul(a);
                if signed && (s >> (j + 1)).count_ones() % 2 == 1 {
                    term = term.neg();
                }
                let t = s | 1 << j;
                minors[t] = Some(match minors[t].take() {
                    Some(acc) => acc.add(&term),
                    None => term,
                });
            }
        }
        // only reached when some row cannot be completed
        minors[(1 << n) - 1].take().unwrap_or_else(R::zero)
    }

    /// Leibniz-formula determinant, `O(n·n!)`; an oracle for small `n`.
    pub fn determinant_leibniz(&self) -> R {
        self.leibniz(|sigma| sigma.sign())
    }

    fn leibniz(&self, weight: impl Fn(&Permutation) -> i64) -> R {
        let n = self.n;
        let mut word: Vec<usize> = (0..n).collect();
        let mut acc = R::zero();
        loop {
            let sigma = Permutation::from_images(word.clone()).expect("word is a permutation");
            let w = weight(&sigma);
            if w != 0 {
                let mut term = R::from_i64(w);
                for (i, &j) in word.iter().enumerate() {
                    term = term.mul(self.get(i, j));
                }
                acc = acc.add(&term);
            }
            if !next_permutation(&mut word) {
                break;
            }
        }
        acc
    }
}

impl<T: fmt::Debug> fmt::Debug for RingMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for r in self.entries.chunks(self.n.max(1)).take(self.n) {
            l.entry(&r);
        }
        l.finish()
    }
}
