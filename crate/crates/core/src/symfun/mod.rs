//! The ring of symmetric functions over exact rationals.
//!
//! Elements are sparse maps from partitions to rational coefficients, tagged
//! with one of six bases. Every conversion goes through the power-sum basis.

mod convert;
mod json;
mod lr;
mod poly;
mod quasi;
mod two_alphabet;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::guard;

pub use lr::littlewood_richardson;
pub use poly::MultivarPoly;
pub use quasi::fundamental_f;
pub use two_alphabet::TwoAlphabetSymFun;

pub type Rational = BigRational;

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// power sums
    #[serde(rename = "p")]
    P,
    /// Schur
    #[serde(rename = "s")]
    S,
    /// complete homogeneous
    #[serde(rename = "h")]
    H,
    /// elementary
    #[serde(rename = "e")]
    E,
    /// monomial
    #[serde(rename = "m")]
    M,
    /// augmented monomial, `m̃_λ = r_λ! m_λ`
    #[serde(rename = "mtilde")]
    MTilde,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::P, Basis::S, Basis::H, Basis::E, Basis::M, Basis::MTilde];

    pub fn name(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::S => "s",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::MTilde => "mtilde",
        }
    }

    /// Bases in which `b_λ b_μ = b_{λ ∪ μ}`.
    fn is_multiplicative(self) -> bool {
        matches!(self, Basis::P | Basis::H | Basis::E)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis `{s}`")))
    }
}

/// A symmetric function: a finite rational combination of basis elements.
#[derive(Clone)]
pub struct SymFun {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymFun { basis, terms }
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFun::zero(basis);
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    /// Integer-coefficient convenience constructor, e.g. `[([2,1], 3)]`.
    pub fn from_int_terms<I, P>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (P, i64)>,
        P: Into<Vec<u32>>,
    {
        Self::from_terms(basis, terms.into_iter().map(|(l, c)| (Partition::new(l), rat(c))))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the element is a scalar multiple of 1 (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Partition::is_empty)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// The common degree of all terms, if the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Partition::weight);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFun {
        if c.is_zero() {
            return SymFun::zero(self.basis);
        }
        SymFun {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Sum; the right operand is converted into the basis of `self` unless
    /// one side is a constant.
    pub fn add(&self, other: &SymFun) -> Result<SymFun> {
        let (mut acc, rhs) = if self.is_constant() && !other.is_constant() {
            (other.clone(), self.clone())
        } else {
            (self.clone(), other.convert(self.basis)?)
        };
        for (l, c) in rhs.terms {
            acc.add_term(l, c);
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &SymFun) -> Result<SymFun> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFun {
        SymFun {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }

    /// Re-expresses the element in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFun> {
        if self.basis == target || self.is_constant() {
            return Ok(SymFun {
                basis: target,
                terms: self.terms.clone(),
            });
        }
        guard::check("symfun degree", self.max_degree(), guard::SYMFUN_DEGREE)?;
        let p = if self.basis == Basis::P {
            self.clone()
        } else {
            convert::to_power_sums(self)
        };
        Ok(if target == Basis::P {
            p
        } else {
            convert::from_power_sums(&p, target)
        })
    }

    /// Product in Λ, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFun) -> Result<SymFun> {
        if self.is_zero() || other.is_zero() {
            return Ok(SymFun::zero(self.basis));
        }
        if other.is_constant() {
            return Ok(self.scale(&other.coeff(&Partition::empty())));
        }
        if self.is_constant() {
            return Ok(other.scale(&self.coeff(&Partition::empty())));
        }
        guard::check(
            "symfun degree",
            self.max_degree() + other.max_degree(),
            guard::SYMFUN_DEGREE,
        )?;
        if self.basis == other.basis && self.basis.is_multiplicative() {
            return Ok(concat_product(self, other));
        }
        let product = concat_product(&self.convert(Basis::P)?, &other.convert(Basis::P)?);
        product.convert(self.basis)
    }

    /// The involution ω, returned in the basis of `self`.
    pub fn omega(&self) -> SymFun {
        match self.basis {
            Basis::P => SymFun::from_terms(
                Basis::P,
                self.terms.iter().map(|(l, c)| (l.clone(), c * rat(l.sign()))),
            ),
            Basis::S => SymFun::from_terms(
                Basis::S,
                self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())),
            ),
            Basis::H | Basis::E => {
                let swapped = if self.basis == Basis::H { Basis::E } else { Basis::H };
                let twisted = SymFun {
                    basis: swapped,
                    terms: self.terms.clone(),
                };
                twisted.convert(self.basis).expect("degree already within guard")
            }
            Basis::M | Basis::MTilde => self
                .convert(Basis::P)
                .expect("degree already within guard")
                .omega()
                .convert(self.basis)
                .expect("degree already within guard"),
        }
    }

    /// The polynomial `f(z_1, …, z_N, 0, 0, …)`.
    pub fn specialize(&self, nvars: usize) -> Result<MultivarPoly> {
        let m = self.convert(Basis::M)?;
        let mut out = MultivarPoly::zero(nvars);
        for (l, c) in &m.terms {
            if l.len() > nvars {
                continue;
            }
            for exps in distinct_rearrangements(&l.padded(nvars)) {
                out.add_term(exps, c.clone());
            }
        }
        Ok(out)
    }

    /// The image under `p_i ↦ 1` for every `i`, i.e. the specialization
    /// `z_1 = 1, z_2 = z_3 = … = 0`.
    pub fn eval_at_single_one(&self) -> Result<Rational> {
        Ok(self.convert(Basis::P)?.terms.values().cloned().sum())
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_terms(&self) -> Option<Vec<(Partition, BigInt)>> {
        self.terms
            .iter()
            .map(|(l, c)| c.is_integer().then(|| (l.clone(), c.to_integer())))
            .collect()
    }

    /// Keeps only the terms of weight `d`.
    pub fn homogeneous_part(&self, d: usize) -> SymFun {
        SymFun {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }
}

fn concat_product(f: &SymFun, g: &SymFun) -> SymFun {
    let mut out = SymFun::zero(f.basis);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), x * y);
        }
    }
    out
}

/// All distinct orderings of an exponent vector.
pub(crate) fn distinct_rearrangements(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted: Vec<usize> = v.iter().map(|&x| x as usize).collect();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(sorted.iter().map(|&x| x as u32).collect());
        if !crate::combinatorics::next_permutation(&mut sorted) {
            break;
        }
    }
    out
}

/// Equality as elements of Λ: both sides are compared in the power-sum basis.
impl PartialEq for SymFun {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        match (self.convert(Basis::P), other.convert(Basis::P)) {
            (Ok(a), Ok(b)) => a.terms == b.terms,
            _ => false,
        }
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if l.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}{}", self.basis, l)?;
        }
        Ok(())
    }
}
