use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{rat, Basis, Rational, SymFun};
use crate::combinatorics::Partition;
use crate::error::Result;

/// A symmetric function in two alphabets `z` and `y`, stored in the normal
/// form `Σ c · p_λ(z) p_μ(y)` keyed by `(λ, μ)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TwoAlphabetSymFun {
    terms: BTreeMap<(Partition, Partition), Rational>,
}

impl TwoAlphabetSymFun {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut f = Self::zero();
        f.add_term(Partition::empty(), Partition::empty(), Rational::one());
        f
    }

    /// `p_λ(z) p_μ(y)`.
    pub fn pure(z: Partition, y: Partition) -> Self {
        let mut f = Self::zero();
        f.add_term(z, y, Rational::one());
        f
    }

    pub fn add_term(&mut self, z: Partition, y: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((z, y)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `f(z)` for a single-alphabet `f`.
    pub fn from_z(f: &SymFun) -> Result<Self> {
        let p = f.convert(Basis::P)?;
        let mut out = Self::zero();
        for (l, c) in p.terms() {
            out.add_term(l.clone(), Partition::empty(), c.clone());
        }
        Ok(out)
    }

    /// `f(y)` for a single-alphabet `f`.
    pub fn from_y(f: &SymFun) -> Result<Self> {
        let p = f.convert(Basis::P)?;
        let mut out = Self::zero();
        for (l, c) in p.terms() {
            out.add_term(Partition::empty(), l.clone(), c.clone());
        }
        Ok(out)
    }

    /// `p_λ(z, y)`, expanded through `p_k(z, y) = p_k(z) + p_k(y)`.
    pub fn joint(lambda: &Partition) -> Self {
        let parts = lambda.parts();
        let mut out = Self::zero();
        for choice in 0u64..(1 << parts.len()) {
            let (mut z, mut y) = (Vec::new(), Vec::new());
            for (i, &k) in parts.iter().enumerate() {
                if choice & (1 << i) != 0 {
                    y.push(k);
                } else {
                    z.push(k);
                }
            }
            out.add_term(Partition::new(z), Partition::new(y), Rational::one());
        }
        out
    }

    /// `f(z, y)`: `f` evaluated on the union of both alphabets.
    pub fn joint_symfun(f: &SymFun) -> Result<Self> {
        let p = f.convert(Basis::P)?;
        let mut out = Self::zero();
        for (l, c) in p.terms() {
            out.add_assign(&Self::joint(l).scale(c));
        }
        Ok(out)
    }

    /// `zpart(z) · ypart(y) · p_joint(z, y)`.
    pub fn from_parts(zpart: &SymFun, ypart: &SymFun, joint: &Partition) -> Result<Self> {
        Ok(Self::from_z(zpart)?.mul(&Self::from_y(ypart)?).mul(&Self::joint(joint)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, z: &Partition, y: &Partition) -> Rational {
        self.terms
            .get(&(z.clone(), y.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((z, y), c) in &other.terms {
            self.add_term(z.clone(), y.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for ((z, y), v) in &self.terms {
            out.add_term(z.clone(), y.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((z1, y1), a) in &self.terms {
            for ((z2, y2), b) in &other.terms {
                out.add_term(z1.union(z2), y1.union(y2), a * b);
            }
        }
        out
    }

    /// ω acting on the `z` alphabet only: `p_k(z) ↦ (-1)^{k-1} p_k(z)`.
    pub fn omega_z(&self) -> Self {
        self.map_signs(|z, _| z.sign())
    }

    /// The substitution `y ↦ -y`: `p_k(y) ↦ (-1)^k p_k(y)`.
    pub fn negate_y(&self) -> Self {
        self.map_signs(|_, y| if y.weight() % 2 == 0 { 1 } else { -1 })
    }

    fn map_signs(&self, sign: impl Fn(&Partition, &Partition) -> i64) -> Self {
        let mut out = Self::zero();
        for ((z, y), c) in &self.terms {
            out.add_term(z.clone(), y.clone(), c * rat(sign(z, y)));
        }
        out
    }

    /// The substitution `z ↦ (z, y)`: every `p_λ(z)` becomes `p_λ(z, y)`.
    pub fn substitute_union(&self) -> Self {
        let mut out = Self::zero();
        for ((z, y), c) in &self.terms {
            let expanded = Self::joint(z).mul(&Self::pure(Partition::empty(), y.clone()));
            out.add_assign(&expanded.scale(c));
        }
        out
    }

    /// The specialization `y = 0`, as a single-alphabet element in `p`.
    pub fn set_y_zero(&self) -> SymFun {
        SymFun::from_terms(
            Basis::P,
            self.terms
                .iter()
                .filter(|((_, y), _)| y.is_empty())
                .map(|((z, _), c)| (z.clone(), c.clone())),
        )
    }

    /// First key at which `self` and `other` differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<(Partition, Partition, Rational, Rational)> {
        let keys: std::collections::BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|(z, y)| {
            let a = self.coeff(z, y);
            let b = other.coeff(z, y);
            (a != b).then(|| (z.clone(), y.clone(), a, b))
        })
    }
}

impl fmt::Debug for TwoAlphabetSymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TwoAlphabetSymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((z, y), c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            let magnitude = c.abs();
            let mut factors = Vec::new();
            if !z.is_empty() {
                factors.push(format!("p{z}(z)"));
            }
            if !y.is_empty() {
                factors.push(format!("p{y}(y)"));
            }
            match (factors.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{}", factors.join(" "))?,
                (false, false) => write!(f, "{magnitude}*{}", factors.join(" "))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TwoTerm<'a> {
    z: &'a Partition,
    y: &'a Partition,
    coeff: String,
}

impl Serialize for TwoAlphabetSymFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TwoTerm> = self
            .terms
            .iter()
            .map(|((z, y), c)| TwoTerm {
                z,
                y,
                coeff: c.to_string(),
            })
            .collect();
        let mut st = serializer.serialize_struct("TwoAlphabetSymFun", 2)?;
        st.serialize_field("basis", "p(z)p(y)")?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
