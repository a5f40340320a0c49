//! JSON form of a symmetric function:
//! `{"basis":"p","terms":[{"partition":[2,1],"coeff":"-1"}]}` with exact
//! integer or `a/b` coefficient strings, terms in canonical partition order.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, Rational, SymFun};
use crate::combinatorics::Partition;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFunRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFunRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermRepr {
                    partition: l.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFunRepr::deserialize(deserializer)?;
        let mut f = SymFun::zero(repr.basis);
        for t in repr.terms {
            if t.partition.windows(2).any(|w| w[0] < w[1]) || t.partition.contains(&0) {
                return Err(serde::de::Error::custom(format!(
                    "partition {:?} is not weakly decreasing and positive",
                    t.partition
                )));
            }
            let text = t.coeff.trim().replace('\u{2212}', "-");
            let c: Rational = text
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient `{}`", t.coeff)))?;
            f.add_term(Partition::new(t.partition), c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::rat;

    #[test]
    fn documented_shape() {
        let f = SymFun::from_terms(
            Basis::P,
            [
                (Partition::new(vec![1, 1, 1]), rat(1)),
                (Partition::new(vec![2, 1]), rat(-1)),
                (Partition::new(vec![3]), Rational::new(1.into(), 2.into())),
            ],
        );
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"p","terms":[{"partition":[3],"coeff":"1/2"},{"partition":[2,1],"coeff":"-1"},{"partition":[1,1,1],"coeff":"1"}]}"#
        );
        let back: SymFun = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn unicode_minus_and_bad_input() {
        let f: SymFun = serde_json::from_str(r#"{"basis":"s","terms":[{"partition":[2],"coeff":"−3"}]}"#).unwrap();
        assert_eq!(f.coeff(&Partition::row(2)), rat(-3));
        assert!(serde_json::from_str::<SymFun>(r#"{"basis":"s","terms":[{"partition":[1,2],"coeff":"1"}]}"#).is_err());
        assert!(serde_json::from_str::<SymFun>(r#"{"basis":"q","terms":[]}"#).is_err());
    }
}
