use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::domain::FieldElem;
use crate::error::{Error, Result};
use crate::lattice::IntVec;

/// One term `c·X^g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: IntVec,
    pub coef: FieldElem,
}

/// An element of `K[G]`: terms with strictly increasing exponents (lex on
/// lattice coordinates) and nonzero coefficients. Zero has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElem {
    terms: Vec<Term>,
}

impl AlgebraElem {
    pub fn zero() -> Self {
        AlgebraElem { terms: vec![] }
    }

    pub fn monomial(coef: FieldElem, exp: IntVec) -> Self {
        Self::from_terms(vec![Term { exp, coef }])
    }

    /// The constant `c·X^0` in a group of rank `n`.
    pub fn constant(coef: FieldElem, n: usize) -> Self {
        Self::monomial(coef, IntVec::zeros(n))
    }

    /// Collects like terms and sorts; any order of input is accepted.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<IntVec, FieldElem> = BTreeMap::new();
        for t in terms {
            let e = acc.entry(t.exp).or_insert_with(FieldElem::zero);
            *e = e.add(&t.coef);
        }
        AlgebraElem {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exp, coef)| Term { exp, coef })
                .collect(),
        }
    }

    /// Shorthand for tests and examples: `(coefficient, exponent)` pairs
    /// with integer coefficients.
    pub fn from_i64(terms: &[(i64, &[i64])]) -> Self {
        Self::from_terms(terms.iter().map(|(c, e)| Term {
            exp: IntVec::from_i64(e),
            coef: FieldElem::from_i64(*c),
        }))
    }

    /// Accepts only canonical input: strictly increasing exponents of a
    /// common length and nonzero coefficients.
    pub fn from_canonical(terms: Vec<Term>) -> Result<Self> {
        for (i, t) in terms.iter().enumerate() {
            if t.coef.is_zero() {
                return Err(Error::schema(format!("term {i} has a zero coefficient")));
            }
            if i > 0 {
                if t.exp.len() != terms[0].exp.len() {
                    return Err(Error::schema("exponents differ in length"));
                }
                if terms[i - 1].exp >= t.exp {
                    return Err(Error::schema(format!(
                        "exponents are not strictly increasing at term {i}"
                    )));
                }
            }
        }
        Ok(AlgebraElem { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero scalar multiples of monomials are exactly the units of K[G].
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficients(&self) -> Vec<FieldElem> {
        self.terms.iter().map(|t| t.coef.clone()).collect()
    }

    pub fn exponents(&self) -> Vec<IntVec> {
        self.terms.iter().map(|t| t.exp.clone()).collect()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn trailing(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn coef_at(&self, exp: &IntVec) -> Option<&FieldElem> {
        self.terms
            .binary_search_by(|t| t.exp.cmp(exp))
            .ok()
            .map(|i| &self.terms[i].coef)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn neg(&self) -> Self {
        AlgebraElem {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.clone(),
                    coef: t.coef.neg(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product in `K[G]`; `d` is the radicand of K (0 over ℚ).
    pub fn mul(&self, other: &Self, d: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().flat_map(|s| {
            other.terms.iter().map(move |o| Term {
                exp: &s.exp + &o.exp,
                coef: s.coef.mul(&o.coef, d),
            })
        }))
    }

    /// `c·X^g·f`.
    pub fn mul_monomial(&self, c: &FieldElem, g: &IntVec, d: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElem {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: &t.exp + g,
                    coef: t.coef.mul(c, d),
                })
                .collect(),
        }
    }

    /// Are all coefficients rational?
    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.coef.is_rational())
    }
}

impl fmt::Display for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                if t.exp.is_zero() {
                    format!("{}", t.coef)
                } else {
                    format!("{}·X^{}", t.coef, t.exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: IntVec,
    #[serde(flatten)]
    coef: crate::domain::FieldElemRepr,
}

impl Serialize for AlgebraElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|t| TermRepr {
                exp: t.exp.clone(),
                coef: (&t.coef).into(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        let terms = v
            .into_iter()
            .map(|r| {
                Ok(Term {
                    exp: r.exp,
                    coef: r.coef.try_into()?,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        AlgebraElem::from_canonical(terms).map_err(serde::de::Error::custom)
    }
}
