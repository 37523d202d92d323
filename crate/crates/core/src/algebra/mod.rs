//! The monoid algebra `D[S]` inside `K[G]`, where `G = q(S)`: ring
//! arithmetic, content ideals, and the description of `fK[G] ∩ D[S]` as
//! `f·A_f⁻¹[E_f⁻¹]`.

mod elem;
mod oracle;

pub use elem::{AlgebraElem, Term};
pub use oracle::{Lemma32Report, OracleBounds, Violation, ViolationKind};

use serde::{Deserialize, Serialize};

use crate::classgroup::{ClassElem, ClassGroupDesc};
use crate::domain::{DivisorD, DomainClassGroup, DomainInstance, FieldElem, FracIdealD};
use crate::error::{Error, Result};
use crate::lattice::IntVec;
use crate::monoid::{FracVIdealS, MonoidInstance};

/// `D[S]` together with both class groups, computed once.
#[derive(Clone, Debug)]
pub struct MonoidAlgebra {
    domain: DomainInstance,
    monoid: MonoidInstance,
    class_d: DomainClassGroup,
    class_s: ClassGroupDesc,
}

/// `A_f` and `E_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContentPair {
    pub a: FracIdealD,
    pub e: FracVIdealS,
}

/// A class of `C_v(D) ⊕ C_v(S)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassPair {
    pub domain: ClassElem,
    pub monoid: ClassElem,
}

/// `fK[G] ∩ D[S] = f·A_f⁻¹[E_f⁻¹]`, stored through the divisors of the two
/// inverse contents and their classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalIntersectionRep {
    pub f: AlgebraElem,
    /// divisor of `A_f⁻¹`
    pub domain_part: DivisorD,
    /// divisor of `E_f⁻¹`
    pub monoid_part: FracVIdealS,
    pub class: ClassPair,
}

impl MonoidAlgebra {
    pub fn new(domain: DomainInstance, monoid: MonoidInstance) -> Result<Self> {
        let class_d = DomainClassGroup::compute(&domain)?;
        let class_s = monoid.class_group();
        Ok(MonoidAlgebra {
            domain,
            monoid,
            class_d,
            class_s,
        })
    }

    pub fn domain(&self) -> &DomainInstance {
        &self.domain
    }

    pub fn monoid(&self) -> &MonoidInstance {
        &self.monoid
    }

    pub fn domain_class_group(&self) -> &DomainClassGroup {
        &self.class_d
    }

    pub fn monoid_class_group(&self) -> &ClassGroupDesc {
        &self.class_s
    }

    /// Rank of the exponent group.
    pub fn rank(&self) -> usize {
        self.monoid.rank()
    }

    pub fn check_elem(&self, f: &AlgebraElem) -> Result<()> {
        let n = self.rank();
        for t in f.terms() {
            if t.exp.len() != n {
                return Err(Error::schema(format!(
                    "exponent {} has length {}, expected {n}",
                    t.exp,
                    t.exp.len()
                )));
            }
            if !self.domain.is_quadratic() && !t.coef.is_rational() {
                return Err(Error::schema("irrational coefficient over a rational domain"));
            }
        }
        Ok(())
    }

    pub fn mul(&self, f: &AlgebraElem, g: &AlgebraElem) -> AlgebraElem {
        f.mul(g, &self.domain.d())
    }

    pub fn mul_monomial(&self, f: &AlgebraElem, c: &FieldElem, g: &IntVec) -> AlgebraElem {
        f.mul_monomial(c, g, &self.domain.d())
    }

    pub fn one(&self) -> AlgebraElem {
        AlgebraElem::constant(FieldElem::one(), self.rank())
    }

    /// `X^g`.
    pub fn x(&self, g: &IntVec) -> AlgebraElem {
        AlgebraElem::monomial(FieldElem::one(), g.clone())
    }

    pub fn contents(&self, f: &AlgebraElem) -> Result<ContentPair> {
        if f.is_zero() {
            return Err(Error::precondition("contents of the zero element"));
        }
        self.check_elem(f)?;
        Ok(ContentPair {
            a: self.domain.v_closure(&f.coefficients())?,
            e: self.monoid.v_closure(&f.exponents())?,
        })
    }

    /// Is `f` in `D[S]`?
    pub fn is_member(&self, f: &AlgebraElem) -> Result<bool> {
        self.check_elem(f)?;
        for t in f.terms() {
            if !self.domain.contains(&t.coef) || !self.monoid.contains(&t.exp)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn class_pair(&self, domain_div: &DivisorD, monoid_div: &FracVIdealS) -> Result<ClassPair> {
        Ok(ClassPair {
            domain: self.class_d.class_of_divisor(&self.domain, domain_div)?,
            monoid: self.monoid.class_of_divisor(monoid_div)?,
        })
    }

    pub fn intersect_principal(&self, f: &AlgebraElem) -> Result<PrincipalIntersectionRep> {
        let c = self.contents(f)?;
        let domain_part = self.domain.divisor_of(&c.a)?.neg();
        let monoid_part = c.e.inverse();
        let class = self.class_pair(&domain_part, &monoid_part)?;
        Ok(PrincipalIntersectionRep {
            f: f.clone(),
            domain_part,
            monoid_part,
            class,
        })
    }

    /// Is `h` in `A[E]`, i.e. every coefficient in `A` and every exponent
    /// in `E`?
    pub fn in_module(&self, h: &AlgebraElem, ideal: &FracIdealD, monoid_part: &FracVIdealS) -> Result<bool> {
        for t in h.terms() {
            if !self.domain.ideal_contains(ideal, &t.coef)?
                || !self.monoid.ideal_contains(monoid_part, &t.exp)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests;
