use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::points::{ideal_points, minimal_element, principal_generator};
use super::{DivisorD, DomainInstance, FieldElem, FracIdealD, PrimePlace};
use crate::error::{Error, Result};

/// Number of times the norm bound is quadrupled before giving up.
const APPROX_ROUNDS: u32 = 12;

/// `(a, b, P)` with `I⁻¹ = (a, b)_v` and `v_P(a/b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma33Triple {
    pub a: FieldElem,
    pub b: FieldElem,
    pub place: PrimePlace,
}

impl DomainInstance {
    /// An element with exactly the given valuations at the listed primes and
    /// nonnegative valuation everywhere else. The search walks the lattice
    /// points of `∏ P^{n_P}` by increasing norm and returns the first hit.
    pub fn approximate_element(&self, targets: &DivisorD) -> Result<FieldElem> {
        self.approximate_exact(&targets.iter().map(|(p, e)| (p.clone(), e.clone())).collect())
    }

    /// As [`Self::approximate_element`], but targets may include zeros,
    /// which a [`DivisorD`] cannot store.
    fn approximate_exact(&self, targets: &BTreeMap<PrimePlace, BigInt>) -> Result<FieldElem> {
        if self.is_field() {
            if targets.values().all(|e| e.is_zero()) {
                return Ok(FieldElem::one());
            }
            return Err(Error::precondition("a field has no height-one primes"));
        }
        for p in targets.keys() {
            self.check_place(p)?;
        }
        let j = self.ideal_from_divisor(&DivisorD::from_pairs(targets.clone()));
        let mut bound = self.ideal_norm(&j) * BigRational::from_integer(4.into());
        for _ in 0..APPROX_ROUNDS {
            for (_, x) in ideal_points(self, &j, &bound) {
                if self.has_valuations(&x, targets)? {
                    return Ok(x);
                }
            }
            bound *= BigRational::from_integer(4.into());
        }
        Err(Error::exhausted(format!(
            "no element with valuations {} up to norm {bound}",
            DivisorD::from_pairs(targets.clone())
        )))
    }

    fn has_valuations(&self, x: &FieldElem, targets: &BTreeMap<PrimePlace, BigInt>) -> Result<bool> {
        for (p, e) in targets {
            if self.valuation(x, p)? != *e {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A generator of the ideal if it is principal.
    pub fn ideal_generator(&self, ideal: &FracIdealD) -> Option<FieldElem> {
        principal_generator(self, ideal)
    }

    /// `m` triples `(a, b, P)` with pairwise distinct `P`, each satisfying
    /// `I⁻¹ = (a, b)_v` and `v_P(a/b) = 1`.
    ///
    /// When `I⁻¹ = (b)` is principal, `a = b·π` for a uniformizer `π ∈ D` of
    /// a prime outside the support of `b`. Otherwise `b` is a shortest
    /// element of `I⁻¹`, `a'` is chosen with `v_Q(a') = v_Q(I⁻¹)` on the
    /// support of `b` and `I⁻¹` (so `(a', b)_v = I⁻¹`), and each `a` copies
    /// the valuations of `a'` on `T = supp(a') ∪ supp(b)` while taking value
    /// `v_P(b) + 1 = 1` at a prime `P ∉ T`.
    pub fn lemma33_two_generators(&self, ideal: &FracIdealD, m: usize) -> Result<Vec<Lemma33Triple>> {
        if m == 0 {
            return Err(Error::precondition("m must be at least 1"));
        }
        if self.is_field() {
            return Err(Error::precondition("a field has no height-one primes"));
        }
        let inv = self.ideal_inverse(ideal);
        let d = self.d();
        // `base` pins the valuations of `a'` on T, zeros included
        let (b, base) = match principal_generator(self, &inv) {
            Some(b) => (b, None),
            None => {
                let b = minimal_element(self, &inv);
                let inv_div = self.divisor_of(&inv)?;
                let b_div = self.divisor_of_elem(&b)?;
                let targets: BTreeMap<PrimePlace, BigInt> = b_div
                    .support()
                    .chain(inv_div.support())
                    .map(|p| (p.clone(), inv_div.get(p)))
                    .collect();
                let a1 = self.approximate_exact(&targets)?;
                let a1_div = self.divisor_of_elem(&a1)?;
                let base: BTreeMap<PrimePlace, BigInt> = targets
                    .keys()
                    .chain(a1_div.support())
                    .map(|p| (p.clone(), a1_div.get(p)))
                    .collect();
                (b, Some(base))
            }
        };
        let b_div = self.divisor_of_elem(&b)?;
        let avoid: BTreeSet<&PrimePlace> = base
            .iter()
            .flat_map(|m| m.keys())
            .chain(b_div.support())
            .collect();
        let mut out = Vec::with_capacity(m);
        for place in self.places().filter(|p| !avoid.contains(p)) {
            let a = match &base {
                None => {
                    let pi = self.approximate_element(&DivisorD::single(place.clone(), 1))?;
                    b.mul(&pi, &d)
                }
                Some(base) => {
                    let mut pattern = base.clone();
                    pattern.insert(place.clone(), BigInt::one());
                    self.approximate_exact(&pattern)?
                }
            };
            out.push(Lemma33Triple { a, b: b.clone(), place });
            if out.len() == m {
                return Ok(out);
            }
        }
        Err(Error::exhausted(format!(
            "only {} primes available below the factor bound {}",
            out.len(),
            self.factor_bound()
        )))
    }

    /// Recompute both conditions of a triple from scratch.
    pub fn verify_lemma33_triple(&self, ideal: &FracIdealD, t: &Lemma33Triple) -> Result<bool> {
        if t.a.is_zero() || t.b.is_zero() {
            return Ok(false);
        }
        let closure = self.v_closure(&[t.a.clone(), t.b.clone()])?;
        let q = t.a.div(&t.b, &self.d())?;
        Ok(closure == self.ideal_inverse(ideal) && self.valuation(&q, &t.place)? == BigInt::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approximation_over_integers() {
        let z = DomainInstance::integers();
        let t = DivisorD::from_pairs([(PrimePlace::rational(2), 1.into()), (PrimePlace::rational(3), 0.into())]);
        assert_eq!(z.approximate_element(&t).unwrap(), FieldElem::from_i64(2));
        let t = DivisorD::from_pairs([(PrimePlace::rational(2), (-1).into()), (PrimePlace::rational(5), 2.into())]);
        assert_eq!(z.approximate_element(&t).unwrap(), FieldElem::ratio(25, 2));
    }

    #[test]
    fn approximation_over_quadratic() {
        let dom = DomainInstance::quadratic(-5).unwrap();
        let x = dom.approximate_element(&DivisorD::single(PrimePlace::split(2, 1), 1)).unwrap();
        assert_eq!(x, FieldElem::quad(1, 1));
        let t = DivisorD::from_pairs([
            (PrimePlace::split(3, 1), (-1).into()),
            (PrimePlace::split(3, 2), 2.into()),
            (PrimePlace::split(2, 1), 0.into()),
        ]);
        let x = dom.approximate_element(&t).unwrap();
        for (p, e) in t.iter() {
            assert_eq!(&dom.valuation(&x, p).unwrap(), e);
        }
        let div = dom.divisor_of_elem(&x).unwrap();
        assert!(div.iter().all(|(p, e)| t.get(p) == *e || *e > BigInt::from(0)));
    }

    #[test]
    fn principal_case_over_integers() {
        let z = DomainInstance::integers();
        let i = z.principal_ideal(&FieldElem::from_i64(3)).unwrap();
        let ts = z.lemma33_two_generators(&i, 2).unwrap();
        assert_eq!(ts[0].a, FieldElem::ratio(2, 3));
        assert_eq!(ts[0].b, FieldElem::ratio(1, 3));
        assert_eq!(ts[0].place, PrimePlace::rational(2));
        assert_eq!(ts[1].a, FieldElem::ratio(5, 3));
        assert_eq!(ts[1].place, PrimePlace::rational(5));
        for t in &ts {
            assert!(z.verify_lemma33_triple(&i, t).unwrap());
        }
        let unit = FracIdealD::unit();
        let t = &z.lemma33_two_generators(&unit, 1).unwrap()[0];
        assert_eq!((t.a.clone(), t.b.clone()), (FieldElem::from_i64(2), FieldElem::one()));
    }

    #[test]
    fn non_principal_case() {
        let dom = DomainInstance::quadratic(-5).unwrap();
        let p2 = dom.place_ideal(&PrimePlace::split(2, 1));
        let ts = dom.lemma33_two_generators(&p2, 4).unwrap();
        let places: BTreeSet<_> = ts.iter().map(|t| t.place.clone()).collect();
        assert_eq!(places.len(), 4);
        for t in &ts {
            assert!(dom.verify_lemma33_triple(&p2, t).unwrap(), "{t:?}");
        }
        let bad = Lemma33Triple { a: FieldElem::from_i64(2), ..ts[0].clone() };
        assert!(!dom.verify_lemma33_triple(&p2, &bad).unwrap());
    }

    #[test]
    fn zero_targets_are_enforced() {
        // I⁻¹ = (7, 3+√−5) has a shortest element 3+√−5 of norm 14, so the
        // second generator must stay a unit at the prime above 2
        let dom = DomainInstance::quadratic(-5).unwrap();
        let p7 = PrimePlace::split(7, 3);
        let ideal = dom.ideal_from_divisor(&DivisorD::single(p7, -1));
        for t in dom.lemma33_two_generators(&ideal, 3).unwrap() {
            assert!(dom.verify_lemma33_triple(&ideal, &t).unwrap(), "{t:?}");
            assert_eq!(dom.valuation(&t.a, &PrimePlace::split(2, 1)).unwrap(), BigInt::from(0));
        }
    }
}
