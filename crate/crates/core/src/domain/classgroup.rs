use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::points::{ideal_points, minimal_element};
use super::{DivisorD, DomainInstance, FracIdealD, PrimePlace};
use crate::classgroup::{ClassElem, ClassGroupDesc};
use crate::error::{Error, Result};
use crate::lattice::{IntMat, IntVec};

/// Largest norm bound tried while collecting relations.
const MAX_RELATION_NORM: u64 = 1 << 26;

/// Class number of ℤ[√d] (d < 0, d ≡ 2, 3 mod 4): the number of reduced
/// primitive positive definite forms of discriminant 4d. Returns 1 for ℤ
/// and ℚ.
pub fn class_number(dom: &DomainInstance) -> u64 {
    if !dom.is_quadratic() {
        return 1;
    }
    let disc = 4 * dom.d().to_i64().expect("|d| is bounded");
    let mut h = 0;
    let mut a = 1i64;
    // reduced forms satisfy a ≤ sqrt(|Δ|/3)
    while 3 * a * a <= -disc {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

/// The divisor class group of a domain, presented on a factor base of
/// small primes that generate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainClassGroup {
    pub factor_base: Vec<PrimePlace>,
    pub desc: ClassGroupDesc,
    #[serde(with = "crate::serde_util::bigint_str")]
    pub order: BigInt,
}

impl DomainClassGroup {
    pub fn compute(dom: &DomainInstance) -> Result<Self> {
        let h = class_number(dom);
        if h == 1 {
            return Ok(DomainClassGroup {
                factor_base: vec![],
                desc: ClassGroupDesc::trivial(0),
                order: BigInt::one(),
            });
        }
        // every class contains an integral ideal of norm ≤ (2/√3)·√|d|
        let abs_d = (-dom.d()).to_u64().expect("bounded");
        let factor_base: Vec<PrimePlace> = dom
            .places()
            .take_while(|p| p.p.to_u64().is_some_and(|p| 9 * p * p <= 16 * abs_d))
            .filter(|p| {
                let n = dom.place_norm(p).to_u64().unwrap();
                9 * n * n <= 16 * abs_d
            })
            .collect();
        let index: BTreeMap<&PrimePlace, usize> =
            factor_base.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let k = factor_base.len();
        let mut relations: Vec<Vec<BigInt>> = Vec::new();
        let mut bound = 4 * abs_d;
        let mut seen = 0usize;
        while bound <= MAX_RELATION_NORM {
            let pts = ideal_points(
                dom,
                &FracIdealD::unit(),
                &BigRational::from_integer(bound.into()),
            );
            // x and −x give the same relation
            for (_, x) in pts.iter().skip(seen) {
                if x.x().is_negative() {
                    continue;
                }
                let div = dom.divisor_of_elem(x)?;
                if let Some(row) = divisor_vector(&div, &index, k) {
                    if row.iter().any(|e| !e.is_zero()) {
                        relations.push(row);
                    }
                }
            }
            seen = pts.len();
            if relations.len() >= k {
                let desc = ClassGroupDesc::from_relations(&IntMat::from_rows(&relations)?);
                let order = group_order(&desc);
                if order == Some(BigInt::from(h)) {
                    return Ok(DomainClassGroup {
                        factor_base,
                        desc,
                        order: h.into(),
                    });
                }
            }
            bound *= 4;
        }
        Err(Error::exhausted(format!(
            "relation search for the class group stopped at norm {MAX_RELATION_NORM}"
        )))
    }

    pub fn is_trivial(&self) -> bool {
        self.desc.is_trivial()
    }

    fn coords(&self, div: &DivisorD) -> Option<IntVec> {
        let index: BTreeMap<&PrimePlace, usize> =
            self.factor_base.iter().enumerate().map(|(i, p)| (p, i)).collect();
        divisor_vector(div, &index, self.factor_base.len()).map(IntVec)
    }

    /// Class of a fractional ideal.
    pub fn class_of_ideal(&self, dom: &DomainInstance, ideal: &FracIdealD) -> Result<ClassElem> {
        if self.is_trivial() {
            return Ok(self.desc.identity());
        }
        // (x)·I is integral of small norm when x is a shortest vector of I⁻¹
        let x = minimal_element(dom, &dom.ideal_inverse(ideal));
        let c = dom.ideal_v_mul(&dom.principal_ideal(&x)?, ideal);
        let div = dom.divisor_of(&c)?;
        let v = self
            .coords(&div)
            .expect("reduced ideal is factor-base smooth");
        Ok(self.desc.project(&v))
    }

    pub fn class_of_divisor(&self, dom: &DomainInstance, div: &DivisorD) -> Result<ClassElem> {
        if self.is_trivial() {
            return Ok(self.desc.identity());
        }
        if let Some(v) = self.coords(div) {
            return Ok(self.desc.project(&v));
        }
        self.class_of_ideal(dom, &dom.ideal_from_divisor(div))
    }

    /// A factor-base divisor in every class, found by breadth-first search
    /// so that each representative has minimal total exponent.
    pub fn class_representatives(&self) -> BTreeMap<ClassElem, DivisorD> {
        let mut reps = BTreeMap::new();
        let start = self.desc.identity();
        reps.insert(start.clone(), DivisorD::new());
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let base = reps[&c].clone();
            for (i, p) in self.factor_base.iter().enumerate() {
                let step = self
                    .desc
                    .project(&IntVec::unit(self.factor_base.len(), i));
                let next = self.desc.add(&c, &step);
                if !reps.contains_key(&next) {
                    reps.insert(next.clone(), base.add(&DivisorD::single(p.clone(), 1)));
                    queue.push_back(next);
                }
            }
        }
        reps
    }
}

fn divisor_vector(
    div: &DivisorD,
    index: &BTreeMap<&PrimePlace, usize>,
    k: usize,
) -> Option<Vec<BigInt>> {
    let mut row = vec![BigInt::zero(); k];
    for (p, e) in div.iter() {
        row[*index.get(p)?] = e.clone();
    }
    Some(row)
}

/// Order of a finite group, `None` if it has a free factor.
fn group_order(desc: &ClassGroupDesc) -> Option<BigInt> {
    let inv = desc.invariant_factors();
    if inv.iter().any(|n| n.is_zero()) {
        return None;
    }
    Some(inv.iter().fold(BigInt::one(), |acc, n| acc * n))
}
