//! Concrete Krull domains: ℤ, the maximal orders ℤ[√d] of imaginary
//! quadratic fields with d ≡ 2, 3 (mod 4), and ℚ viewed as the trivial case
//! `D = K` with no height-one primes.

mod approx;
mod classgroup;
mod field;
mod ideal;
mod points;

pub use approx::Lemma33Triple;
pub use classgroup::{class_number, DomainClassGroup};
pub use field::FieldElem;
pub(crate) use field::FieldElemRepr;
pub use ideal::{DivisorD, FracIdealD};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, DEFAULT_FACTOR_BOUND};
use crate::error::{Error, Result};

/// Largest |d| accepted for quadratic orders; class groups are computed by
/// enumeration.
pub const MAX_ABS_D: i64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DomainKind {
    Integers,
    /// ℤ[√d] with d < 0 squarefree and d ≡ 2, 3 (mod 4).
    Quadratic {
        #[serde(with = "crate::serde_util::bigint_str")]
        d: BigInt,
    },
    /// The field ℚ itself (`D = K`).
    Rationals,
}

/// A Krull domain together with the trial-division bound used whenever its
/// arithmetic needs to factor a rational integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainInstance {
    kind: DomainKind,
    factor_bound: u64,
}

impl DomainInstance {
    pub fn integers() -> Self {
        DomainInstance {
            kind: DomainKind::Integers,
            factor_bound: DEFAULT_FACTOR_BOUND,
        }
    }

    pub fn rationals() -> Self {
        DomainInstance {
            kind: DomainKind::Rationals,
            factor_bound: DEFAULT_FACTOR_BOUND,
        }
    }

    pub fn quadratic(d: i64) -> Result<Self> {
        Self::new(DomainKind::Quadratic { d: d.into() })
    }

    pub fn new(kind: DomainKind) -> Result<Self> {
        if let DomainKind::Quadratic { d } = &kind {
            let dv = d
                .to_i64()
                .filter(|v| v.abs() <= MAX_ABS_D)
                .ok_or_else(|| Error::precondition(format!("|d| must be at most {MAX_ABS_D}")))?;
            if dv >= 0 {
                return Err(Error::precondition("d must be negative"));
            }
            if !matches!(dv.rem_euclid(4), 2 | 3) {
                return Err(Error::precondition("d must be 2 or 3 mod 4"));
            }
            let squarefree = arith::factor(d, DEFAULT_FACTOR_BOUND)?
                .iter()
                .all(|(_, e)| *e == 1);
            if !squarefree {
                return Err(Error::precondition("d must be squarefree"));
            }
        }
        Ok(DomainInstance {
            kind,
            factor_bound: DEFAULT_FACTOR_BOUND,
        })
    }

    pub fn with_factor_bound(mut self, bound: u64) -> Self {
        self.factor_bound = bound;
        self
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn factor_bound(&self) -> u64 {
        self.factor_bound
    }

    /// The radicand; `0` for ℤ and ℚ so that field arithmetic is uniform.
    pub fn d(&self) -> BigInt {
        match &self.kind {
            DomainKind::Quadratic { d } => d.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, DomainKind::Rationals)
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self.kind, DomainKind::Quadratic { .. })
    }

    /// Is `x` an element of D?
    pub fn contains(&self, x: &FieldElem) -> bool {
        match self.kind {
            DomainKind::Rationals => true,
            _ => x.is_integral_coords(),
        }
    }

    /// Height-one primes lying over the rational prime `p`.
    pub fn places_above(&self, p: u64) -> Vec<PrimePlace> {
        let pb = BigInt::from(p);
        match &self.kind {
            DomainKind::Rationals => vec![],
            DomainKind::Integers => vec![PrimePlace::new(pb, None)],
            DomainKind::Quadratic { d } => {
                if p == 2 || d.is_multiple_of(&pb) {
                    let r = d.mod_floor(&pb);
                    let r = if p == 2 { r } else { BigInt::zero() };
                    return vec![PrimePlace::new(pb, Some(r))];
                }
                match arith::legendre(d, p) {
                    1 => {
                        let r = arith::sqrt_mod(d, p).expect("quadratic residue");
                        let mut roots = vec![r, p - r];
                        roots.sort_unstable();
                        roots
                            .into_iter()
                            .map(|r| PrimePlace::new(pb.clone(), Some(r.into())))
                            .collect()
                    }
                    _ => vec![PrimePlace::new(pb, None)],
                }
            }
        }
    }

    /// All height-one primes over rational primes up to the factor bound,
    /// ordered by the rational prime and then by root.
    pub fn places(&self) -> impl Iterator<Item = PrimePlace> + '_ {
        arith::primes_up_to(self.factor_bound).flat_map(|p| self.places_above(p))
    }

    pub fn is_ramified(&self, place: &PrimePlace) -> bool {
        match &self.kind {
            DomainKind::Quadratic { d } => {
                place.p == BigInt::from(2) || d.is_multiple_of(&place.p)
            }
            _ => false,
        }
    }

    /// Absolute norm of the prime ideal.
    pub fn place_norm(&self, place: &PrimePlace) -> BigInt {
        match (&self.kind, &place.root) {
            (DomainKind::Quadratic { .. }, None) => &place.p * &place.p,
            _ => place.p.clone(),
        }
    }

    /// Reject places that are not height-one primes of this domain.
    pub fn check_place(&self, place: &PrimePlace) -> Result<()> {
        let p = place
            .p
            .to_u64()
            .filter(|&p| arith::is_prime_u64(p))
            .ok_or_else(|| Error::precondition(format!("{} is not a rational prime", place.p)))?;
        if self.places_above(p).contains(place) {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "{place} is not a height-one prime of this domain"
            )))
        }
    }
}

impl Serialize for DomainInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.kind.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DomainInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let kind = DomainKind::deserialize(d)?;
        DomainInstance::new(kind).map_err(serde::de::Error::custom)
    }
}

/// A height-one prime. Over ℤ, the prime `p`; over ℤ[√d], either the inert
/// prime `pO` (`root = None`) or `(p, root + √d)` with `root² ≡ d (mod p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePlace {
    #[serde(with = "crate::serde_util::bigint_str")]
    pub p: BigInt,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_bigint")]
    pub root: Option<BigInt>,
}

impl PrimePlace {
    pub fn new(p: BigInt, root: Option<BigInt>) -> Self {
        PrimePlace { p, root }
    }

    pub fn rational(p: i64) -> Self {
        PrimePlace::new(p.into(), None)
    }

    pub fn split(p: i64, root: i64) -> Self {
        PrimePlace::new(p.into(), Some(root.into()))
    }
}

impl fmt::Display for PrimePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.root {
            None => write!(f, "P[{}]", self.p),
            Some(r) => write!(f, "P[{},{}+√d]", self.p, r),
        }
    }
}

mod opt_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_str(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| crate::serde_util::parse_int(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}
