use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{DomainInstance, DomainKind, FieldElem, PrimePlace};
use crate::arith;
use crate::error::{Error, Result};

/// A nonzero fractional ideal `scale · (aℤ + (b + √d)ℤ)`.
///
/// The bracket is a primitive integral ideal in Hermite form
/// (`0 ≤ b < a`, `a | b² − d`); over ℤ and ℚ it is always `a = 1, b = 0`.
/// In a Dedekind domain every fractional ideal is divisorial, so this is
/// also the canonical form of a v-ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FracIdealD {
    #[serde(with = "crate::serde_util::rat_str")]
    scale: BigRational,
    #[serde(with = "crate::serde_util::bigint_str")]
    a: BigInt,
    #[serde(with = "crate::serde_util::bigint_str")]
    b: BigInt,
}

impl FracIdealD {
    pub fn unit() -> Self {
        FracIdealD {
            scale: BigRational::one(),
            a: BigInt::one(),
            b: BigInt::zero(),
        }
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn hnf(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    /// A ℤ-basis of the ideal as a lattice (for ℤ a single generator).
    pub fn z_basis(&self, dom: &DomainInstance) -> Vec<FieldElem> {
        let s = FieldElem::from_rat(&self.scale);
        let d = dom.d();
        if dom.is_quadratic() {
            vec![
                s.scale_int(&self.a),
                s.mul(&FieldElem::new(self.b.clone(), BigInt::one(), BigInt::one()).unwrap(), &d),
            ]
        } else {
            vec![s]
        }
    }

    /// Is the ideal contained in D?
    pub fn is_integral(&self) -> bool {
        self.scale.is_integer()
    }
}

impl fmt::Display for FracIdealD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_one() {
            write!(f, "({})", self.scale)
        } else {
            write!(f, "{}·({}, {}+√d)", self.scale, self.a, self.b)
        }
    }
}

/// Finite-support integer vector over height-one primes: the divisor of a
/// fractional ideal. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DivisorD(BTreeMap<PrimePlace, BigInt>);

impl DivisorD {
    pub fn new() -> Self {
        DivisorD(BTreeMap::new())
    }

    pub fn single(place: PrimePlace, e: i64) -> Self {
        let mut d = Self::new();
        d.set(place, e.into());
        d
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (PrimePlace, BigInt)>) -> Self {
        let mut d = Self::new();
        for (p, e) in pairs {
            let cur = d.get(&p);
            d.set(p, cur + e);
        }
        d
    }

    pub fn get(&self, p: &PrimePlace) -> BigInt {
        self.0.get(p).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, p: PrimePlace, e: BigInt) {
        if e.is_zero() {
            self.0.remove(&p);
        } else {
            self.0.insert(p, e);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PrimePlace, &BigInt)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &PrimePlace> {
        self.0.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &DivisorD) -> DivisorD {
        let mut out = self.clone();
        for (p, e) in &other.0 {
            let cur = out.get(p);
            out.set(p.clone(), cur + e);
        }
        out
    }

    pub fn neg(&self) -> DivisorD {
        DivisorD(self.0.iter().map(|(p, e)| (p.clone(), -e)).collect())
    }

    /// Componentwise minimum (gcd of divisors).
    pub fn meet(&self, other: &DivisorD) -> DivisorD {
        let mut out = DivisorD::new();
        for p in self.0.keys().chain(other.0.keys()) {
            out.set(p.clone(), self.get(p).min(other.get(p)));
        }
        out
    }
}

impl fmt::Display for DivisorD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}↦{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct DivisorEntry {
    place: PrimePlace,
    #[serde(with = "crate::serde_util::bigint_str")]
    exp: BigInt,
}

impl Serialize for DivisorD {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<DivisorEntry> = self
            .0
            .iter()
            .map(|(p, e)| DivisorEntry {
                place: p.clone(),
                exp: e.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorD {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<DivisorEntry>::deserialize(d)?;
        Ok(DivisorD::from_pairs(v.into_iter().map(|e| (e.place, e.exp))))
    }
}

fn lcm_of_dens<'a>(xs: impl Iterator<Item = &'a FieldElem>) -> BigInt {
    xs.fold(BigInt::one(), |l, x| l.lcm(x.den()))
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

impl DomainInstance {
    fn make_ideal(&self, scale: BigRational, a: BigInt, b: BigInt) -> FracIdealD {
        let b = b.mod_floor(&a);
        FracIdealD { scale, a, b }
    }

    /// The ideal generated by the given elements. In a Krull domain of this
    /// kind it is already divisorial, so this is the v-closure.
    pub fn v_closure(&self, gens: &[FieldElem]) -> Result<FracIdealD> {
        let gens: Vec<&FieldElem> = gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::precondition("v-closure of an all-zero generator set"));
        }
        match &self.kind {
            DomainKind::Rationals => Ok(FracIdealD::unit()),
            DomainKind::Integers => {
                let num = gens.iter().fold(BigInt::zero(), |g, x| g.gcd(x.x()));
                let den = lcm_of_dens(gens.iter().copied());
                Ok(FracIdealD {
                    scale: BigRational::new(num, den),
                    a: BigInt::one(),
                    b: BigInt::zero(),
                })
            }
            DomainKind::Quadratic { d } => {
                let l = lcm_of_dens(gens.iter().copied());
                // lattice vectors in the basis (1, √d): g and g·√d
                let mut vecs = Vec::with_capacity(2 * gens.len());
                for g in &gens {
                    let k = &l / g.den();
                    let (x, y) = (g.x() * &k, g.y() * &k);
                    vecs.push((d * &y, x.clone()));
                    vecs.push((x, y));
                }
                let (mut big_a, mut big_b, mut big_c) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
                for (u, w) in vecs {
                    if w.is_zero() {
                        big_a = big_a.gcd(&u);
                    } else if big_c.is_zero() {
                        big_b = u;
                        big_c = w;
                    } else {
                        let (g, s, t) = ext_gcd(&big_c, &w);
                        let reduced = (&w / &g) * &big_b - (&big_c / &g) * &u;
                        big_a = big_a.gcd(&reduced);
                        big_b = s * &big_b + t * &u;
                        big_c = g;
                    }
                }
                if big_c.is_negative() {
                    big_b = -big_b;
                    big_c = -big_c;
                }
                debug_assert!(big_a.is_positive() && big_c.is_positive());
                debug_assert!(big_a.is_multiple_of(&big_c) && big_b.is_multiple_of(&big_c));
                let a = &big_a / &big_c;
                let b = &big_b / &big_c;
                Ok(self.make_ideal(BigRational::new(big_c, l), a, b))
            }
        }
    }

    pub fn principal_ideal(&self, x: &FieldElem) -> Result<FracIdealD> {
        self.v_closure(std::slice::from_ref(x))
    }

    /// Product of ideals (v-closure of the product, which is the product here).
    pub fn ideal_v_mul(&self, i: &FracIdealD, j: &FracIdealD) -> FracIdealD {
        if !self.is_quadratic() {
            return FracIdealD {
                scale: &i.scale * &j.scale,
                ..FracIdealD::unit()
            };
        }
        let d = self.d();
        let gi = i.z_basis(self);
        let gj = j.z_basis(self);
        let prods: Vec<FieldElem> = gi
            .iter()
            .flat_map(|x| gj.iter().map(|y| x.mul(y, &d)))
            .collect();
        self.v_closure(&prods).expect("product of nonzero ideals is nonzero")
    }

    pub fn ideal_inverse(&self, i: &FracIdealD) -> FracIdealD {
        if !self.is_quadratic() {
            return FracIdealD {
                scale: i.scale.recip(),
                ..FracIdealD::unit()
            };
        }
        // (a, b+√d)·(a, −b+√d) = (a) for a primitive ideal of norm a
        let scale = (&i.scale * BigRational::from_integer(i.a.clone())).recip();
        self.make_ideal(scale, i.a.clone(), -&i.b)
    }

    pub fn ideal_pow(&self, i: &FracIdealD, e: &BigInt) -> FracIdealD {
        let base = if e.is_negative() {
            self.ideal_inverse(i)
        } else {
            i.clone()
        };
        let mut out = FracIdealD::unit();
        let mut k = e.abs();
        while k.is_positive() {
            out = self.ideal_v_mul(&out, &base);
            k -= 1;
        }
        out
    }

    /// Absolute norm.
    pub fn ideal_norm(&self, i: &FracIdealD) -> BigRational {
        match self.kind {
            DomainKind::Quadratic { .. } => {
                &i.scale * &i.scale * BigRational::from_integer(i.a.clone())
            }
            _ => i.scale.abs(),
        }
    }

    pub fn place_ideal(&self, place: &PrimePlace) -> FracIdealD {
        match (&self.kind, &place.root) {
            (DomainKind::Quadratic { .. }, Some(r)) => {
                self.make_ideal(BigRational::one(), place.p.clone(), r.clone())
            }
            _ => FracIdealD {
                scale: BigRational::from_integer(place.p.clone()),
                ..FracIdealD::unit()
            },
        }
    }

    pub fn ideal_from_divisor(&self, div: &DivisorD) -> FracIdealD {
        div.iter().fold(FracIdealD::unit(), |acc, (p, e)| {
            self.ideal_v_mul(&acc, &self.ideal_pow(&self.place_ideal(p), e))
        })
    }

    /// Exponent of `place` in the ideal.
    pub fn ideal_valuation(&self, i: &FracIdealD, place: &PrimePlace) -> BigInt {
        let p = &place.p;
        let vq = BigInt::from(arith::padic(i.scale.numer(), p))
            - BigInt::from(arith::padic(i.scale.denom(), p));
        match (&self.kind, &place.root) {
            (DomainKind::Rationals, _) => BigInt::zero(),
            (DomainKind::Integers, _) | (DomainKind::Quadratic { .. }, None) => vq,
            (DomainKind::Quadratic { .. }, Some(r)) => {
                let va = BigInt::from(arith::padic(&i.a, p));
                if self.is_ramified(place) {
                    2 * vq + va
                } else if va.is_positive() && (&i.b - r).is_multiple_of(p) {
                    vq + va
                } else {
                    vq
                }
            }
        }
    }

    /// Factor a fractional ideal into height-one primes.
    pub fn divisor_of(&self, i: &FracIdealD) -> Result<DivisorD> {
        if self.is_field() {
            return Ok(DivisorD::new());
        }
        let mut primes: Vec<BigInt> = Vec::new();
        for n in [i.scale.numer(), i.scale.denom(), &i.a] {
            primes.extend(arith::factor(n, self.factor_bound)?.into_iter().map(|(p, _)| p));
        }
        primes.sort();
        primes.dedup();
        let mut out = DivisorD::new();
        for p in primes {
            let p = u64::try_from(&p).expect("below the factor bound");
            for place in self.places_above(p) {
                let v = self.ideal_valuation(i, &place);
                out.set(place, v);
            }
        }
        Ok(out)
    }

    /// Divisor of the principal ideal `(x)`.
    pub fn divisor_of_elem(&self, x: &FieldElem) -> Result<DivisorD> {
        self.divisor_of(&self.principal_ideal(x)?)
    }

    /// Normalized discrete valuation of `x` at `place`.
    pub fn valuation(&self, x: &FieldElem, place: &PrimePlace) -> Result<BigInt> {
        if x.is_zero() {
            return Err(Error::precondition("valuation of zero"));
        }
        Ok(self.ideal_valuation(&self.principal_ideal(x)?, place))
    }

    /// Is `x` in the ideal?
    pub fn ideal_contains(&self, i: &FracIdealD, x: &FieldElem) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let quotient = self.ideal_v_mul(&self.principal_ideal(x)?, &self.ideal_inverse(i));
        Ok(quotient.is_integral())
    }
}
