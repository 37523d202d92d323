use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::serde_util::parse_int;

/// `(x + y·√d) / den` in lowest terms with `den > 0`. Over ℚ, `y = 0`.
///
/// The radicand `d` is not stored; operations that need it take it as an
/// argument (`0` for the rational case).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    x: BigInt,
    y: BigInt,
    den: BigInt,
}

impl FieldElem {
    pub fn new(x: BigInt, y: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::schema("zero denominator"));
        }
        Ok(Self::normalized(x, y, den))
    }

    fn normalized(mut x: BigInt, mut y: BigInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            x = -x;
            y = -y;
            den = -den;
        }
        let g = x.gcd(&y).gcd(&den);
        if !g.is_zero() && !g.is_one() {
            x /= &g;
            y /= &g;
            den /= &g;
        }
        if x.is_zero() && y.is_zero() {
            den = BigInt::one();
        }
        FieldElem { x, y, den }
    }

    pub fn zero() -> Self {
        Self::from_int(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(x: BigInt) -> Self {
        FieldElem {
            x,
            y: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_i64(x: i64) -> Self {
        Self::from_int(x.into())
    }

    pub fn from_rat(q: &BigRational) -> Self {
        Self::normalized(q.numer().clone(), BigInt::zero(), q.denom().clone())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::normalized(n.into(), BigInt::zero(), d.into())
    }

    /// `x + y√d` with integer parts.
    pub fn quad(x: i64, y: i64) -> Self {
        Self::normalized(x.into(), y.into(), BigInt::one())
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.x.clone(), self.den.clone()))
    }

    /// Lies in ℤ[√d] (or ℤ).
    pub fn is_integral_coords(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        Self::normalized(
            &self.x * &o.den + &o.x * &self.den,
            &self.y * &o.den + &o.y * &self.den,
            &self.den * &o.den,
        )
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            x: -&self.x,
            y: -&self.y,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FieldElem, d: &BigInt) -> FieldElem {
        Self::normalized(
            &self.x * &o.x + d * &self.y * &o.y,
            &self.x * &o.y + &self.y * &o.x,
            &self.den * &o.den,
        )
    }

    pub fn scale_int(&self, k: &BigInt) -> FieldElem {
        Self::normalized(&self.x * k, &self.y * k, self.den.clone())
    }

    pub fn conj(&self) -> FieldElem {
        FieldElem {
            x: self.x.clone(),
            y: -&self.y,
            den: self.den.clone(),
        }
    }

    /// Field norm `(x² − d·y²) / den²`.
    pub fn norm(&self, d: &BigInt) -> BigRational {
        BigRational::new(
            &self.x * &self.x - d * &self.y * &self.y,
            &self.den * &self.den,
        )
    }

    pub fn inv(&self, d: &BigInt) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::precondition("inverse of zero"));
        }
        // 1/((x+y√d)/den) = den·(x−y√d)/(x²−dy²)
        let n = &self.x * &self.x - d * &self.y * &self.y;
        Ok(Self::normalized(
            &self.den * &self.x,
            -(&self.den * &self.y),
            n,
        ))
    }

    pub fn div(&self, o: &FieldElem, d: &BigInt) -> Result<FieldElem> {
        Ok(self.mul(&o.inv(d)?, d))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => self.x.to_string(),
            (true, false) => format!("{}√d", self.y),
            (false, false) if self.y.is_negative() => format!("{}-{}√d", self.x, -&self.y),
            (false, false) => format!("{}+{}√d", self.x, self.y),
        };
        if self.den.is_one() {
            write!(f, "{body}")
        } else if self.y.is_zero() {
            write!(f, "{body}/{}", self.den)
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum NumRepr {
    Rational(String),
    Quadratic([String; 2]),
}

#[derive(Serialize, Deserialize)]
pub(crate) struct FieldElemRepr {
    pub num: NumRepr,
    pub den: String,
}

impl From<&FieldElem> for FieldElemRepr {
    fn from(e: &FieldElem) -> Self {
        let num = if e.y.is_zero() {
            NumRepr::Rational(e.x.to_string())
        } else {
            NumRepr::Quadratic([e.x.to_string(), e.y.to_string()])
        };
        FieldElemRepr {
            num,
            den: e.den.to_string(),
        }
    }
}

impl TryFrom<FieldElemRepr> for FieldElem {
    type Error = Error;
    fn try_from(r: FieldElemRepr) -> Result<Self> {
        let (x, y) = match r.num {
            NumRepr::Rational(x) => (parse_int(&x), Ok(BigInt::zero())),
            NumRepr::Quadratic([x, y]) => (parse_int(&x), parse_int(&y)),
        };
        let den = parse_int(&r.den).map_err(Error::Schema)?;
        FieldElem::new(x.map_err(Error::Schema)?, y.map_err(Error::Schema)?, den)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldElemRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FieldElemRepr::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let e = FieldElem::new(4.into(), 6.into(), (-8).into()).unwrap();
        assert_eq!((e.x(), e.y(), e.den()), (&(-2).into(), &(-3).into(), &4.into()));
        assert!(FieldElem::new(1.into(), 0.into(), 0.into()).is_err());
        assert_eq!(FieldElem::new(0.into(), 0.into(), 7.into()).unwrap(), FieldElem::zero());
    }

    #[test]
    fn quadratic_arithmetic() {
        let d = BigInt::from(-5);
        let a = FieldElem::quad(1, 1);
        let b = FieldElem::quad(1, -1);
        assert_eq!(a.mul(&b, &d), FieldElem::from_i64(6));
        assert_eq!(a.norm(&d), BigRational::from_integer(6.into()));
        let inv = a.inv(&d).unwrap();
        assert_eq!(inv.mul(&a, &d), FieldElem::one());
        assert_eq!(FieldElem::from_i64(2).div(&a, &d).unwrap().to_string(), "(1-1√d)/3");
    }

    #[test]
    fn json_shape() {
        let e = FieldElem::new(1.into(), (-1).into(), 3.into()).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"num":["1","-1"],"den":"3"}"#);
        assert_eq!(serde_json::from_str::<FieldElem>(&s).unwrap(), e);
        let q: FieldElem = serde_json::from_str(r#"{"num":"6","den":"4"}"#).unwrap();
        assert_eq!(q, FieldElem::ratio(3, 2));
        assert!(serde_json::from_str::<FieldElem>(r#"{"num":"1","den":"0"}"#).is_err());
    }
}
