//! An irreducibility oracle for elements of ℚ[G], G = ℤⁿ, independent of
//! the certificate logic: strip units, pass to the saturated lattice of
//! exponent differences, substitute into one variable and factor there.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::univariate::{self, Poly};
use crate::algebra::{AlgebraElem, Term};
use crate::domain::FieldElem;
use crate::lattice::{snf, IntMat, IntVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaps {
    pub max_degree: usize,
    #[serde(with = "crate::serde_util::bigint_str")]
    pub max_height: BigInt,
    pub node_budget: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_degree: 8,
            max_height: BigInt::from(10_000),
            node_budget: 5_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OracleVerdict {
    Irreducible,
    /// `f` is a unit multiple of the product of the two factors, neither a unit.
    Reducible { factors: [AlgebraElem; 2] },
    Unit,
    Unknown { reason: String },
}

/// `f = X^{base}·c·P(y)` where `P` is an integer polynomial in the
/// coordinates `y` of a saturated sublattice with basis `cols`.
struct Normalized {
    base: IntVec,
    cols: Vec<IntVec>,
    /// exponent shift applied to reach ℕ₀ʳ
    shift: Vec<i64>,
    poly: BTreeMap<Vec<i64>, BigInt>,
    radix: Vec<i64>,
}

impl Normalized {
    fn new(f: &AlgebraElem) -> Option<Self> {
        let terms = f.terms();
        let base = terms[0].exp.clone();
        let n = base.len();
        let diffs: Vec<IntVec> = terms[1..].iter().map(|t| &t.exp - &base).collect();
        let m = IntMat::from_columns(n, &diffs);
        let s = snf(&m);
        let r = s.rank();
        let coords = |x: &IntVec| -> Option<Vec<i64>> {
            let y = s.u.mul_vec(x);
            y.0[..r].iter().map(|v| v.to_i64()).collect()
        };
        let ys: Vec<Vec<i64>> = std::iter::once(vec![0; r])
            .chain(diffs.iter().map(coords).collect::<Option<Vec<_>>>()?)
            .collect();
        let shift: Vec<i64> = (0..r).map(|j| ys.iter().map(|y| y[j]).min().unwrap()).collect();
        let radix: Vec<i64> = (0..r)
            .map(|j| ys.iter().map(|y| y[j] - shift[j]).max().unwrap() + 1)
            .collect();
        let coefs: Vec<BigRational> = terms.iter().map(|t| t.coef.as_rational()).collect::<Option<_>>()?;
        let den = coefs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums: Vec<BigInt> = coefs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let g = nums.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut poly = BTreeMap::new();
        for (y, c) in ys.iter().zip(&nums) {
            let z: Vec<i64> = y.iter().zip(&shift).map(|(a, b)| a - b).collect();
            poly.insert(z, c / &g);
        }
        let cols = s.u_inv.select_cols(0..r).columns();
        Some(Normalized { base, cols, shift, poly, radix })
    }

    fn degree(&self) -> u128 {
        self.poly.keys().map(|z| self.kron(z)).max().unwrap_or(0)
    }

    fn kron(&self, z: &[i64]) -> u128 {
        let mut k = 0u128;
        let mut place = 1u128;
        for (zj, dj) in z.iter().zip(&self.radix) {
            k += *zj as u128 * place;
            place *= *dj as u128;
        }
        k
    }

    fn decode(&self, k: usize) -> Vec<i64> {
        let mut k = k as i64;
        let r = self.radix.len();
        let mut z = vec![0; r];
        for (j, zj) in z.iter_mut().enumerate() {
            if j + 1 == r {
                *zj = k;
            } else {
                *zj = k % self.radix[j];
                k /= self.radix[j];
            }
        }
        z
    }

    fn univariate(&self) -> Poly {
        let mut u = vec![BigInt::zero(); self.degree() as usize + 1];
        for (z, c) in &self.poly {
            u[self.kron(z) as usize] = c.clone();
        }
        u
    }

    fn decode_poly(&self, p: &[BigInt]) -> BTreeMap<Vec<i64>, BigInt> {
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.decode(k), c.clone()))
            .collect()
    }

    /// Back to an element of ℚ[G] (ignoring the unit part).
    fn lift(&self, p: &BTreeMap<Vec<i64>, BigInt>) -> AlgebraElem {
        AlgebraElem::from_terms(p.iter().map(|(z, c)| {
            let mut exp = IntVec::zeros(self.base.len());
            for (j, col) in self.cols.iter().enumerate() {
                exp = &exp + &col.scale(&BigInt::from(z[j] + self.shift[j]));
            }
            Term { exp, coef: FieldElem::from_int(c.clone()) }
        }))
    }
}

fn mul_multi(a: &BTreeMap<Vec<i64>, BigInt>, b: &BTreeMap<Vec<i64>, BigInt>) -> BTreeMap<Vec<i64>, BigInt> {
    let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let z: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(z).or_insert_with(BigInt::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Degree of the univariate polynomial the oracle would factor, or `None`
/// for units, zero and irrational coefficients.
pub fn normalized_degree(f: &AlgebraElem) -> Option<u128> {
    if f.len() < 2 {
        return None;
    }
    Normalized::new(f).map(|n| n.degree())
}

pub fn kronecker_irreducible_oracle(f: &AlgebraElem, caps: &OracleCaps) -> OracleVerdict {
    let unknown = |r: &str| OracleVerdict::Unknown { reason: r.to_string() };
    if f.is_zero() {
        return unknown("zero element");
    }
    if f.len() == 1 {
        return OracleVerdict::Unit;
    }
    if !f.is_rational() {
        return unknown("oracle: not applicable to irrational coefficients");
    }
    let Some(norm) = Normalized::new(f) else {
        return unknown("exponents out of range");
    };
    let deg = norm.degree();
    if deg > caps.max_degree as u128 {
        return unknown(&format!("normalized degree {deg} exceeds cap {}", caps.max_degree));
    }
    if norm.poly.values().any(|c| c.abs() > caps.max_height) {
        return unknown("coefficient height exceeds cap");
    }
    let u = norm.univariate();
    // u = t^k0 · w with w(0) ≠ 0
    let k0 = u.iter().position(|c| !c.is_zero()).unwrap();
    let w: Poly = u[k0..].to_vec();
    let mut budget = caps.node_budget;
    let factors = match univariate::factor_irreducible(&w, &mut budget) {
        Ok(fs) => fs,
        Err(e) => return unknown(&e.0),
    };
    let target = &norm.poly;
    let nf = factors.len();
    // every factor of P maps to t^j times a sub-product of the factors of w
    for mask in 0u64..(1 << nf) {
        let mut cand: Poly = vec![BigInt::one()];
        for (i, q) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                cand = univariate::mul(&cand, q);
            }
        }
        for j in 0..=k0 {
            let mut c = vec![BigInt::zero(); j];
            c.extend(cand.iter().cloned());
            let dc = univariate::degree(&c);
            if dc == 0 || dc >= univariate::degree(&u) {
                continue;
            }
            let Some(cof) = univariate::div_exact(&u, &c) else { continue };
            let (a, b) = (norm.decode_poly(&c), norm.decode_poly(&cof));
            if a.len() < 2 || b.len() < 2 {
                continue;
            }
            if mul_multi(&a, &b) == *target {
                return OracleVerdict::Reducible {
                    factors: [norm.lift(&a), norm.lift(&b)],
                };
            }
        }
    }
    OracleVerdict::Irreducible
}
