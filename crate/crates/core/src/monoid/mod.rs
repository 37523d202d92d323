//! Reduced, finitely generated, torsion-free Krull monoids: free abelian
//! groups ℤⁿ (the case `S = G`) and block monoids `B(G₀)` of zero-sum
//! sequences over a finite subset of a lattice.
//!
//! Elements of the quotient group are handled in two encodings. Algebra
//! code uses *coordinates* relative to a fixed basis of `q(S)`; divisor
//! code uses the *valuation vector* `e(x) ∈ ℤʳ`, one entry per prime
//! divisor `𝔭ᵢ`.

mod enumerate;
mod search;

pub use search::{DivisorTheoryReport, DivisorTheoryStatus, WitnessPredicate, WitnessReport};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classgroup::{ClassElem, ClassGroupDesc};
use crate::error::{Error, Result};
use crate::lattice::{hnf_rows, snf, solve_echelon, IntMat, IntVec, TotalOrderSpec};

/// `B(G₀)` for `G₀` given as distinct nonzero columns of a weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMonoid {
    weights: Vec<IntVec>,
    w: IntMat,
    /// columns: a basis of L = ker W ⊆ ℤʳ, which is q(S)
    basis: IntMat,
    /// left inverse of `basis`
    left_inv: IntMat,
    small: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    weights: Vec<IntVec>,
}

impl BlockMonoid {
    pub fn new(weights: Vec<IntVec>) -> Result<Self> {
        let dim = weights
            .first()
            .map(IntVec::len)
            .ok_or_else(|| Error::precondition("G₀ must be nonempty"))?;
        if dim == 0 || weights.iter().any(|g| g.len() != dim) {
            return Err(Error::schema("weights must share a positive dimension"));
        }
        for (i, g) in weights.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::precondition(format!("weight {i} is zero")));
            }
            if weights[..i].contains(g) {
                return Err(Error::precondition(format!("weight {i} is repeated")));
            }
        }
        let small = weights
            .iter()
            .map(|g| g.to_i64())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::schema("weights must fit in 64 bits"))?;
        let w = IntMat::from_columns(dim, &weights);
        let s = snf(&w);
        let rank = s.rank();
        let r = weights.len();
        let basis = s.v.select_cols(rank..r);
        let left_inv = s.v_inv.select_rows(rank..r);
        Ok(BlockMonoid {
            weights,
            w,
            basis,
            left_inv,
            small,
        })
    }

    pub fn from_i64(weights: &[&[i64]]) -> Result<Self> {
        Self::new(weights.iter().map(|g| IntVec::from_i64(g)).collect())
    }

    /// `B({−2, −1, 1, 2})` in ℤ.
    pub fn section4() -> Self {
        Self::from_i64(&[&[-2], &[-1], &[1], &[2]]).expect("valid weights")
    }

    pub fn weights(&self) -> &[IntVec] {
        &self.weights
    }

    pub fn weight_matrix(&self) -> &IntMat {
        &self.w
    }

    /// Number of prime divisors `r = |G₀|`.
    pub fn num_primes(&self) -> usize {
        self.weights.len()
    }

    /// Rank of `q(S) = ker W`.
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Columns form the basis of `q(S)` used for coordinates.
    pub fn lattice_basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn is_zero_sum(&self, e: &IntVec) -> bool {
        e.len() == self.num_primes() && self.w.mul_vec(e).is_zero()
    }

    pub(crate) fn is_zero_sum_small(&self, e: &[i64]) -> bool {
        let dim = self.small[0].len();
        (0..dim).all(|j| {
            e.iter()
                .zip(&self.small)
                .map(|(k, g)| *k as i128 * g[j] as i128)
                .sum::<i128>()
                == 0
        })
    }

    /// Valuation vector `e(x)` of an element given in lattice coordinates.
    pub fn embed(&self, x: &IntVec) -> IntVec {
        self.basis.mul_vec(x)
    }

    /// Lattice coordinates of a zero-sum vector.
    pub fn coords(&self, e: &IntVec) -> Result<IntVec> {
        if !self.is_zero_sum(e) {
            return Err(Error::precondition(format!("{e} is not a zero-sum vector")));
        }
        Ok(self.left_inv.mul_vec(e))
    }

    /// `𝔭ᵢ`-adic valuation of a multiplicity (or zero-sum) vector.
    pub fn valuation(&self, e: &IntVec, i: usize) -> Result<BigInt> {
        e.0.get(i)
            .cloned()
            .ok_or_else(|| Error::precondition(format!("prime index {i} out of range")))
    }

    /// `C_v(B(G₀)) = ℤʳ / L ≅ im W`, which is free; a divisor maps to the
    /// coordinates of `W·t` in the Hermite basis of `im W`.
    pub fn class_group(&self) -> ClassGroupDesc {
        let h = hnf_rows(&self.w.transpose());
        let cols: Vec<IntVec> = self
            .weights
            .iter()
            .map(|g| solve_echelon(&h, g).expect("a weight lies in the image of W"))
            .collect();
        ClassGroupDesc {
            invariants: vec![crate::classgroup::Invariant(BigInt::zero()); h.rows()],
            projection: IntMat::from_columns(h.rows(), &cols),
        }
    }
}

impl Serialize for BlockMonoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BlockRepr {
            weights: self.weights.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlockMonoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BlockRepr::deserialize(d)?;
        BlockMonoid::new(r.weights).map_err(serde::de::Error::custom)
    }
}

/// A fractional v-ideal `{x ∈ q(S) : e(x) ≥ t}`, stored as its divisor `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FracVIdealS(pub IntVec);

impl FracVIdealS {
    pub fn divisor(&self) -> &IntVec {
        &self.0
    }

    pub fn inverse(&self) -> FracVIdealS {
        FracVIdealS(-&self.0)
    }

    pub fn v_mul(&self, other: &FracVIdealS) -> FracVIdealS {
        FracVIdealS(&self.0 + &other.0)
    }
}

/// The exponent monoid `S` of `D[S]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonoidInstance {
    /// `S = G = ℤⁿ`: every v-ideal is principal and there are no primes.
    Group { rank: usize },
    Block(BlockMonoid),
}

impl MonoidInstance {
    pub fn group(rank: usize) -> Self {
        MonoidInstance::Group { rank }
    }

    pub fn section4() -> Self {
        MonoidInstance::Block(BlockMonoid::section4())
    }

    pub fn block(&self) -> Option<&BlockMonoid> {
        match self {
            MonoidInstance::Block(b) => Some(b),
            MonoidInstance::Group { .. } => None,
        }
    }

    pub fn is_group(&self) -> bool {
        matches!(self, MonoidInstance::Group { .. })
    }

    /// Rank of `q(S)`, the length of exponent coordinate vectors.
    pub fn rank(&self) -> usize {
        match self {
            MonoidInstance::Group { rank } => *rank,
            MonoidInstance::Block(b) => b.rank(),
        }
    }

    pub fn num_primes(&self) -> usize {
        self.block().map_or(0, BlockMonoid::num_primes)
    }

    /// The total order on exponents: lex on lattice coordinates.
    pub fn order(&self) -> TotalOrderSpec {
        TotalOrderSpec::lex(self.rank())
    }

    fn check_dim(&self, x: &IntVec) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::schema(format!(
                "exponent {x} has length {}, expected {}",
                x.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// Valuation vector of a group element given in coordinates.
    pub fn divisor(&self, x: &IntVec) -> Result<IntVec> {
        self.check_dim(x)?;
        Ok(match self {
            MonoidInstance::Group { .. } => IntVec::zeros(0),
            MonoidInstance::Block(b) => b.embed(x),
        })
    }

    /// `x ∈ S`, i.e. every prime valuation is nonnegative.
    pub fn contains(&self, x: &IntVec) -> Result<bool> {
        Ok(self.divisor(x)?.is_nonnegative())
    }

    pub fn check_ideal(&self, t: &FracVIdealS) -> Result<()> {
        if t.0.len() != self.num_primes() {
            return Err(Error::schema(format!(
                "monoid divisor has length {}, expected {}",
                t.0.len(),
                self.num_primes()
            )));
        }
        Ok(())
    }

    pub fn ideal_contains(&self, t: &FracVIdealS, x: &IntVec) -> Result<bool> {
        self.check_ideal(t)?;
        Ok(self.divisor(x)?.dominates(&t.0))
    }

    /// `(g₁ + S ∪ … ∪ g_n + S)_v`: the componentwise minimum of divisors.
    pub fn v_closure(&self, gens: &[IntVec]) -> Result<FracVIdealS> {
        let mut it = gens.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::precondition("v-closure of an empty generator set"))?;
        let mut t = self.divisor(first)?;
        for g in it {
            t = t.min_with(&self.divisor(g)?);
        }
        Ok(FracVIdealS(t))
    }

    pub fn principal(&self, x: &IntVec) -> Result<FracVIdealS> {
        self.v_closure(std::slice::from_ref(x))
    }

    pub fn class_group(&self) -> ClassGroupDesc {
        match self {
            MonoidInstance::Group { .. } => ClassGroupDesc::trivial(0),
            MonoidInstance::Block(b) => b.class_group(),
        }
    }

    pub fn class_of_divisor(&self, t: &FracVIdealS) -> Result<ClassElem> {
        self.check_ideal(t)?;
        Ok(self.class_group().project(&t.0))
    }

    /// A nonnegative divisor of the given class with the smallest total,
    /// found by scanning totals up to `bound`.
    pub fn divisor_in_class(&self, class: &ClassElem, bound: u32) -> Result<FracVIdealS> {
        let cg = self.class_group();
        if class.0.len() != cg.invariants.len() {
            return Err(Error::schema(format!(
                "class {class} has {} coordinates, expected {}",
                class.0.len(),
                cg.invariants.len()
            )));
        }
        let target = cg.reduce(&class.0);
        let r = self.num_primes();
        for total in 0..=bound {
            let mut hit = None;
            enumerate::with_total(r, total, &mut |t| {
                if hit.is_none() {
                    let t = IntVec::from_i64(t);
                    if cg.project(&t) == target {
                        hit = Some(t);
                    }
                }
            });
            if let Some(t) = hit {
                return Ok(FracVIdealS(t));
            }
        }
        Err(Error::exhausted(format!("no divisor of class {class} with total at most {bound}")))
    }

    /// Indices `i` with `v_i(g) = 0` for every given element, ascending.
    pub fn primes_avoiding(&self, gens: &[IntVec]) -> Result<Vec<usize>> {
        let divs = gens
            .iter()
            .map(|g| self.divisor(g))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.num_primes())
            .filter(|&i| divs.iter().all(|e| e.0[i].is_zero()))
            .collect())
    }

    /// Smallest prime index at which every given element has valuation 0.
    pub fn find_prime_avoiding(&self, gens: &[IntVec]) -> Result<usize> {
        self.primes_avoiding(gens)?
            .first()
            .copied()
            .ok_or_else(|| Error::exhausted("no prime divisor avoids every given element"))
    }

    /// Finitely many group elements whose v-closure is the ideal with
    /// divisor `t`. Searches zero-sum points `t + s` with `s ≥ 0` and
    /// `|s| ≤ bound`, one per coordinate that still needs `sᵢ = 0`.
    pub fn generators_of_divisor(&self, t: &FracVIdealS, bound: u32) -> Result<Vec<IntVec>> {
        self.check_ideal(t)?;
        let b = match self {
            MonoidInstance::Group { rank } => return Ok(vec![IntVec::zeros(*rank)]),
            MonoidInstance::Block(b) => b,
        };
        if b.is_zero_sum(&t.0) {
            return Ok(vec![b.coords(&t.0)?]);
        }
        let r = b.num_primes();
        let base = t
            .0
            .to_i64()
            .ok_or_else(|| Error::precondition("divisor entries must fit in 64 bits"))?;
        let mut found: Vec<Vec<i64>> = Vec::new();
        let mut covered = vec![false; r];
        enumerate::up_to(r, bound, |s| {
            if covered.iter().all(|&c| c) {
                return;
            }
            let opens = (0..r).any(|i| !covered[i] && s[i] == 0);
            if !opens {
                return;
            }
            let p: Vec<i64> = base.iter().zip(s).map(|(x, y)| x + y).collect();
            if b.is_zero_sum_small(&p) {
                for i in 0..r {
                    covered[i] |= s[i] == 0;
                }
                found.push(p);
            }
        });
        if let Some(i) = covered.iter().position(|c| !c) {
            return Err(Error::exhausted(format!(
                "no generator attains coordinate {i} of {} within bound {bound}",
                t.0
            )));
        }
        let gens = found
            .iter()
            .map(|p| b.coords(&IntVec::from_i64(p)))
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(self.v_closure(&gens)?, *t);
        Ok(gens)
    }

    /// Group elements of the v-ideal `t` other than those in `exclude`, in
    /// order of increasing `|e(x) − t|`, at most `count` of them.
    pub fn ideal_points(&self, t: &FracVIdealS, count: usize, exclude: &[IntVec]) -> Result<Vec<IntVec>> {
        self.check_ideal(t)?;
        let mut out = Vec::new();
        match self {
            MonoidInstance::Group { rank } => {
                // any element of G; walk the coordinate axes outward
                let mut k = 1i64;
                while out.len() < count {
                    for i in 0..*rank {
                        for s in [k, -k] {
                            let mut v = vec![0i64; *rank];
                            v[i] = s;
                            let v = IntVec::from_i64(&v);
                            if !exclude.contains(&v) && out.len() < count {
                                out.push(v);
                            }
                        }
                    }
                    if *rank == 0 {
                        break;
                    }
                    k += 1;
                }
            }
            MonoidInstance::Block(b) => {
                let base = t.0.to_i64().ok_or_else(|| Error::precondition("divisor too large"))?;
                let mut total = 0u32;
                while out.len() < count {
                    enumerate::with_total(b.num_primes(), total, &mut |s| {
                        if out.len() >= count {
                            return;
                        }
                        let p: Vec<i64> = base.iter().zip(s).map(|(x, y)| x + y).collect();
                        if b.is_zero_sum_small(&p) {
                            let c = b.coords(&IntVec::from_i64(&p)).expect("zero-sum");
                            if !exclude.contains(&c) {
                                out.push(c);
                            }
                        }
                    });
                    total += 1;
                    if total > 64 {
                        return Err(Error::exhausted("ideal point scan exhausted"));
                    }
                }
            }
        }
        if out.len() < count {
            return Err(Error::exhausted("ideal point scan exhausted"));
        }
        Ok(out)
    }
}
