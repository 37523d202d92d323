//! Finitely generated abelian groups presented as `ℤ^k / relations`, in the
//! form needed for divisor class groups: invariant factors plus a linear
//! projection from divisor coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{snf, IntMat, IntVec};

/// A class, in the coordinates of a [`ClassGroupDesc`]. Coordinates with a
/// positive invariant factor `n` are reduced into `[0, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassElem(pub IntVec);

impl ClassElem {
    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        ClassElem(IntVec::from_i64(xs))
    }
}

impl fmt::Display for ClassElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `⊕ ℤ/nᵢ` (with `nᵢ = 0` meaning a free factor ℤ) together with the
/// projection matrix sending a divisor vector to class coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupDesc {
    pub invariants: Vec<Invariant>,
    pub projection: IntMat,
}

/// One invariant factor, serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Invariant(#[serde(with = "crate::serde_util::bigint_str")] pub BigInt);

impl ClassGroupDesc {
    pub fn trivial(generators: usize) -> Self {
        ClassGroupDesc {
            invariants: vec![],
            projection: IntMat::zeros(0, generators),
        }
    }

    /// The cokernel of the row lattice of `relations` (rows are relations
    /// among `relations.cols()` generators).
    pub fn from_relations(relations: &IntMat) -> Self {
        let s = snf(relations);
        let k = relations.cols();
        let diag = s.diagonal();
        let mut invariants = Vec::new();
        let mut keep = Vec::new();
        for j in 0..k {
            let dj = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
            if !dj.is_one() {
                invariants.push(Invariant(dj));
                keep.push(j);
            }
        }
        // class of a row vector w is w·V, restricted to the kept coordinates
        let projection = s.v.select_cols(keep).transpose();
        ClassGroupDesc {
            invariants,
            projection,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Number of free ℤ factors.
    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|n| n.0.is_zero()).count()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.invariants.iter().map(|n| n.0.clone()).collect()
    }

    pub fn reduce(&self, coords: &IntVec) -> ClassElem {
        ClassElem(IntVec(
            coords
                .0
                .iter()
                .zip(&self.invariants)
                .map(|(c, n)| if n.0.is_zero() { c.clone() } else { c.mod_floor(&n.0) })
                .collect(),
        ))
    }

    pub fn project(&self, divisor: &IntVec) -> ClassElem {
        self.reduce(&self.projection.mul_vec(divisor))
    }

    pub fn identity(&self) -> ClassElem {
        ClassElem(IntVec::zeros(self.invariants.len()))
    }

    pub fn add(&self, x: &ClassElem, y: &ClassElem) -> ClassElem {
        self.reduce(&(&x.0 + &y.0))
    }

    pub fn neg(&self, x: &ClassElem) -> ClassElem {
        self.reduce(&-&x.0)
    }
}

impl fmt::Display for ClassGroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariants
            .iter()
            .map(|n| if n.0.is_zero() { "ℤ".to_string() } else { format!("ℤ/{}", n.0) })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_of_order_two() {
        let g = ClassGroupDesc::from_relations(&IntMat::from_i64(&[&[2], &[4]]));
        assert_eq!(g.invariant_factors(), vec![BigInt::from(2)]);
        assert_eq!(g.project(&IntVec::from_i64(&[1])), ClassElem::from_i64(&[1]));
        assert!(g.project(&IntVec::from_i64(&[6])).is_identity());
        assert_eq!(g.to_string(), "ℤ/2");
    }

    #[test]
    fn free_factor_from_missing_relations() {
        let g = ClassGroupDesc::from_relations(&IntMat::from_i64(&[&[1, 1]]));
        assert_eq!(g.invariant_factors(), vec![BigInt::zero()]);
        assert_eq!(g.free_rank(), 1);
        assert!(g.project(&IntVec::from_i64(&[3, 3])).is_identity());
        assert!(!g.project(&IntVec::from_i64(&[1, 0])).is_identity());
    }
}
