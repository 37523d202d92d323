use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{enumerate, BlockMonoid, FracVIdealS};
use crate::error::{Error, Result};
use crate::lattice::IntVec;

impl BlockMonoid {
    /// Nonzero elements of `B(G₀)` with total multiplicity at most `bound`,
    /// by increasing total and then descending lex.
    pub fn elements(&self, bound: u32) -> Vec<IntVec> {
        let mut out = Vec::new();
        enumerate::up_to(self.num_primes(), bound, |e| {
            if e.iter().any(|&x| x != 0) && self.is_zero_sum_small(e) {
                out.push(IntVec::from_i64(e));
            }
        });
        out
    }

    /// Atoms of `B(G₀)` of total multiplicity at most `bound`: zero-sum
    /// vectors with no nonzero zero-sum vector strictly below them.
    pub fn enumerate_atoms(&self, bound: u32) -> Vec<IntVec> {
        let mut atoms: Vec<IntVec> = Vec::new();
        for e in self.elements(bound) {
            if !atoms.iter().any(|a| e.dominates(a)) {
                atoms.push(e);
            }
        }
        atoms
    }

    /// Check that `B(G₀) ↪ ℕ₀ʳ` is a divisor theory: for every `i`, the
    /// componentwise minimum of the atoms through `𝔭ᵢ` must be `δᵢ`.
    pub fn verify_divisor_theory(&self, bound: u32) -> DivisorTheoryReport {
        let atoms = self.enumerate_atoms(bound);
        let r = self.num_primes();
        let mut meets = Vec::with_capacity(r);
        let mut status = DivisorTheoryStatus::Holds;
        let mut notes = Vec::new();
        for i in 0..r {
            let meet = atoms
                .iter()
                .filter(|a| !a.0[i].is_zero())
                .fold(None::<IntVec>, |m, a| Some(m.map_or(a.clone(), |m| m.min_with(a))));
            match &meet {
                None => {
                    notes.push(format!("prime {i} is not reached by any atom within bound {bound}"));
                    status = DivisorTheoryStatus::Inconclusive;
                }
                Some(m) if *m != IntVec::unit(r, i) => {
                    notes.push(format!("meet of atoms through prime {i} is {m}, not a unit vector"));
                    if status == DivisorTheoryStatus::Holds {
                        status = DivisorTheoryStatus::Fails;
                    }
                }
                Some(_) => {}
            }
            meets.push(meet);
        }
        if status == DivisorTheoryStatus::Fails && atoms.len() == 1 {
            notes.push("a single atom: the monoid is free of rank one, hence factorial".into());
        }
        DivisorTheoryReport {
            bound,
            status,
            atoms,
            meets,
            notes,
        }
    }

    /// Search `a ∈ B(G₀)` with `|a| ≤ bound` for which `α₂ + a − α` satisfies
    /// the predicate. The scan is exhaustive, so the reported minimum
    /// valuation covers every tested pair `(a, i)`.
    pub fn witness_search(
        &self,
        alpha: &IntVec,
        alpha2: &IntVec,
        ideal: &FracVIdealS,
        bound: u32,
        predicate: WitnessPredicate,
    ) -> Result<WitnessReport> {
        let r = self.num_primes();
        for v in [alpha, alpha2, ideal.divisor()] {
            if v.len() != r {
                return Err(Error::schema(format!("vector {v} has length {}, expected {r}", v.len())));
            }
        }
        if !self.is_zero_sum(alpha) || !self.is_zero_sum(alpha2) {
            return Err(Error::precondition("α and α₂ must be zero-sum"));
        }
        if !alpha.dominates(ideal.divisor()) {
            return Err(Error::precondition("α must lie in the ideal I"));
        }
        let shift = alpha2 - alpha;
        let mut tested = 0u64;
        let mut min: Option<BigInt> = None;
        let mut witness = None;
        let zero = IntVec::zeros(r);
        for a in std::iter::once(zero).chain(self.elements(bound)) {
            let x = &shift + &a;
            tested += 1;
            let m = x.0.iter().min().cloned().unwrap_or_else(BigInt::zero);
            if min.as_ref().is_none_or(|cur| m < *cur) {
                min = Some(m);
            }
            if witness.is_none() && predicate.holds(&x) {
                witness = Some(a);
            }
        }
        Ok(WitnessReport {
            bound,
            predicate,
            tested,
            exhausted: witness.is_none(),
            witness,
            min_valuation: min.expect("a = 0 is always tested"),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisorTheoryStatus {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTheoryReport {
    pub bound: u32,
    pub status: DivisorTheoryStatus,
    pub atoms: Vec<IntVec>,
    /// per prime, the meet of the atoms through it
    pub meets: Vec<Option<IntVec>>,
    pub notes: Vec<String>,
}

/// What a witness `a` has to achieve for `x = α₂ + a − α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessPredicate {
    /// some coordinate of `x` has valuation at most `k`
    MinValuationAtMost { k: i64 },
}

impl Default for WitnessPredicate {
    fn default() -> Self {
        WitnessPredicate::MinValuationAtMost { k: 1 }
    }
}

impl WitnessPredicate {
    pub fn holds(&self, x: &IntVec) -> bool {
        match self {
            WitnessPredicate::MinValuationAtMost { k } => {
                x.0.iter().any(|v| *v <= BigInt::from(*k))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub bound: u32,
    pub predicate: WitnessPredicate,
    pub tested: u64,
    pub witness: Option<IntVec>,
    pub exhausted: bool,
    #[serde(with = "crate::serde_util::bigint_str")]
    pub min_valuation: BigInt,
}

