//! The block monoid `B({−2, −1, 1, 2})` with `α₁ = (2,2,2,2)` and
//! `α₂ = 2α₁`. No `a` in the monoid makes `α₂ + a − α₁` drop below
//! valuation 2 at any prime, which rules out the witness a sharper
//! approximation statement would need.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classgroup::ClassGroupDesc;
use crate::error::{Error, Result};
use crate::lattice::IntVec;
use crate::monoid::{BlockMonoid, FracVIdealS, WitnessPredicate, WitnessReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section4Instance {
    pub monoid: BlockMonoid,
    pub alpha1: IntVec,
    pub alpha2: IntVec,
}

pub fn build_section4() -> Section4Instance {
    let alpha1 = IntVec::from_i64(&[2, 2, 2, 2]);
    Section4Instance {
        monoid: BlockMonoid::section4(),
        alpha2: &alpha1 + &alpha1,
        alpha1,
    }
}

/// `v_i(α₂ − α₁)` and the resulting identity for one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCheck {
    pub prime: usize,
    #[serde(with = "crate::serde_util::bigint_str")]
    pub shift: BigInt,
    pub identity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub alpha1: IntVec,
    pub alpha2: IntVec,
    pub class_group: ClassGroupDesc,
    pub symbolic: Vec<SymbolicCheck>,
    /// Lower bound on every `v_i(α₂ + a − α₁)` implied by the identities.
    #[serde(with = "crate::serde_util::bigint_str")]
    pub symbolic_min: BigInt,
    pub search: WitnessReport,
    pub witness_found: bool,
    pub summary: String,
}

/// Check a pair `(α₁, α₂)` both ways. Since `v_i` is additive,
/// `v_i(α₂ + a − α₁) = v_i(α₂ − α₁) + v_i(a)` with `v_i(a) ≥ 0`; the
/// exhaustive search over `|a| ≤ bound` confirms the bound numerically.
pub fn verify_pair(inst: &Section4Instance, bound: u32) -> Result<CounterexampleReport> {
    let m = &inst.monoid;
    if !m.is_zero_sum(&inst.alpha1) || !m.is_zero_sum(&inst.alpha2) {
        return Err(Error::precondition("α₁ and α₂ must be zero-sum"));
    }
    let shift = &inst.alpha2 - &inst.alpha1;
    let symbolic: Vec<SymbolicCheck> = shift
        .0
        .iter()
        .enumerate()
        .map(|(i, s)| SymbolicCheck {
            prime: i,
            shift: s.clone(),
            identity: format!("v_{i}(α₂ + a − α₁) = {s} + v_{i}(a)"),
        })
        .collect();
    let symbolic_min = shift.0.iter().min().cloned().unwrap_or_default();
    let search = m.witness_search(
        &inst.alpha1,
        &inst.alpha2,
        &FracVIdealS(inst.alpha1.clone()),
        bound,
        WitnessPredicate::default(),
    )?;
    let witness_found = search.witness.is_some();
    let summary = match &search.witness {
        None => format!(
            "no witness; minimum over all tested (a,i) = {} ({} elements up to total {bound})",
            search.min_valuation, search.tested
        ),
        Some(a) => format!("witness a = {a}; minimum over all tested (a,i) = {}", search.min_valuation),
    };
    Ok(CounterexampleReport {
        alpha1: inst.alpha1.clone(),
        alpha2: inst.alpha2.clone(),
        class_group: m.class_group(),
        symbolic,
        symbolic_min,
        search,
        witness_found,
        summary,
    })
}

pub fn verify_counterexample(bound: u32) -> Result<CounterexampleReport> {
    verify_pair(&build_section4(), bound)
}
