use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{AlgebraElem, MonoidAlgebra, PrincipalIntersectionRep, Term};
use crate::domain::FieldElem;
use crate::error::Result;
use crate::lattice::IntVec;

/// Sampling parameters for the brute-force check of `fK[G] ∩ D[S]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBounds {
    pub samples: usize,
    /// terms per sampled `h`, at least 1
    pub max_terms: usize,
    /// bound on numerators and denominators of coefficient multipliers
    pub coef_height: i64,
    /// half-width of the exponent offset box, in lattice coordinates
    pub exp_box: i64,
    /// search bound for generators of `E_f⁻¹`
    pub generator_bound: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            samples: 500,
            max_terms: 3,
            coef_height: 12,
            exp_box: 2,
            generator_bound: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `c·X^h` with `c`, `h` generators of the claimed module, but `f·cX^h ∉ D[S]`
    GeneratorNotInIntersection,
    /// a sampled `h` in the claimed module with `f·h ∉ D[S]`
    SampleNotInIntersection,
    /// a sampled `h` outside the claimed module with `f·h ∈ D[S]`
    SampleMissedByRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub h: AlgebraElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma32Report {
    pub rep: PrincipalIntersectionRep,
    pub seed: u64,
    pub bounds: OracleBounds,
    pub generator_checks: usize,
    /// sampled `h` lying in the claimed module
    pub samples_in_rep: usize,
    /// sampled `h` with `f·h ∈ D[S]`
    pub samples_in_intersection: usize,
    pub violation_count: usize,
    /// the first few violations
    pub violations: Vec<Violation>,
    pub pass: bool,
}

const KEPT_VIOLATIONS: usize = 5;

impl MonoidAlgebra {
    /// Check `fK[G] ∩ D[S] = f·A_f⁻¹[E_f⁻¹]` by brute force.
    pub fn lemma32_oracle_check(&self, f: &AlgebraElem, seed: u64, bounds: &OracleBounds) -> Result<Lemma32Report> {
        let rep = self.intersect_principal(f)?;
        self.lemma32_check_rep(&rep, seed, bounds)
    }

    /// Check a given representation, which need not be the correct one;
    /// this is how the negative controls are run.
    pub fn lemma32_check_rep(&self, rep: &PrincipalIntersectionRep, seed: u64, bounds: &OracleBounds) -> Result<Lemma32Report> {
        let f = &rep.f;
        let dom = self.domain();
        let ideal = dom.ideal_from_divisor(&rep.domain_part);
        let coef_gens = ideal.z_basis(dom);
        let exp_gens = self
            .monoid()
            .generators_of_divisor(&rep.monoid_part, bounds.generator_bound)?;
        let mut violations = Vec::new();
        let mut count = 0usize;
        let mut record = |kind, h: AlgebraElem, out: &mut Vec<Violation>| {
            count += 1;
            if out.len() < KEPT_VIOLATIONS {
                out.push(Violation { kind, h });
            }
        };

        let mut generator_checks = 0;
        for c in &coef_gens {
            for g in &exp_gens {
                generator_checks += 1;
                let h = AlgebraElem::monomial(c.clone(), g.clone());
                if !self.is_member(&self.mul(f, &h))? {
                    record(ViolationKind::GeneratorNotInIntersection, h, &mut violations);
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut in_rep, mut in_ds) = (0, 0);
        let mut done = 0;
        while done < bounds.samples {
            let h = self.sample(&mut rng, &coef_gens, &exp_gens, bounds);
            if h.is_zero() {
                continue;
            }
            done += 1;
            let a = self.in_module(&h, &ideal, &rep.monoid_part)?;
            let b = self.is_member(&self.mul(f, &h))?;
            in_rep += a as usize;
            in_ds += b as usize;
            match (a, b) {
                (true, false) => record(ViolationKind::SampleNotInIntersection, h, &mut violations),
                (false, true) => record(ViolationKind::SampleMissedByRep, h, &mut violations),
                _ => {}
            }
        }
        Ok(Lemma32Report {
            rep: rep.clone(),
            seed,
            bounds: bounds.clone(),
            generator_checks,
            samples_in_rep: in_rep,
            samples_in_intersection: in_ds,
            violation_count: count,
            pass: count == 0,
            violations,
        })
    }

    /// A random `h` near the claimed module: each term is a generator
    /// coefficient scaled by a small rational, at a generator exponent
    /// shifted (half the time) by a random offset.
    fn sample(
        &self,
        rng: &mut ChaCha8Rng,
        coef_gens: &[FieldElem],
        exp_gens: &[IntVec],
        b: &OracleBounds,
    ) -> AlgebraElem {
        let d = self.domain().d();
        let n = self.rank();
        let k = rng.gen_range(1..=b.max_terms.max(1));
        let terms = (0..k).map(|_| {
            let mut coef = FieldElem::zero();
            for g in coef_gens {
                let m = rng.gen_range(-3i64..=3);
                coef = coef.add(&g.scale_int(&m.into()));
            }
            if coef.is_zero() {
                coef = coef_gens[0].clone();
            }
            let num = loop {
                let v = rng.gen_range(-b.coef_height..=b.coef_height);
                if v != 0 {
                    break v;
                }
            };
            let den = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=b.coef_height) };
            coef = coef.mul(&FieldElem::ratio(num, den), &d);
            let mut exp = exp_gens[rng.gen_range(0..exp_gens.len())].clone();
            if rng.gen_bool(0.5) {
                let off: Vec<i64> = (0..n).map(|_| rng.gen_range(-b.exp_box..=b.exp_box)).collect();
                exp = &exp + &IntVec::from_i64(&off);
            }
            Term { exp, coef }
        });
        AlgebraElem::from_terms(terms.collect::<Vec<_>>())
    }
}
