//! Irreducibility certificates for the three element shapes the
//! constructions produce, and a brute-force factorization oracle.
//!
//! A certificate stores the element, the data its argument hinges on, and a
//! transcript of every checked clause. [`replay`] rebuilds the transcript
//! from the element and witness alone.

mod oracle;
mod univariate;

pub use oracle::{kronecker_irreducible_oracle, normalized_degree, OracleCaps, OracleVerdict};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElem, Term};
use crate::domain::{DomainInstance, FieldElem, PrimePlace};
use crate::error::{Error, Result};
use crate::lattice::{gcd_of_vector, IntVec};
use crate::monoid::MonoidInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// `a + bX^g` with `g` of height (0,0,0,…)
    Matsuda,
    /// Eisenstein shape over the localization `D_P[G]`
    Eisenstein,
    /// `X^{g₁} + … + X^{g_n} + X^{g_n + a}` with `v_P(gᵢ) = 0`, `v_P(a) = 1`
    ClaimB,
    OracleVerified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    HeightZero {
        exponent: IntVec,
        #[serde(with = "crate::serde_util::bigint_str")]
        gcd: BigInt,
    },
    Place {
        place: PrimePlace,
    },
    MonoidPrime {
        prime: usize,
        generators: Vec<IntVec>,
        a: IntVec,
    },
    Oracle,
}

/// One checked clause of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub clause: String,
    pub value: String,
    pub ok: bool,
}

impl Check {
    fn new(clause: impl Into<String>, value: impl ToString, ok: bool) -> Self {
        Check {
            clause: clause.into(),
            value: value.to_string(),
            ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub kind: CertificateKind,
    pub element: AlgebraElem,
    pub witness: Witness,
    pub transcript: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assumption: Option<String>,
    /// The factorization oracle only handles rational coefficients.
    pub oracle_applicable: bool,
}

const EISENSTEIN_ASSUMPTION: &str = "Eisenstein criterion over D_P[G] for a total order compatible \
with addition: leading coefficient a P-unit, every other coefficient in P, trailing coefficient \
not in P^2";

fn fail(transcript: &[Check]) -> Error {
    let c = transcript.iter().find(|c| !c.ok).expect("a failing clause");
    Error::precondition(format!("{} (value {})", c.clause, c.value))
}

/// Certify `a + bX^g` irreducible in `K[G]`. Since `g` is part of a basis of
/// `G`, the element is linear in one coordinate.
pub fn matsuda_certificate(a: &FieldElem, b: &FieldElem, g: &IntVec) -> Result<IrreducibilityCertificate> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::precondition("a and b must be nonzero"));
    }
    if g.is_zero() {
        return Err(Error::precondition("g must be nonzero"));
    }
    let gcd = gcd_of_vector(g)?;
    let transcript = vec![
        Check::new("a ≠ 0", a, true),
        Check::new("b ≠ 0", b, true),
        Check::new("gcd of the coordinates of g is 1", &gcd, gcd.is_one()),
    ];
    if !gcd.is_one() {
        return Err(fail(&transcript));
    }
    let element = AlgebraElem::from_terms([
        Term {
            exp: IntVec::zeros(g.len()),
            coef: a.clone(),
        },
        Term {
            exp: g.clone(),
            coef: b.clone(),
        },
    ]);
    Ok(IrreducibilityCertificate {
        kind: CertificateKind::Matsuda,
        oracle_applicable: element.is_rational(),
        element,
        witness: Witness::HeightZero {
            exponent: g.clone(),
            gcd,
        },
        transcript,
        assumption: None,
    })
}

fn eisenstein_transcript(dom: &DomainInstance, f: &AlgebraElem, place: &PrimePlace) -> Result<Vec<Check>> {
    dom.check_place(place)?;
    let terms = f.terms();
    let mut t = vec![Check::new("at least two terms", terms.len(), terms.len() >= 2)];
    if terms.len() < 2 {
        return Ok(t);
    }
    let last = terms.len() - 1;
    for (i, term) in terms.iter().enumerate() {
        let v = dom.valuation(&term.coef, place)?;
        if i == last {
            t.push(Check::new(format!("leading coefficient at {} is a unit at {place}", term.exp), &v, v.is_zero()));
        } else if i == 0 {
            t.push(Check::new(format!("trailing coefficient at {} has valuation 1 at {place}", term.exp), &v, v == BigInt::one()));
        } else {
            t.push(Check::new(format!("coefficient at {} lies in {place}", term.exp), &v, v >= BigInt::one()));
        }
    }
    Ok(t)
}

/// Certify `f` irreducible (indeed prime) in `D_P[G]`, hence in `K[G]`,
/// which is a localization of `D_P[G]`.
pub fn eisenstein_certificate(dom: &DomainInstance, f: &AlgebraElem, place: &PrimePlace) -> Result<IrreducibilityCertificate> {
    let transcript = eisenstein_transcript(dom, f, place)?;
    if transcript.iter().any(|c| !c.ok) {
        return Err(fail(&transcript));
    }
    Ok(IrreducibilityCertificate {
        kind: CertificateKind::Eisenstein,
        element: f.clone(),
        witness: Witness::Place { place: place.clone() },
        transcript,
        assumption: Some(EISENSTEIN_ASSUMPTION.into()),
        oracle_applicable: f.is_rational(),
    })
}

fn claim_b_element(generators: &[IntVec], a: &IntVec) -> AlgebraElem {
    let last = generators.last().expect("nonempty");
    AlgebraElem::from_terms(
        generators
            .iter()
            .cloned()
            .chain(std::iter::once(last + a))
            .map(|exp| Term {
                exp,
                coef: FieldElem::one(),
            }),
    )
}

fn claim_b_transcript(monoid: &MonoidInstance, generators: &[IntVec], a: &IntVec, prime: usize) -> Result<Vec<Check>> {
    if prime >= monoid.num_primes() {
        return Err(Error::precondition(format!("prime index {prime} out of range")));
    }
    let mut t = vec![Check::new("at least one generator", generators.len(), !generators.is_empty())];
    for (i, g) in generators.iter().enumerate() {
        let v = monoid.divisor(g)?.0[prime].clone();
        t.push(Check::new(format!("v_{prime}(g_{i}) = 0"), &v, v.is_zero()));
    }
    let va = monoid.divisor(a)?.0[prime].clone();
    t.push(Check::new(format!("v_{prime}(a) = 1"), &va, va.is_one()));
    if let Some(last) = generators.last() {
        let mut exps: Vec<IntVec> = generators.to_vec();
        exps.push(last + a);
        let n = exps.len();
        exps.sort();
        exps.dedup();
        t.push(Check::new("exponents pairwise distinct", n - exps.len(), exps.len() == n));
    }
    Ok(t)
}

/// Certify `X^{g₁} + … + X^{g_n} + X^{g_n + a}` irreducible in `K[G]`.
/// With `G = ker v_P ⊕ ℤa`, the element is `F + uT` with `F ∈ K[ker v_P]`
/// nonzero and `u` a unit, so it is linear in `T = X^a`.
pub fn claim_b_certificate(monoid: &MonoidInstance, generators: &[IntVec], a: &IntVec, prime: usize) -> Result<IrreducibilityCertificate> {
    let transcript = claim_b_transcript(monoid, generators, a, prime)?;
    if transcript.iter().any(|c| !c.ok) {
        return Err(fail(&transcript));
    }
    Ok(IrreducibilityCertificate {
        kind: CertificateKind::ClaimB,
        element: claim_b_element(generators, a),
        witness: Witness::MonoidPrime {
            prime,
            generators: generators.to_vec(),
            a: a.clone(),
        },
        transcript,
        assumption: None,
        oracle_applicable: true,
    })
}

/// Certificate backed by the oracle alone.
pub fn oracle_certificate(f: &AlgebraElem, caps: &OracleCaps) -> Result<IrreducibilityCertificate> {
    match kronecker_irreducible_oracle(f, caps) {
        OracleVerdict::Irreducible => Ok(IrreducibilityCertificate {
            kind: CertificateKind::OracleVerified,
            element: f.clone(),
            witness: Witness::Oracle,
            transcript: vec![Check::new("oracle verdict", "irreducible", true)],
            assumption: None,
            oracle_applicable: true,
        }),
        OracleVerdict::Unknown { reason } => Err(Error::exhausted(reason)),
        v => Err(Error::precondition(format!("oracle verdict is {v:?}"))),
    }
}

/// Recompute a certificate from its element and witness. Returns `false`
/// if the element, the transcript or any clause disagrees.
pub fn replay(dom: &DomainInstance, monoid: &MonoidInstance, cert: &IrreducibilityCertificate) -> Result<bool> {
    let fresh = match (&cert.kind, &cert.witness) {
        (CertificateKind::Matsuda, Witness::HeightZero { exponent, .. }) => {
            let terms = cert.element.terms();
            if terms.len() != 2 || terms[0].exp.is_zero() == terms[1].exp.is_zero() {
                return Ok(false);
            }
            let (a, b) = if terms[0].exp.is_zero() {
                (&terms[0].coef, &terms[1].coef)
            } else {
                (&terms[1].coef, &terms[0].coef)
            };
            matsuda_certificate(a, b, exponent).ok()
        }
        (CertificateKind::Eisenstein, Witness::Place { place }) => {
            eisenstein_certificate(dom, &cert.element, place).ok()
        }
        (CertificateKind::ClaimB, Witness::MonoidPrime { prime, generators, a }) => {
            claim_b_certificate(monoid, generators, a, *prime).ok()
        }
        (CertificateKind::OracleVerified, Witness::Oracle) => {
            oracle_certificate(&cert.element, &OracleCaps::default()).ok()
        }
        _ => None,
    };
    Ok(fresh.is_some_and(|f| f == *cert))
}
