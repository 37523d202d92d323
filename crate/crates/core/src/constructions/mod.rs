//! Prime divisors of `D[S]` in a prescribed divisor class.
//!
//! Every construction returns elements `g ∈ K[G]` together with an
//! irreducibility certificate and the description of `gK[G] ∩ D[S]`, whose
//! class is checked against the requested pair `([I], [J])`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElem, ClassPair, MonoidAlgebra, PrincipalIntersectionRep, Term};
use crate::domain::{DivisorD, DomainInstance, FieldElem};
use crate::error::{Error, Result};
use crate::irreducible::{
    claim_b_certificate, eisenstein_certificate, matsuda_certificate, replay, IrreducibilityCertificate,
};
use crate::lattice::{gcd_of_vector, split_basis_by_functional, IntMat, IntVec};
use crate::monoid::{BlockMonoid, FracVIdealS};

/// Search bound (total multiplicity) for generators of `J⁻¹` and for atoms.
pub const SCAN_BOUND: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    KimCase1,
    Matsuda,
    FieldCase,
    Theorem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDivisorCertificate {
    pub construction: Construction,
    pub index: usize,
    pub element: AlgebraElem,
    pub irreducibility: IrreducibilityCertificate,
    pub intersection: PrincipalIntersectionRep,
    pub target: ClassPair,
    pub verified: bool,
}

/// The divisors `I` and `J` of a class request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTarget {
    pub domain: DivisorD,
    pub monoid: FracVIdealS,
}

impl ClassTarget {
    pub fn trivial(alg: &MonoidAlgebra) -> Self {
        ClassTarget {
            domain: DivisorD::new(),
            monoid: FracVIdealS(IntVec::zeros(alg.monoid().num_primes())),
        }
    }
}

fn finish(
    alg: &MonoidAlgebra,
    construction: Construction,
    index: usize,
    irreducibility: IrreducibilityCertificate,
    target: &ClassTarget,
) -> Result<PrimeDivisorCertificate> {
    let element = irreducibility.element.clone();
    let intersection = alg.intersect_principal(&element)?;
    let target = alg.class_pair(&target.domain, &target.monoid)?;
    Ok(PrimeDivisorCertificate {
        construction,
        index,
        verified: intersection.class == target,
        element,
        irreducibility,
        intersection,
        target,
    })
}

fn require_domain(alg: &MonoidAlgebra) -> Result<()> {
    if alg.domain().is_field() {
        return Err(Error::precondition("the coefficient ring must not be a field"));
    }
    Ok(())
}

/// `g_P = a/b + X^α` for `m` triples `(a, b, P)`, over `D[G]`.
pub fn construct_kim_case1(alg: &MonoidAlgebra, i: &DivisorD, alpha: &IntVec, m: usize) -> Result<Vec<PrimeDivisorCertificate>> {
    require_domain(alg)?;
    if !alg.monoid().is_group() {
        return Err(Error::precondition("this construction needs S = G"));
    }
    if alpha.len() != alg.rank() {
        return Err(Error::schema(format!("α has length {}, expected {}", alpha.len(), alg.rank())));
    }
    if !alg.monoid().order().is_positive(alpha) {
        return Err(Error::precondition(format!("α = {alpha} is not positive in the lex order")));
    }
    let dom = alg.domain();
    let ideal = dom.ideal_from_divisor(i);
    let target = ClassTarget {
        domain: i.clone(),
        monoid: FracVIdealS(IntVec::zeros(0)),
    };
    let mut out = Vec::with_capacity(m);
    for (k, t) in dom.lemma33_two_generators(&ideal, m)?.into_iter().enumerate() {
        let p = t.a.div(&t.b, &dom.d())?;
        let g = AlgebraElem::from_terms([
            Term {
                exp: IntVec::zeros(alpha.len()),
                coef: p,
            },
            Term {
                exp: alpha.clone(),
                coef: FieldElem::one(),
            },
        ]);
        let cert = eisenstein_certificate(dom, &g, &t.place)?;
        out.push(finish(alg, Construction::KimCase1, k, cert, &target)?);
    }
    Ok(out)
}

/// Vectors of `ℤⁿ` with coprime coordinates and positive first nonzero
/// coordinate, by increasing `ℓ¹` norm and then descending lex.
fn height_zero_exponents(n: usize, max_norm: i64) -> impl Iterator<Item = IntVec> {
    (1..=max_norm).flat_map(move |s| {
        let mut all = Vec::new();
        with_norm(n, s, &mut Vec::new(), &mut all);
        all.into_iter().filter_map(|v| {
            let v = IntVec::from_i64(&v);
            let first_positive = v.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive());
            (first_positive && gcd_of_vector(&v).is_ok_and(|g| g.is_one())).then_some(v)
        })
    })
}

fn with_norm(n: usize, s: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() + 1 == n {
        for x in [s, -s] {
            prefix.push(x);
            out.push(prefix.clone());
            prefix.pop();
            if s == 0 {
                break;
            }
        }
        return;
    }
    for x in (-s..=s).rev() {
        prefix.push(x);
        with_norm(n, s - x.abs(), prefix, out);
        prefix.pop();
    }
}

/// `a + bX^{g_k}` for `m` distinct height-zero exponents `g_k`, over `D[G]`
/// or `K[G]`. Over a field `a = b = 1`.
pub fn construct_matsuda_primes(alg: &MonoidAlgebra, i: &DivisorD, m: usize) -> Result<Vec<PrimeDivisorCertificate>> {
    if !alg.monoid().is_group() {
        return Err(Error::precondition("this construction needs S = G"));
    }
    let n = alg.rank();
    if n == 0 {
        return Err(Error::precondition("the exponent group has rank 0"));
    }
    let dom = alg.domain();
    let (a, b) = if dom.is_field() {
        (FieldElem::one(), FieldElem::one())
    } else {
        let t = dom
            .lemma33_two_generators(&dom.ideal_from_divisor(i), 1)?
            .remove(0);
        (t.a, t.b)
    };
    let target = ClassTarget {
        domain: if dom.is_field() { DivisorD::new() } else { i.clone() },
        monoid: FracVIdealS(IntVec::zeros(0)),
    };
    let mut candidates: Vec<IntVec> = height_zero_exponents(n, 64).take(4 * m).collect();
    if n == 1 {
        candidates.push(IntVec::from_i64(&[-1]));
    }
    let mut out: Vec<PrimeDivisorCertificate> = Vec::with_capacity(m);
    let mut elems: Vec<AlgebraElem> = Vec::with_capacity(m);
    for g in candidates {
        if out.len() == m {
            break;
        }
        let cert = matsuda_certificate(&a, &b, &g)?;
        elems.push(cert.element.clone());
        if !pairwise_non_associated(dom, &elems) {
            elems.pop();
            continue;
        }
        out.push(finish(alg, Construction::Matsuda, out.len(), cert, &target)?);
    }
    if out.len() < m {
        return Err(Error::precondition(format!(
            "rank {n} admits only {} pairwise non-associated elements of this shape, {m} requested",
            out.len()
        )));
    }
    Ok(out)
}

/// A ℤ-basis of `q(S)` (columns, in lattice coordinates) containing an
/// element `a ∈ S` with `v_P(a) = 1`, together with `a` and `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimABasis {
    pub basis: IntMat,
    pub a: IntVec,
    pub prime: usize,
}

/// Atom with `v_prime = 1` and total at most `bound`, in coordinates.
fn atom_with_unit_valuation(b: &BlockMonoid, prime: usize, bound: u32) -> Option<IntVec> {
    b.enumerate_atoms(bound)
        .into_iter()
        .find(|e| e.0[prime].is_one())
        .map(|e| b.coords(&e).expect("atoms are zero-sum"))
}

pub fn claim_a_basis(b: &BlockMonoid, bound: u32) -> Result<ClaimABasis> {
    if b.rank() == 0 {
        return Err(Error::precondition("the monoid is trivial"));
    }
    for prime in 0..b.num_primes() {
        if let Some(a) = atom_with_unit_valuation(b, prime, bound) {
            let w = b.lattice_basis().row(prime);
            let basis = split_basis_by_functional(&w, &a)?;
            return Ok(ClaimABasis { basis, a, prime });
        }
    }
    Err(Error::exhausted(format!("no atom of total at most {bound} has a valuation equal to 1")))
}

/// `X^{g₁} + … + X^{g_n} + X^{g_n + a}` for generators `gᵢ` of `J⁻¹` and up
/// to `m` primes `P` avoiding them, over `K[S]`.
pub fn construct_field_case(alg: &MonoidAlgebra, j: &FracVIdealS, m: usize) -> Result<Vec<PrimeDivisorCertificate>> {
    let monoid = alg.monoid();
    let b = monoid
        .block()
        .ok_or_else(|| Error::precondition("this construction needs a monoid with prime divisors"))?;
    if !alg.domain().is_field() {
        return Err(Error::precondition("this construction needs a field of coefficients"));
    }
    let gens = monoid.generators_of_divisor(&j.inverse(), SCAN_BOUND)?;
    let target = ClassTarget {
        domain: DivisorD::new(),
        monoid: j.clone(),
    };
    let mut out = Vec::with_capacity(m);
    for prime in monoid.primes_avoiding(&gens)? {
        if out.len() == m {
            break;
        }
        let Some(a) = atom_with_unit_valuation(b, prime, SCAN_BOUND) else {
            continue;
        };
        let cert = claim_b_certificate(monoid, &gens, &a, prime)?;
        out.push(finish(alg, Construction::FieldCase, out.len(), cert, &target)?);
    }
    if out.len() < m {
        return Err(Error::exhausted(format!(
            "insufficient avoiding primes: achieved {} of {m}",
            out.len()
        )));
    }
    Ok(out)
}

/// `g = X^h + Σ_{e ∈ M, e ≠ h} pX^e` where `p = a/b` comes from a
/// two-generator triple of `I⁻¹`, `M` holds generators of `J⁻¹` plus `k`
/// further points of `J⁻¹`, and `h = max M`. The k-th output has `k` extra
/// points, so supports have pairwise different sizes.
pub fn construct_theorem(alg: &MonoidAlgebra, i: &DivisorD, j: &FracVIdealS, m: usize) -> Result<Vec<PrimeDivisorCertificate>> {
    require_domain(alg)?;
    if m == 0 {
        return Err(Error::precondition("m must be at least 1"));
    }
    let dom = alg.domain();
    let monoid = alg.monoid();
    monoid.check_ideal(j)?;
    let t = dom
        .lemma33_two_generators(&dom.ideal_from_divisor(i), 1)?
        .remove(0);
    let p = t.a.div(&t.b, &dom.d())?;
    let j_inv = j.inverse();
    let gens = monoid.generators_of_divisor(&j_inv, SCAN_BOUND)?;
    // a single generator leaves a monomial; pad with one more point
    let pad = usize::from(gens.len() == 1);
    let extras = monoid.ideal_points(&j_inv, m - 1 + pad, &gens)?;
    if extras.len() < m - 1 + pad {
        return Err(Error::exhausted("J⁻¹ generator scan exhausted"));
    }
    let order = monoid.order();
    let target = ClassTarget {
        domain: i.clone(),
        monoid: j.clone(),
    };
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let exps: Vec<IntVec> = gens.iter().chain(&extras[..k + pad]).cloned().collect();
        let h = order.max(&exps).expect("nonempty").clone();
        let g = AlgebraElem::from_terms(exps.into_iter().map(|e| Term {
            coef: if e == h { FieldElem::one() } else { p.clone() },
            exp: e,
        }));
        let cert = eisenstein_certificate(dom, &g, &t.place)?;
        out.push(finish(alg, Construction::Theorem, k, cert, &target)?);
    }
    Ok(out)
}

/// Dispatch on the shape of `D[S]`: `D[G]` uses the `a/b + X^α` family with
/// `α = (1, 0, …)`, `K[G]` the Matsuda family, `K[S]` the field case and
/// everything else the general construction.
pub fn construct_primes_in_class(alg: &MonoidAlgebra, target: &ClassTarget, m: usize) -> Result<Vec<PrimeDivisorCertificate>> {
    alg.monoid().check_ideal(&target.monoid)?;
    match (alg.domain().is_field(), alg.monoid().is_group()) {
        (false, true) => {
            if alg.rank() == 0 {
                return Err(Error::precondition("the exponent group has rank 0"));
            }
            construct_kim_case1(alg, &target.domain, &IntVec::unit(alg.rank(), 0), m)
        }
        (true, true) => construct_matsuda_primes(alg, &target.domain, m),
        (true, false) => construct_field_case(alg, &target.monoid, m),
        (false, false) => construct_theorem(alg, &target.domain, &target.monoid, m),
    }
}

/// Does the intersection `gK[G] ∩ D[S]` lie in the class of `I[J]`?
pub fn verify_prime_divisor_class(alg: &MonoidAlgebra, cert: &PrimeDivisorCertificate, i: &DivisorD, j: &FracVIdealS) -> Result<bool> {
    let rep = alg.intersect_principal(&cert.element)?;
    Ok(rep.class == alg.class_pair(i, j)?)
}

/// Is `f = c·X^v·g` for some `c ∈ K*` and `v ∈ G`? Units of `K[G]` are
/// exactly the `cX^v`.
pub fn associated(dom: &DomainInstance, f: &AlgebraElem, g: &AlgebraElem) -> bool {
    let (ft, gt) = (f.terms(), g.terms());
    if ft.len() != gt.len() || ft.is_empty() {
        return false;
    }
    let d = dom.d();
    let shift = &ft[0].exp - &gt[0].exp;
    ft.iter().zip(gt).all(|(x, y)| {
        x.exp == &y.exp + &shift && x.coef.mul(&gt[0].coef, &d) == y.coef.mul(&ft[0].coef, &d)
    })
}

pub fn pairwise_non_associated(dom: &DomainInstance, gs: &[AlgebraElem]) -> bool {
    gs.iter()
        .enumerate()
        .all(|(i, f)| gs[..i].iter().all(|g| !associated(dom, f, g)))
}

/// Replay a certificate from scratch: the irreducibility transcript, the
/// intersection description and the class equality.
pub fn reverify(alg: &MonoidAlgebra, cert: &PrimeDivisorCertificate) -> Result<bool> {
    if cert.irreducibility.element != cert.element {
        return Ok(false);
    }
    if !replay(alg.domain(), alg.monoid(), &cert.irreducibility)? {
        return Ok(false);
    }
    let rep = alg.intersect_principal(&cert.element)?;
    Ok(rep == cert.intersection && rep.class == cert.target && cert.verified)
}

#[cfg(test)]
mod tests;
