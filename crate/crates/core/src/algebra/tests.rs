use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::domain::PrimePlace;
use crate::monoid::BlockMonoid;

fn nat() -> (MonoidAlgebra, IntVec) {
    let b = BlockMonoid::from_i64(&[&[-1], &[1]]).unwrap();
    let x = b.coords(&IntVec::from_i64(&[1, 1])).unwrap();
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::Block(b)).unwrap();
    (alg, x)
}

fn s4_over(dom: DomainInstance) -> MonoidAlgebra {
    MonoidAlgebra::new(dom, MonoidInstance::section4()).unwrap()
}

fn atom(alg: &MonoidAlgebra, e: &[i64]) -> IntVec {
    alg.monoid().block().unwrap().coords(&IntVec::from_i64(e)).unwrap()
}

fn poly(terms: &[(FieldElem, IntVec)]) -> AlgebraElem {
    AlgebraElem::from_terms(terms.iter().map(|(c, e)| Term { exp: e.clone(), coef: c.clone() }))
}

fn int(c: i64) -> FieldElem {
    FieldElem::from_i64(c)
}

#[test]
fn contents_examples() {
    let alg = s4_over(DomainInstance::integers());
    let s = atom(&alg, &[1, 0, 0, 1]);
    let zero = IntVec::zeros(3);
    let f = poly(&[(int(2), zero.clone()), (int(1), s.clone())]);
    let c = alg.contents(&f).unwrap();
    assert_eq!(c.a, FracIdealD::unit());
    assert_eq!(c.e.0, IntVec::zeros(4));
    let f = poly(&[(int(4), zero.clone()), (int(6), s.clone())]);
    assert_eq!(alg.domain().divisor_of(&alg.contents(&f).unwrap().a).unwrap(),
        DivisorD::single(PrimePlace::rational(2), 1));
    let f = poly(&[(FieldElem::ratio(1, 3), s.clone())]);
    let c = alg.contents(&f).unwrap();
    assert_eq!(alg.domain().divisor_of(&c.a).unwrap(), DivisorD::single(PrimePlace::rational(3), -1));
    assert_eq!(c.e.0, IntVec::from_i64(&[1, 0, 0, 1]));
    assert!(alg.contents(&AlgebraElem::zero()).is_err());
}

#[test]
fn membership() {
    let alg = s4_over(DomainInstance::integers());
    let s = atom(&alg, &[1, 0, 0, 1]);
    let zero = IntVec::zeros(3);
    assert!(alg.is_member(&poly(&[(int(2), zero.clone()), (int(1), s.clone())])).unwrap());
    assert!(!alg.is_member(&poly(&[(FieldElem::ratio(1, 2), zero), (int(1), s.clone())])).unwrap());
    assert!(!alg.is_member(&poly(&[(int(1), -&s)])).unwrap());
}

#[test]
fn intersection_examples() {
    let (alg, x) = nat();
    let zero = IntVec::zeros(1);
    let f = poly(&[(int(2), zero.clone()), (int(1), x.clone())]);
    let rep = alg.intersect_principal(&f).unwrap();
    assert!(rep.domain_part.is_zero());
    assert_eq!(rep.monoid_part.0, IntVec::zeros(2));
    let f2 = poly(&[(int(2), zero.clone()), (int(2), x.clone())]);
    let rep2 = alg.intersect_principal(&f2).unwrap();
    assert_eq!(rep2.domain_part, DivisorD::single(PrimePlace::rational(2), -1));
    // unit monomial shifts leave the class pair unchanged
    let g = alg.mul_monomial(&f, &FieldElem::ratio(7, 4), &x.scale(&BigInt::from(3)));
    assert_eq!(alg.intersect_principal(&g).unwrap().class, rep.class);
}

#[test]
fn class_pair_shift_invariance_over_quadratic() {
    let alg = s4_over(DomainInstance::quadratic(-5).unwrap());
    let zero = IntVec::zeros(3);
    let s = atom(&alg, &[0, 1, 1, 0]);
    let f = poly(&[(int(2), zero), (FieldElem::quad(1, 1), s.clone())]);
    let rep = alg.intersect_principal(&f).unwrap();
    assert!(!rep.class.domain.is_identity());
    let g = alg.mul_monomial(&f, &FieldElem::quad(3, -1), &IntVec::from_i64(&[2, -1, 4]));
    assert_eq!(alg.intersect_principal(&g).unwrap().class, rep.class);
}

#[test]
fn oracle_passes_and_catches_corruption() {
    let (alg, x) = nat();
    let zero = IntVec::zeros(1);
    let bounds = OracleBounds::default();
    for f in [
        poly(&[(int(2), zero.clone()), (int(1), x.clone())]),
        poly(&[(FieldElem::ratio(1, 2), zero.clone()), (int(1), x.clone())]),
        poly(&[(int(2), zero.clone()), (int(2), x.clone())]),
    ] {
        let rep = alg.lemma32_oracle_check(&f, 7, &bounds).unwrap();
        assert!(rep.pass, "{f}: {:?}", rep.violations);
        assert!(rep.samples_in_rep > 0 && rep.samples_in_rep < bounds.samples);
    }
    let f = poly(&[(FieldElem::ratio(1, 2), zero.clone()), (int(1), x.clone())]);
    let rep = alg.intersect_principal(&f).unwrap();
    assert_eq!(rep.domain_part, DivisorD::single(PrimePlace::rational(2), 1));

    let mut bad = rep.clone();
    bad.monoid_part = FracVIdealS(&bad.monoid_part.0 - &IntVec::from_i64(&[1, 1]));
    let r = alg.lemma32_check_rep(&bad, 7, &bounds).unwrap();
    assert!(!r.pass);
    assert!(!r.violations.is_empty());
    let mut bad = rep;
    bad.monoid_part = FracVIdealS(&bad.monoid_part.0 + &IntVec::from_i64(&[1, 1]));
    let r = alg.lemma32_check_rep(&bad, 7, &bounds).unwrap();
    assert!(r.violations.iter().any(|v| v.kind == ViolationKind::SampleMissedByRep));
}

#[test]
fn oracle_over_section4_is_deterministic() {
    let alg = s4_over(DomainInstance::integers());
    let f = poly(&[
        (int(3), atom(&alg, &[1, 0, 2, 0])),
        (FieldElem::ratio(1, 2), atom(&alg, &[0, 1, 1, 0])),
    ]);
    let bounds = OracleBounds { samples: 200, ..OracleBounds::default() };
    let a = alg.lemma32_oracle_check(&f, 11, &bounds).unwrap();
    let b = alg.lemma32_oracle_check(&f, 11, &bounds).unwrap();
    assert!(a.pass, "{:?}", a.violations);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

fn random_elem(rng: &mut ChaCha8Rng, alg: &MonoidAlgebra) -> AlgebraElem {
    let n = alg.rank();
    let k = rng.gen_range(1..=3);
    let quad = alg.domain().is_quadratic();
    AlgebraElem::from_terms((0..k).map(|_| Term {
        exp: IntVec::from_i64(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>()),
        coef: FieldElem::new(
            rng.gen_range(1..=12).into(),
            if quad { rng.gen_range(-3..=3).into() } else { 0.into() },
            rng.gen_range(1..=6).into(),
        )
        .unwrap(),
    }))
}

#[test]
fn content_multiplicativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let alg = s4_over(DomainInstance::integers());
    for _ in 0..100 {
        let f = random_elem(&mut rng, &alg);
        let g = random_elem(&mut rng, &alg);
        let fg = alg.mul(&f, &g);
        let (cf, cg, cfg) = (alg.contents(&f).unwrap(), alg.contents(&g).unwrap(), alg.contents(&fg).unwrap());
        let dom = alg.domain();
        assert_eq!(
            dom.divisor_of(&cfg.a).unwrap(),
            dom.divisor_of(&cf.a).unwrap().add(&dom.divisor_of(&cg.a).unwrap())
        );
        assert_eq!(cfg.e, cf.e.v_mul(&cg.e), "{f} · {g}");
    }
    // over ℤ[√−5], (A_fg)_v = (A_f A_g)_v
    let alg = s4_over(DomainInstance::quadratic(-5).unwrap());
    for _ in 0..30 {
        let f = random_elem(&mut rng, &alg);
        let g = random_elem(&mut rng, &alg);
        let dom = alg.domain();
        let lhs = alg.contents(&alg.mul(&f, &g)).unwrap().a;
        let rhs = dom.ideal_v_mul(&alg.contents(&f).unwrap().a, &alg.contents(&g).unwrap().a);
        assert_eq!(lhs, rhs);
    }
}
