use super::*;
use num_bigint::BigInt;
use crate::monoid::MonoidInstance;
use crate::classgroup::ClassElem;
use crate::domain::PrimePlace;
use crate::irreducible::{kronecker_irreducible_oracle, OracleCaps, OracleVerdict};

fn v(xs: &[i64]) -> IntVec {
    IntVec::from_i64(xs)
}

fn check_all(alg: &MonoidAlgebra, certs: &[PrimeDivisorCertificate]) {
    for c in certs {
        assert!(c.verified, "{c:?}");
        assert!(reverify(alg, c).unwrap());
    }
    let elems: Vec<_> = certs.iter().map(|c| c.element.clone()).collect();
    assert!(pairwise_non_associated(alg.domain(), &elems));
}

#[test]
fn kim_case1_over_integers() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::group(1)).unwrap();
    let certs = construct_kim_case1(&alg, &DivisorD::new(), &v(&[1]), 3).unwrap();
    check_all(&alg, &certs);
    let expected: Vec<_> = [2, 3, 5]
        .iter()
        .map(|&p| AlgebraElem::from_i64(&[(p, &[0]), (1, &[1])]))
        .collect();
    let got: Vec<_> = certs.iter().map(|c| c.element.clone()).collect();
    assert_eq!(got, expected);
    assert!(certs.iter().all(|c| c.target.domain.is_identity()));
}

#[test]
fn kim_case1_rejects_zero_alpha() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::group(1)).unwrap();
    let e = construct_kim_case1(&alg, &DivisorD::new(), &v(&[0]), 1).unwrap_err();
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn kim_case1_nonprincipal_class() {
    let dom = DomainInstance::quadratic(-5).unwrap();
    let alg = MonoidAlgebra::new(dom, MonoidInstance::group(1)).unwrap();
    let i = DivisorD::single(PrimePlace::split(2, 1), 1);
    let certs = construct_kim_case1(&alg, &i, &v(&[1]), 1).unwrap();
    check_all(&alg, &certs);
    assert!(!certs[0].target.domain.is_identity());
    assert!(!certs[0].irreducibility.oracle_applicable || certs[0].element.is_rational());
}

#[test]
fn matsuda_exponents() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::group(2)).unwrap();
    let certs = construct_matsuda_primes(&alg, &DivisorD::single(PrimePlace::rational(3), 1), 3).unwrap();
    check_all(&alg, &certs);
    let exps: Vec<_> = certs
        .iter()
        .map(|c| c.element.terms().iter().find(|t| !t.exp.is_zero()).unwrap().exp.clone())
        .collect();
    assert_eq!(exps, vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
}

#[test]
fn matsuda_over_quadratic_order() {
    let dom = DomainInstance::quadratic(-5).unwrap();
    let alg = MonoidAlgebra::new(dom, MonoidInstance::group(2)).unwrap();
    let i = DivisorD::single(PrimePlace::split(2, 1), 1);
    let certs = construct_matsuda_primes(&alg, &i, 2).unwrap();
    check_all(&alg, &certs);
    assert!(certs.iter().all(|c| !c.target.domain.is_identity()));
}

#[test]
fn matsuda_rank_one_limit() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::group(1)).unwrap();
    let e = construct_matsuda_primes(&alg, &DivisorD::new(), 5).unwrap_err();
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn claim_a_examples() {
    let b = BlockMonoid::from_i64(&[&[-1], &[1]]).unwrap();
    let c = claim_a_basis(&b, 4).unwrap();
    assert_eq!(c.basis.cols(), 1);
    assert_eq!(b.embed(&c.a), v(&[1, 1]));

    let s4 = BlockMonoid::section4();
    let c = claim_a_basis(&s4, 4).unwrap();
    assert_eq!(c.basis.det().abs(), BigInt::one());
    assert_eq!(c.basis.col(c.basis.cols() - 1), c.a);
    assert!(s4.embed(&c.a).0[c.prime].is_one());

    let trivial = BlockMonoid::from_i64(&[&[1]]).unwrap();
    assert!(claim_a_basis(&trivial, 4).is_err());
}

#[test]
fn field_case_principal() {
    let alg = MonoidAlgebra::new(DomainInstance::rationals(), MonoidInstance::section4()).unwrap();
    let certs = construct_field_case(&alg, &FracVIdealS(IntVec::zeros(4)), 2).unwrap();
    check_all(&alg, &certs);
    assert!(certs.iter().all(|c| c.target.monoid.is_identity()));
    for c in &certs {
        assert_eq!(kronecker_irreducible_oracle(&c.element, &OracleCaps::default()), OracleVerdict::Irreducible);
    }
}

#[test]
fn field_case_with_class() {
    let alg = MonoidAlgebra::new(DomainInstance::rationals(), MonoidInstance::section4()).unwrap();
    let j = FracVIdealS(v(&[0, 0, 1, 0]));
    let certs = construct_field_case(&alg, &j, 1).unwrap();
    check_all(&alg, &certs);
    assert_eq!(certs[0].target.monoid, ClassElem::from_i64(&[1]));
}

#[test]
fn field_case_runs_out_of_primes() {
    let alg = MonoidAlgebra::new(DomainInstance::rationals(), MonoidInstance::section4()).unwrap();
    let e = construct_field_case(&alg, &FracVIdealS(IntVec::zeros(4)), 10).unwrap_err();
    assert_eq!(e.exit_code(), 4);
    assert!(e.to_string().contains("achieved"), "{e}");
}

#[test]
fn theorem_over_integers() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::section4()).unwrap();
    let certs = construct_theorem(&alg, &DivisorD::new(), &FracVIdealS(IntVec::zeros(4)), 3).unwrap();
    check_all(&alg, &certs);
    let sizes: Vec<_> = certs.iter().map(|c| c.element.len()).collect();
    assert_eq!(sizes[1], sizes[0] + 1);
    assert_eq!(sizes[2], sizes[0] + 2);
}

#[test]
fn theorem_class_pair() {
    let alg = MonoidAlgebra::new(DomainInstance::quadratic(-5).unwrap(), MonoidInstance::section4()).unwrap();
    let i = DivisorD::single(PrimePlace::split(2, 1), 1);
    let j = alg.monoid().divisor_in_class(&ClassElem::from_i64(&[1]), 4).unwrap();
    let certs = construct_theorem(&alg, &i, &j, 2).unwrap();
    check_all(&alg, &certs);
    assert_eq!(certs[0].target.monoid, ClassElem::from_i64(&[1]));
    assert!(!certs[0].target.domain.is_identity());
}

#[test]
fn wrong_class_is_rejected() {
    let alg = MonoidAlgebra::new(DomainInstance::integers(), MonoidInstance::section4()).unwrap();
    let certs = construct_theorem(&alg, &DivisorD::new(), &FracVIdealS(IntVec::zeros(4)), 1).unwrap();
    assert!(verify_prime_divisor_class(&alg, &certs[0], &DivisorD::new(), &FracVIdealS(IntVec::zeros(4))).unwrap());
    assert!(!verify_prime_divisor_class(&alg, &certs[0], &DivisorD::new(), &FracVIdealS(v(&[0, 0, 1, 0]))).unwrap());
    // multiplying by a unit monomial keeps the class
    let mut shifted = certs[0].clone();
    shifted.element = alg.mul_monomial(&shifted.element, &FieldElem::from_i64(-7), &v(&[1, 0, 2]));
    assert!(verify_prime_divisor_class(&alg, &shifted, &DivisorD::new(), &FracVIdealS(IntVec::zeros(4))).unwrap());
    assert!(!reverify(&alg, &shifted).unwrap());
}

#[test]
fn association() {
    let z = DomainInstance::integers();
    let f = AlgebraElem::from_i64(&[(2, &[0]), (1, &[1])]);
    let g = AlgebraElem::from_i64(&[(3, &[0]), (1, &[1])]);
    assert!(pairwise_non_associated(&z, &[f.clone(), g]));
    let h = f.mul_monomial(&FieldElem::from_i64(5), &v(&[2]), &BigInt::zero());
    assert!(!pairwise_non_associated(&z, &[f, h]));
}
