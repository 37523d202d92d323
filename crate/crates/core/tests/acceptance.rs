//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Built with `harness = false`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use krullkit::algebra::{AlgebraElem, MonoidAlgebra, Term};
use krullkit::classgroup::ClassElem;
use krullkit::cli::{render, run, Cli};
use krullkit::constructions::{construct_field_case, pairwise_non_associated, PrimeDivisorCertificate};
use krullkit::domain::{DivisorD, DomainClassGroup, DomainInstance, FieldElem, PrimePlace};
use krullkit::irreducible::{
    claim_b_certificate, eisenstein_certificate, kronecker_irreducible_oracle, matsuda_certificate, normalized_degree,
    IrreducibilityCertificate, OracleCaps, OracleVerdict,
};
use krullkit::lattice::IntVec;
use krullkit::monoid::{BlockMonoid, FracVIdealS, MonoidInstance};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn cli_json(args: &[&str]) -> (String, i32) {
    let cli = Cli::parse_from(std::iter::once("krullkit").chain(args.iter().copied()));
    let out = run(&cli);
    (render(&out, true), out.exit_code)
}

fn result_of(json: &str) -> Value {
    let v: Value = serde_json::from_str(json).expect("valid json");
    v["result"].clone()
}

fn within(t: Instant, limit: u64) -> (bool, Duration) {
    let e = t.elapsed();
    (e < Duration::from_secs(limit), e)
}

fn criterion_counterexample() -> Verdict {
    let t = Instant::now();
    let (json, code) = cli_json(&["counterexample", "--bound", "20", "--json"]);
    let (fast, e) = within(t, 10);
    let r = result_of(&json);
    let min = r["search"]["min_valuation"].as_str() == Some("2");
    let sym = r["symbolic"]
        .as_array()
        .is_some_and(|s| s.len() == 4 && s.iter().enumerate().all(|(i, c)| {
            c["shift"] == "2" && c["identity"] == format!("v_{i}(α₂ + a − α₁) = 2 + v_{i}(a)")
        }));
    let none = r["witness_found"] == false;
    verdict(
        code == 0 && min && sym && none && fast,
        format!("min={} symbolic={sym} no_witness={none} in {e:.2?}", r["search"]["min_valuation"]),
    )
}

fn random_elem(rng: &mut ChaCha8Rng, rank: usize) -> AlgebraElem {
    loop {
        let n = rng.gen_range(1..=3);
        let f = AlgebraElem::from_terms((0..n).map(|_| {
            let mut num = 0;
            while num == 0 {
                num = rng.gen_range(-12i64..=12);
            }
            let den = rng.gen_range(1i64..=6);
            Term {
                exp: IntVec::from_i64(&(0..rank).map(|_| rng.gen_range(-2i64..=2)).collect::<Vec<_>>()),
                coef: FieldElem::ratio(num, den),
            }
        }));
        if !f.is_zero() {
            return f;
        }
    }
}

/// The JSON of every lemma32-check run, concatenated, and whether all passed.
fn intersection_corpus(seed: u64) -> (String, usize, bool) {
    let mut all = String::new();
    let mut count = 0;
    let mut pass = true;
    for (k, (monoid, rank)) in [("block:-1,1", 1usize), ("section4", 3)].into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed + k as u64);
        for _ in 0..50 {
            let f = serde_json::to_string(&random_elem(&mut rng, rank)).unwrap();
            let (json, code) = cli_json(&[
                "lemma32-check",
                "--domain",
                "integers",
                "--monoid",
                monoid,
                "--element",
                &f,
                "--samples",
                "500",
                "--seed",
                &seed.to_string(),
                "--json",
            ]);
            let r = result_of(&json);
            pass &= code == 0 && r["pass"] == true && r["violation_count"] == 0;
            count += 1;
            all.push_str(&json);
        }
    }
    (all, count, pass)
}

fn criterion_intersection_oracle() -> Verdict {
    let t = Instant::now();
    let (_, count, pass) = intersection_corpus(7);
    let (fast, e) = within(t, 60);
    verdict(pass && count >= 100 && fast, format!("{count} elements × 500 samples, all pass={pass}, in {e:.2?}"))
}

/// Sweep every class pair of {0,1} ⊕ {−2..2} with m = 3. Returns the
/// concatenated JSON and the certificates.
fn class_sweep() -> (String, Vec<PrimeDivisorCertificate>, bool) {
    let mut all = String::new();
    let mut certs = Vec::new();
    let mut ok = true;
    for c in ["0", "1"] {
        for s in ["-2", "-1", "0", "1", "2"] {
            let (json, code) = cli_json(&[
                "primes-in-class",
                "--domain",
                "quadratic:-5",
                "--monoid",
                "section4",
                "--class-d",
                c,
                "--class-s",
                s,
                "-m",
                "3",
                "--reverify",
                "--json",
            ]);
            let r = result_of(&json);
            ok &= code == 0
                && r["reverified"] == true
                && r["pairwise_non_associated"] == true
                && r["class"]["domain"] == serde_json::json!([c])
                && r["class"]["monoid"] == serde_json::json!([s]);
            let batch: Vec<PrimeDivisorCertificate> = serde_json::from_value(r["certificates"].clone()).unwrap();
            ok &= batch.len() == 3 && batch.iter().all(|c| c.verified);
            certs.extend(batch);
            all.push_str(&json);
        }
    }
    (all, certs, ok)
}

fn criterion_primes_in_class() -> Verdict {
    let t = Instant::now();
    let (_, certs, ok) = class_sweep();
    let (fast, e) = within(t, 60);
    let dom = DomainInstance::quadratic(-5).unwrap();
    let elems: Vec<AlgebraElem> = certs.iter().map(|c| c.element.clone()).collect();
    let distinct = pairwise_non_associated(&dom, &elems);
    verdict(
        ok && certs.len() == 30 && distinct && fast,
        format!("{} certificates, verified+reverified={ok}, pairwise non-associated={distinct}, in {e:.2?}", certs.len()),
    )
}

fn q(n: i64, d: i64) -> FieldElem {
    FieldElem::ratio(n, d)
}

/// Certified elements with rational coefficients, from all three shapes.
fn certified_corpus() -> Vec<IrreducibilityCertificate> {
    let mut out = Vec::new();
    let exps: [&[i64]; 6] = [&[1, 0], &[0, 1], &[1, 1], &[1, -1], &[2, 1], &[3, -2]];
    let coefs = [(q(1, 1), q(1, 1)), (q(2, 1), q(-3, 1)), (q(1, 2), q(5, 3)), (q(-7, 1), q(1, 1))];
    for (k, g) in exps.iter().enumerate() {
        for (a, b) in coefs.iter().skip(k % 2).step_by(2) {
            out.push(matsuda_certificate(a, b, &IntVec::from_i64(g)).unwrap());
        }
    }

    let z = DomainInstance::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut made = 0;
    while made < 16 {
        let p = [2i64, 3, 5][rng.gen_range(0..3)];
        let deg = rng.gen_range(1..=5usize);
        let mut terms = vec![(1i64, vec![deg as i64])];
        for e in 1..deg {
            if rng.gen_bool(0.5) {
                terms.push((p * rng.gen_range(-3i64..=3), vec![e as i64]));
            }
        }
        let mut u = 0;
        while u % p == 0 {
            u = rng.gen_range(-4i64..=4);
        }
        terms.push((p * u, vec![0]));
        let terms: Vec<(i64, &[i64])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        let f = AlgebraElem::from_i64(&terms);
        if let Ok(c) = eisenstein_certificate(&z, &f, &PrimePlace::rational(p)) {
            out.push(c);
            made += 1;
        }
    }
    // two variables: leading X^(2,1), interior and trailing at p = 3
    for (lead, mid, trail) in [([2, 1], [1, 0], [0, 0]), ([1, 2], [0, 1], [0, 0]), ([1, 1], [1, 0], [0, 1])] {
        let f = AlgebraElem::from_i64(&[(1, &lead), (6, &mid), (3, &trail)]);
        out.push(eisenstein_certificate(&z, &f, &PrimePlace::rational(3)).unwrap());
    }

    let s4 = MonoidInstance::section4();
    let alg = MonoidAlgebra::new(DomainInstance::rationals(), s4.clone()).unwrap();
    for t in [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]] {
        if let Ok(cs) = construct_field_case(&alg, &FracVIdealS(IntVec::from_i64(&t)), 1) {
            out.extend(cs.into_iter().map(|c| c.irreducibility));
        }
    }
    let b = s4.block().unwrap();
    let atoms = b.enumerate_atoms(4);
    for prime in 0..4 {
        let Some(a) = atoms.iter().find(|e| e.0[prime] == BigInt::from(1)) else { continue };
        let a = b.coords(a).unwrap();
        let avoid: Vec<IntVec> = b
            .elements(4)
            .into_iter()
            .filter(|e| e.0[prime] == BigInt::from(0))
            .map(|e| b.coords(&e).unwrap())
            .collect();
        for gens in [vec![IntVec::zeros(3)], avoid.iter().take(2).cloned().collect::<Vec<_>>()] {
            if let Ok(c) = claim_b_certificate(&s4, &gens, &a, prime) {
                out.push(c);
            }
        }
    }
    out
}

fn criterion_oracle_agreement() -> Verdict {
    let caps = OracleCaps::default();
    let corpus: Vec<_> = certified_corpus()
        .into_iter()
        .filter(|c| c.oracle_applicable && normalized_degree(&c.element).is_some_and(|d| d <= 8))
        .collect();
    let kinds: BTreeSet<String> = corpus.iter().map(|c| format!("{:?}", c.kind)).collect();
    let irreducible = corpus
        .iter()
        .filter(|c| kronecker_irreducible_oracle(&c.element, &caps) == OracleVerdict::Irreducible)
        .count();
    let mut products = 0;
    let mut reducible = 0;
    for pair in corpus.chunks(2) {
        let [f, g] = pair else { continue };
        if f.element.exponents()[0].len() != g.element.exponents()[0].len() {
            continue;
        }
        let p = f.element.mul(&g.element, &BigInt::from(0));
        if normalized_degree(&p).is_some_and(|d| d <= 8) {
            products += 1;
            if matches!(kronecker_irreducible_oracle(&p, &caps), OracleVerdict::Reducible { .. }) {
                reducible += 1;
            }
        }
    }
    verdict(
        corpus.len() >= 40 && irreducible == corpus.len() && kinds.len() == 3 && products >= 10 && reducible == products,
        format!(
            "{irreducible}/{} certified elements irreducible (kinds {kinds:?}); {reducible}/{products} products reducible",
            corpus.len()
        ),
    )
}

fn criterion_class_groups() -> Verdict {
    let s4 = BlockMonoid::section4();
    let cg = s4.class_group();
    let inv_ok = cg.invariant_factors() == vec![BigInt::from(0)];
    let proj_ok = (0..4).all(|i| cg.project(&IntVec::unit(4, i)) == ClassElem(s4.weights()[i].clone()));
    let dom = DomainInstance::quadratic(-5).unwrap();
    let dcg = DomainClassGroup::compute(&dom).unwrap();
    let z2 = dcg.desc.invariant_factors() == vec![BigInt::from(2)];
    let p2 = dcg
        .class_of_divisor(&dom, &DivisorD::single(PrimePlace::split(2, 1), 1))
        .unwrap();
    let nonid = !p2.is_identity() && dcg.desc.add(&p2, &p2).is_identity();
    verdict(
        inv_ok && proj_ok && z2 && nonid,
        format!("section4 → {} (δᵢ ↦ weight i: {proj_ok}); ℤ[√−5] → {} with [P₂] = {p2}", cg, dcg.desc),
    )
}

fn random_divisor(rng: &mut ChaCha8Rng, places: &[PrimePlace]) -> DivisorD {
    let mut pairs = Vec::new();
    for p in places {
        if rng.gen_bool(0.4) {
            pairs.push((p.clone(), BigInt::from(rng.gen_range(-2i64..=2))));
        }
    }
    DivisorD::from_pairs(pairs)
}

fn criterion_two_generators() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let z = DomainInstance::integers();
    let zp: Vec<PrimePlace> = z.places().take(6).collect();
    let mut ok_z = 0;
    let mut distinct = true;
    for _ in 0..100 {
        let ideal = z.ideal_from_divisor(&random_divisor(&mut rng, &zp));
        let ts = z.lemma33_two_generators(&ideal, 5).unwrap();
        let places: BTreeSet<_> = ts.iter().map(|t| t.place.clone()).collect();
        distinct &= places.len() == 5;
        if ts.iter().all(|t| z.verify_lemma33_triple(&ideal, t).unwrap()) {
            ok_z += 1;
        }
    }
    let q = DomainInstance::quadratic(-5).unwrap();
    let qp: Vec<PrimePlace> = q.places().take(5).collect();
    let mut ok_q = 0;
    for _ in 0..10 {
        let ideal = q.ideal_from_divisor(&random_divisor(&mut rng, &qp));
        let ts = q.lemma33_two_generators(&ideal, 2).unwrap();
        if ts.iter().all(|t| q.verify_lemma33_triple(&ideal, t).unwrap()) {
            ok_q += 1;
        }
    }
    verdict(
        ok_z == 100 && ok_q == 10 && distinct,
        format!("ℤ: {ok_z}/100 re-verified, m=5 primes distinct={distinct}; ℤ[√−5]: {ok_q}/10 re-verified"),
    )
}

fn criterion_determinism() -> Verdict {
    let (a, _, _) = intersection_corpus(99);
    let (b, _, _) = intersection_corpus(99);
    let (c, _, _) = class_sweep();
    let (d, _, _) = class_sweep();
    verdict(
        a == b && c == d,
        format!("intersection-check JSON {} bytes identical={}; class sweep JSON {} bytes identical={}", a.len(), a == b, c.len(), c == d),
    )
}

type Criterion = fn() -> Verdict;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("1 counterexample, exact minimum 2", criterion_counterexample),
        ("2 principal intersection oracle", criterion_intersection_oracle),
        ("3 primes in every class pair", criterion_primes_in_class),
        ("4 certificates agree with the oracle", criterion_oracle_agreement),
        ("5 class groups", criterion_class_groups),
        ("6 two-generator triples", criterion_two_generators),
        ("7 byte-identical JSON", criterion_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let v = f();
        println!("criterion {name}: {} ({})", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
