use std::process::{Command, Output};

use serde_json::Value;

fn krullkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krullkit"))
        .args(args)
        .env_remove("KRULLKIT_FACTOR_BOUND")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn counterexample_json() {
    let out = krullkit(&["counterexample", "--bound", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "counterexample");
    assert_eq!(v["seed"], "0");
    assert_eq!(v["result"]["search"]["min_valuation"], "2");
    assert_eq!(v["result"]["alpha2"], serde_json::json!(["4", "4", "4", "4"]));
}

#[test]
fn classgroup_text() {
    let out = krullkit(&["classgroup", "--domain", "quadratic:-5", "--monoid", "section4"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("C(D) = ℤ/2"), "{s}");
    assert!(s.contains("C(S) = ℤ"), "{s}");
    assert!(s.contains("prime 0 ↦ (-2)"), "{s}");
}

#[test]
fn schema_errors_exit_2() {
    let out = krullkit(&["classgroup", "--domain", "reals"]);
    assert_eq!(out.status.code(), Some(2));
    let out = krullkit(&["check-irreducible", "--element", "[{\"exp\":[1],\"num\":\"1\",\"den\":\"1\"}]", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["result"]["error"]["kind"], "schema");
}

#[test]
fn precondition_errors_exit_3() {
    let out = krullkit(&["classgroup", "--domain", "quadratic:-4"]);
    assert_eq!(out.status.code(), Some(3));
    let e = r#"[{"exp":["0"],"num":"4","den":"1"},{"exp":["1"],"num":"1","den":"1"}]"#;
    let out = krullkit(&["check-irreducible", "--element", e, "--mode", "eisenstein", "--place", "2", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let msg = json(&out)["result"]["error"]["message"].as_str().unwrap().to_string();
    assert!(msg.contains("trailing"), "{msg}");
}

#[test]
fn exhaustion_exits_4() {
    let out = krullkit(&["primes-in-class", "--domain", "rationals", "--monoid", "section4", "-m", "9"]);
    assert_eq!(out.status.code(), Some(4));
    let out = krullkit(&["divisor-theory-check", "--monoid", "block:-1,1", "--bound", "1"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn factor_bound_from_environment() {
    let run = |bound: &str| {
        Command::new(env!("CARGO_BIN_EXE_krullkit"))
            .args(["classgroup", "--domain", "quadratic:-5"])
            .env("KRULLKIT_FACTOR_BOUND", bound)
            .output()
            .unwrap()
    };
    assert_eq!(run("1000").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn primes_in_class_reverifies_and_is_deterministic() {
    let args = [
        "primes-in-class",
        "--domain",
        "quadratic:-5",
        "--monoid",
        "section4",
        "--class-d",
        "1",
        "--class-s",
        "2",
        "-m",
        "3",
        "--reverify",
        "--json",
    ];
    let a = krullkit(&args);
    let b = krullkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["result"]["reverified"], true);
    assert_eq!(v["result"]["count"], 3);
    assert_eq!(v["result"]["class"]["monoid"], serde_json::json!(["2"]));
}

#[test]
fn certificate_replay_round_trip() {
    let e = r#"[{"exp":["0"],"num":"2","den":"1"},{"exp":["1"],"num":"1","den":"1"}]"#;
    let out = krullkit(&["check-irreducible", "--element", e, "--mode", "eisenstein", "--place", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["oracle"]["verdict"], "irreducible");
    let cert = v["result"]["certificate"].to_string();
    let out = krullkit(&["check-irreducible", "--certificate", &cert, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["replayed"], true);

    let tampered = cert.replace("\"ok\":true", "\"ok\":false");
    let out = krullkit(&["check-irreducible", "--certificate", &tampered]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn claim_b_detected_from_element() {
    // 1 + X^a over section4 with a the atom (1,0,0,1) in lattice coordinates
    let coords = {
        let b = krullkit::monoid::BlockMonoid::section4();
        b.coords(&krullkit::lattice::IntVec::from_i64(&[1, 0, 0, 1])).unwrap()
    };
    let f = krullkit::algebra::AlgebraElem::from_terms([
        krullkit::algebra::Term { exp: krullkit::lattice::IntVec::zeros(3), coef: krullkit::domain::FieldElem::one() },
        krullkit::algebra::Term { exp: coords, coef: krullkit::domain::FieldElem::one() },
    ]);
    let e = serde_json::to_string(&f).unwrap();
    let out = krullkit(&[
        "check-irreducible", "--domain", "rationals", "--monoid", "section4", "--element", &e, "--mode", "claim-b",
        "--prime", "3", "--reverify", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["result"]["certificate"]["kind"], "claim_b");
    assert_eq!(v["result"]["replayed"], true);
}

#[test]
fn intersection_check_same_seed_same_bytes() {
    let e = r#"[{"exp":["-1","0","0"],"num":"6","den":"1"},{"exp":["0","0","0"],"num":"4","den":"1"}]"#;
    let args = ["lemma32-check", "--monoid", "section4", "--element", e, "--seed", "17", "--json"];
    let a = krullkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, krullkit(&args).stdout);
    assert_eq!(json(&a)["result"]["pass"], true);
}
