//! Command line front end. Every command produces a serializable response;
//! `--json` prints it inside a small envelope, otherwise a short text
//! summary is printed.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{AlgebraElem, ClassPair, MonoidAlgebra, OracleBounds};
use crate::classgroup::{ClassElem, ClassGroupDesc};
use crate::constructions::{construct_primes_in_class, pairwise_non_associated, reverify, ClassTarget, PrimeDivisorCertificate};
use crate::counterexample::verify_counterexample;
use crate::domain::{DivisorD, DomainClassGroup, DomainInstance, PrimePlace};
use crate::error::{Error, Result};
use crate::irreducible::{
    claim_b_certificate, eisenstein_certificate, kronecker_irreducible_oracle, matsuda_certificate, oracle_certificate,
    replay, IrreducibilityCertificate, OracleCaps, OracleVerdict,
};
use crate::lattice::IntVec;
use crate::monoid::{BlockMonoid, DivisorTheoryStatus, FracVIdealS, MonoidInstance};

pub const FACTOR_BOUND_ENV: &str = "KRULLKIT_FACTOR_BOUND";
const VERSION: &str = "1";

/// Exit code for a completed check that found a violation.
pub const EXIT_VIOLATION: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "krullkit", version, about = "Prime divisors in prescribed classes of Krull monoid algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Print the full JSON response
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search bound (meaning depends on the command)
    #[arg(long, global = true)]
    pub bound: Option<u32>,
    /// Replay every certificate from its serialized form
    #[arg(long, global = true)]
    pub reverify: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Divisor class groups of a domain and/or a monoid
    Classgroup {
        #[arg(long)]
        domain: Option<String>,
        #[arg(long)]
        monoid: Option<String>,
    },
    /// Construct prime divisors of D[S] in a given class
    PrimesInClass(PrimesArgs),
    /// Certify irreducibility of an element of K[G]
    CheckIrreducible(IrreducibleArgs),
    /// Sample-based check of the description of fK[G] ∩ D[S]
    Lemma32Check {
        #[arg(long, default_value = "integers")]
        domain: String,
        #[arg(long, default_value = "group:1")]
        monoid: String,
        /// JSON list of terms, or @file
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Exhaustive check of the B({−2,−1,1,2}) counterexample
    Counterexample,
    /// Check that the standard embedding of a block monoid is a divisor theory
    DivisorTheoryCheck {
        #[arg(long, default_value = "section4")]
        monoid: String,
    },
}

#[derive(Args, Debug)]
pub struct PrimesArgs {
    #[arg(long, default_value = "integers")]
    pub domain: String,
    #[arg(long, default_value = "section4")]
    pub monoid: String,
    /// Domain class as comma-separated coordinates
    #[arg(long, allow_hyphen_values = true)]
    pub class_d: Option<String>,
    /// Monoid class as comma-separated coordinates
    #[arg(long, allow_hyphen_values = true)]
    pub class_s: Option<String>,
    /// Divisor of I as JSON, e.g. [{"p":"2","root":"1","e":"1"}]
    #[arg(long)]
    pub i_divisor: Option<String>,
    /// Divisor of J as comma-separated multiplicities
    #[arg(long, allow_hyphen_values = true)]
    pub j_divisor: Option<String>,
    #[arg(long, short = 'm', default_value_t = 1)]
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Matsuda,
    Eisenstein,
    ClaimB,
    Oracle,
}

#[derive(Args, Debug)]
pub struct IrreducibleArgs {
    #[arg(long, default_value = "integers")]
    pub domain: String,
    #[arg(long, default_value = "group:1")]
    pub monoid: String,
    /// JSON list of terms, or @file
    #[arg(long)]
    pub element: Option<String>,
    /// A certificate (JSON or @file) to replay instead
    #[arg(long)]
    pub certificate: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Prime of the domain: `p` or `p,root`
    #[arg(long)]
    pub place: Option<String>,
    /// Prime divisor index of the monoid
    #[arg(long)]
    pub prime: Option<usize>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    version: &'a str,
    #[serde(with = "crate::serde_util::bigint_str")]
    seed: num_bigint::BigInt,
    result: Value,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
    exit_code: i32,
}

/// What a command run produced: text, JSON, and the process exit code.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

fn read_arg(s: &str) -> Result<String> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::schema(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::schema(format!("{path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(&read_arg(s)?).map_err(|e| Error::schema(e.to_string()))
}

fn factor_bound_from_env() -> Result<Option<u64>> {
    match std::env::var(FACTOR_BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|b| *b >= 2)
            .map(Some)
            .ok_or_else(|| Error::schema(format!("{FACTOR_BOUND_ENV} must be an integer ≥ 2, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// `integers` (`Z`), `rationals` (`Q`) or `quadratic:d`.
pub fn parse_domain(s: &str) -> Result<DomainInstance> {
    let dom = match s.trim() {
        "integers" | "Z" => DomainInstance::integers(),
        "rationals" | "Q" => DomainInstance::rationals(),
        t => {
            let d = t
                .strip_prefix("quadratic:")
                .and_then(|d| d.trim().parse::<i64>().ok())
                .ok_or_else(|| Error::schema(format!("unknown domain {t:?}")))?;
            DomainInstance::quadratic(d)?
        }
    };
    Ok(match factor_bound_from_env()? {
        Some(b) => dom.with_factor_bound(b),
        None => dom,
    })
}

/// `group:n`, `section4`, `block:w₁,w₂,…` (weights in ℤ) or
/// `block:[[..],[..]]` (weights in ℤᵏ).
pub fn parse_monoid(s: &str) -> Result<MonoidInstance> {
    let s = s.trim();
    if s == "section4" {
        return Ok(MonoidInstance::section4());
    }
    if let Some(n) = s.strip_prefix("group:") {
        let n = n.trim().parse().map_err(|_| Error::schema(format!("bad rank in {s:?}")))?;
        return Ok(MonoidInstance::group(n));
    }
    if let Some(w) = s.strip_prefix("block:") {
        let weights: Vec<Vec<i64>> = if w.trim_start().starts_with('[') {
            serde_json::from_str(w).map_err(|e| Error::schema(e.to_string()))?
        } else {
            parse_ints(w)?.into_iter().map(|x| vec![x]).collect()
        };
        let weights = weights.iter().map(|g| IntVec::from_i64(g)).collect();
        return Ok(MonoidInstance::Block(BlockMonoid::new(weights)?));
    }
    Err(Error::schema(format!("unknown monoid {s:?}")))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::schema(format!("not an integer: {t:?}"))))
        .collect()
}

fn parse_place(s: &str) -> Result<PrimePlace> {
    let v = parse_ints(s)?;
    match v.as_slice() {
        [p] => Ok(PrimePlace::rational(*p)),
        [p, r] => Ok(PrimePlace::split(*p, *r)),
        _ => Err(Error::schema(format!("a place is `p` or `p,root`, got {s:?}"))),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("responses serialize")
}

/// Parse arguments and run. Errors become an outcome with their exit code.
pub fn run(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    let result = dispatch(cli);
    let (text, result, exit_code) = match result {
        Ok(o) => (o.text, o.json, o.exit_code),
        Err(e) => {
            let kind = match e {
                Error::Schema(_) => "schema",
                Error::Precondition { .. } => "precondition",
                Error::Exhausted(_) | Error::FactorBound { .. } => "exhausted",
            };
            let body = ErrorBody {
                kind,
                message: e.to_string(),
                exit_code: e.exit_code(),
            };
            (format!("error: {e}"), to_value(&serde_json::json!({ "error": body })), e.exit_code())
        }
    };
    let env = Envelope {
        command: name,
        version: VERSION,
        seed: cli.global.seed.into(),
        result,
    };
    Outcome {
        text,
        json: to_value(&env),
        exit_code,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classgroup { .. } => "classgroup",
        Command::PrimesInClass(_) => "primes-in-class",
        Command::CheckIrreducible(_) => "check-irreducible",
        Command::Lemma32Check { .. } => "lemma32-check",
        Command::Counterexample => "counterexample",
        Command::DivisorTheoryCheck { .. } => "divisor-theory-check",
    }
}

fn ok(text: String, json: Value) -> Result<Outcome> {
    Ok(Outcome {
        text,
        json,
        exit_code: 0,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Classgroup { domain, monoid } => cmd_classgroup(domain.as_deref(), monoid.as_deref()),
        Command::PrimesInClass(a) => cmd_primes_in_class(a, g),
        Command::CheckIrreducible(a) => cmd_check_irreducible(a, g),
        Command::Lemma32Check {
            domain,
            monoid,
            element,
            samples,
        } => cmd_lemma32_check(domain, monoid, element, *samples, g.seed),
        Command::Counterexample => cmd_counterexample(g.bound.unwrap_or(20)),
        Command::DivisorTheoryCheck { monoid } => cmd_divisor_theory_check(monoid, g.bound.unwrap_or(8)),
    }
}

#[derive(Serialize)]
struct ClassgroupResponse {
    #[serde(skip_serializing_if = "Option::is_none")]
    domain: Option<DomainClassgroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    monoid: Option<MonoidClassgroup>,
}

#[derive(Serialize)]
struct DomainClassgroup {
    instance: DomainInstance,
    group: String,
    class_group: DomainClassGroup,
    /// one prime divisor per class, keyed by class coordinates
    representatives: Vec<(ClassElem, DivisorD)>,
}

#[derive(Serialize)]
struct MonoidClassgroup {
    instance: MonoidInstance,
    group: String,
    class_group: ClassGroupDesc,
    /// class of each prime divisor
    prime_classes: Vec<ClassElem>,
}

pub fn cmd_classgroup(domain: Option<&str>, monoid: Option<&str>) -> Result<Outcome> {
    if domain.is_none() && monoid.is_none() {
        return Err(Error::schema("give --domain, --monoid or both"));
    }
    let mut text = Vec::new();
    let domain = match domain {
        Some(d) => {
            let dom = parse_domain(d)?;
            let cg = DomainClassGroup::compute(&dom)?;
            text.push(format!("C(D) = {} (order {})", cg.desc, cg.order));
            let representatives: Vec<_> = cg.class_representatives().into_iter().collect();
            for (c, div) in &representatives {
                text.push(format!("  class {c}: {div}"));
            }
            Some(DomainClassgroup {
                group: cg.desc.to_string(),
                instance: dom,
                class_group: cg,
                representatives,
            })
        }
        None => None,
    };
    let monoid = match monoid {
        Some(m) => {
            let m = parse_monoid(m)?;
            let cg = m.class_group();
            let r = m.num_primes();
            let prime_classes: Vec<_> = (0..r).map(|i| cg.project(&IntVec::unit(r, i))).collect();
            text.push(format!("C(S) = {cg}"));
            for (i, c) in prime_classes.iter().enumerate() {
                text.push(format!("  prime {i} ↦ {c}"));
            }
            Some(MonoidClassgroup {
                group: cg.to_string(),
                instance: m,
                class_group: cg,
                prime_classes,
            })
        }
        None => None,
    };
    ok(text.join("\n"), to_value(&ClassgroupResponse { domain, monoid }))
}

#[derive(Serialize, Deserialize)]
pub struct PrimesResponse {
    pub target: ClassTarget,
    pub class: ClassPair,
    pub count: usize,
    pub certificates: Vec<PrimeDivisorCertificate>,
    pub pairwise_non_associated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reverified: Option<bool>,
}

fn parse_class(s: &str, len: usize) -> Result<ClassElem> {
    let v = parse_ints(s)?;
    if v.len() != len {
        return Err(Error::schema(format!("class {s:?} has {} coordinates, expected {len}", v.len())));
    }
    Ok(ClassElem::from_i64(&v))
}

/// Resolve the divisors `I` and `J` from explicit divisors or from classes.
pub fn resolve_target(
    alg: &MonoidAlgebra,
    class_d: Option<&str>,
    class_s: Option<&str>,
    i_div: Option<&str>,
    j_div: Option<&str>,
    bound: u32,
) -> Result<ClassTarget> {
    let mut t = ClassTarget::trivial(alg);
    match (i_div, class_d) {
        (Some(_), Some(_)) => return Err(Error::schema("give --i-divisor or --class-d, not both")),
        (Some(i), None) => t.domain = parse_json(i)?,
        (None, Some(c)) => {
            let cg = alg.domain_class_group();
            let c = cg.desc.reduce(&parse_class(c, cg.desc.invariants.len())?.0);
            t.domain = cg
                .class_representatives()
                .remove(&c)
                .ok_or_else(|| Error::precondition(format!("no representative for class {c}")))?;
        }
        (None, None) => {}
    }
    match (j_div, class_s) {
        (Some(_), Some(_)) => return Err(Error::schema("give --j-divisor or --class-s, not both")),
        (Some(j), None) => t.monoid = FracVIdealS(IntVec::from_i64(&parse_ints(j)?)),
        (None, Some(c)) => {
            let n = alg.monoid_class_group().invariants.len();
            t.monoid = alg.monoid().divisor_in_class(&parse_class(c, n)?, bound)?;
        }
        (None, None) => {}
    }
    for p in t.domain.support() {
        alg.domain().check_place(p)?;
    }
    alg.monoid().check_ideal(&t.monoid)?;
    Ok(t)
}

/// Re-verify certificates read back from their JSON form.
pub fn reverify_all(alg: &MonoidAlgebra, certs: &[PrimeDivisorCertificate]) -> Result<bool> {
    let json = serde_json::to_string(certs).expect("certificates serialize");
    let back: Vec<PrimeDivisorCertificate> = serde_json::from_str(&json).map_err(|e| Error::schema(e.to_string()))?;
    for c in &back {
        if !reverify(alg, c)? {
            return Ok(false);
        }
    }
    let elems: Vec<AlgebraElem> = back.iter().map(|c| c.element.clone()).collect();
    Ok(pairwise_non_associated(alg.domain(), &elems))
}

pub fn primes_in_class(alg: &MonoidAlgebra, target: &ClassTarget, m: usize, reverify_flag: bool) -> Result<PrimesResponse> {
    let certificates = construct_primes_in_class(alg, target, m)?;
    let elems: Vec<AlgebraElem> = certificates.iter().map(|c| c.element.clone()).collect();
    let class = alg.class_pair(&target.domain, &target.monoid)?;
    let reverified = if reverify_flag {
        Some(reverify_all(alg, &certificates)?)
    } else {
        None
    };
    Ok(PrimesResponse {
        target: target.clone(),
        class,
        count: certificates.len(),
        pairwise_non_associated: pairwise_non_associated(alg.domain(), &elems),
        certificates,
        reverified,
    })
}

fn cmd_primes_in_class(a: &PrimesArgs, g: &GlobalArgs) -> Result<Outcome> {
    let alg = MonoidAlgebra::new(parse_domain(&a.domain)?, parse_monoid(&a.monoid)?)?;
    let bound = g.bound.unwrap_or(8);
    let target = resolve_target(
        &alg,
        a.class_d.as_deref(),
        a.class_s.as_deref(),
        a.i_divisor.as_deref(),
        a.j_divisor.as_deref(),
        bound,
    )?;
    let r = primes_in_class(&alg, &target, a.count, g.reverify)?;
    let mut text = vec![format!(
        "class ({}, {}): {} certificates",
        r.class.domain, r.class.monoid, r.count
    )];
    for c in &r.certificates {
        text.push(format!(
            "  [{}] {:?} {}  verified={}",
            c.index, c.construction, c.element, c.verified
        ));
    }
    text.push(format!("pairwise non-associated: {}", r.pairwise_non_associated));
    if let Some(v) = r.reverified {
        text.push(format!("reverified: {v}"));
    }
    let good = r.certificates.iter().all(|c| c.verified) && r.pairwise_non_associated && r.reverified != Some(false);
    Ok(Outcome {
        text: text.join("\n"),
        json: to_value(&r),
        exit_code: if good { 0 } else { EXIT_VIOLATION },
    })
}

#[derive(Serialize)]
struct IrreducibleResponse {
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<IrreducibilityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    replayed: Option<bool>,
    /// why the certificate shapes did not apply, in the order tried
    #[serde(skip_serializing_if = "Vec::is_empty")]
    rejections: Vec<String>,
}

fn matsuda_from_element(f: &AlgebraElem) -> Result<IrreducibilityCertificate> {
    let t = f.terms();
    if t.len() != 2 || !t[0].exp.is_zero() {
        return Err(Error::precondition("element is not of the shape a + bX^g"));
    }
    matsuda_certificate(&t[0].coef, &t[1].coef, &t[1].exp)
}

/// Find generators and `a` presenting `f` as `X^{g₁} + … + X^{g_n} + X^{g_n+a}`.
fn claim_b_from_element(monoid: &MonoidInstance, f: &AlgebraElem, prime: usize) -> Result<IrreducibilityCertificate> {
    let t = f.terms();
    if t.len() < 2 || !t.iter().all(|x| x.coef.is_rational() && x.coef == crate::domain::FieldElem::one()) {
        return Err(Error::precondition("element is not a sum of at least two monomials X^g"));
    }
    let mut last = None;
    for top in 0..t.len() {
        for base in (0..t.len()).filter(|&b| b != top) {
            let a = &t[top].exp - &t[base].exp;
            let mut gens: Vec<IntVec> = (0..t.len())
                .filter(|&k| k != top && k != base)
                .map(|k| t[k].exp.clone())
                .collect();
            gens.push(t[base].exp.clone());
            match claim_b_certificate(monoid, &gens, &a, prime) {
                Ok(c) => return Ok(c),
                Err(e @ Error::Schema(_)) => return Err(e),
                Err(e) => last = Some(e),
            }
        }
    }
    Err(last.expect("at least two terms"))
}

fn cmd_check_irreducible(a: &IrreducibleArgs, g: &GlobalArgs) -> Result<Outcome> {
    let dom = parse_domain(&a.domain)?;
    let monoid = parse_monoid(&a.monoid)?;
    if let Some(c) = &a.certificate {
        let cert: IrreducibilityCertificate = parse_json(c)?;
        let ok_ = replay(&dom, &monoid, &cert)?;
        let r = IrreducibleResponse {
            certificate: Some(cert),
            oracle: None,
            replayed: Some(ok_),
            rejections: vec![],
        };
        return Ok(Outcome {
            text: format!("replay: {}", if ok_ { "ok" } else { "FAILED" }),
            json: to_value(&r),
            exit_code: if ok_ { 0 } else { EXIT_VIOLATION },
        });
    }
    let f: AlgebraElem = parse_json(
        a.element
            .as_deref()
            .ok_or_else(|| Error::schema("give --element or --certificate"))?,
    )?;
    let alg_rank = monoid.rank();
    if let Some(t) = f.terms().iter().find(|t| t.exp.len() != alg_rank) {
        return Err(Error::schema(format!("exponent {} has length {}, expected {alg_rank}", t.exp, t.exp.len())));
    }
    let place = a.place.as_deref().map(parse_place).transpose()?;
    let caps = OracleCaps::default();
    let mut rejections = Vec::new();
    let mut cert = None;
    let attempts: Vec<Mode> = match a.mode {
        Mode::Auto => vec![Mode::Matsuda, Mode::Eisenstein, Mode::ClaimB],
        m => vec![m],
    };
    for mode in attempts {
        let res = match mode {
            Mode::Matsuda => matsuda_from_element(&f),
            Mode::Eisenstein => match &place {
                Some(p) => eisenstein_certificate(&dom, &f, p),
                None if a.mode == Mode::Auto => continue,
                None => Err(Error::schema("eisenstein mode needs --place")),
            },
            Mode::ClaimB => match a.prime {
                Some(i) => claim_b_from_element(&monoid, &f, i),
                None if a.mode == Mode::Auto => continue,
                None => Err(Error::schema("claim-b mode needs --prime")),
            },
            Mode::Oracle => oracle_certificate(&f, &caps),
            Mode::Auto => unreachable!(),
        };
        match res {
            Ok(c) => {
                cert = Some(c);
                break;
            }
            Err(e) if a.mode == Mode::Auto && !matches!(e, Error::Schema(_)) => {
                rejections.push(format!("{mode:?}: {e}"))
            }
            Err(e) => return Err(e),
        }
    }
    let oracle = f.is_rational().then(|| kronecker_irreducible_oracle(&f, &caps));
    let replayed = match (&cert, g.reverify) {
        (Some(c), true) => Some(replay(&dom, &monoid, c)?),
        _ => None,
    };
    let mut text = Vec::new();
    match &cert {
        Some(c) => text.push(format!("{:?} certificate for {}", c.kind, c.element)),
        None => text.push(format!("no certificate for {f}")),
    }
    for r in &rejections {
        text.push(format!("  rejected {r}"));
    }
    match &oracle {
        Some(v) => text.push(format!("oracle: {}", verdict_name(v))),
        None => text.push("oracle: not applicable".into()),
    }
    if let Some(r) = replayed {
        text.push(format!("replay: {}", if r { "ok" } else { "FAILED" }));
    }
    let exit_code = match (&cert, &oracle) {
        _ if replayed == Some(false) => EXIT_VIOLATION,
        (Some(_), Some(OracleVerdict::Reducible { .. })) => EXIT_VIOLATION,
        (Some(_), _) => 0,
        (None, Some(OracleVerdict::Irreducible | OracleVerdict::Reducible { .. } | OracleVerdict::Unit)) => 0,
        (None, Some(OracleVerdict::Unknown { .. }) | None) => 4,
    };
    let r = IrreducibleResponse {
        certificate: cert,
        oracle,
        replayed,
        rejections,
    };
    Ok(Outcome {
        text: text.join("\n"),
        json: to_value(&r),
        exit_code,
    })
}

fn verdict_name(v: &OracleVerdict) -> String {
    match v {
        OracleVerdict::Irreducible => "irreducible".into(),
        OracleVerdict::Reducible { factors } => format!("reducible: ({}) · ({})", factors[0], factors[1]),
        OracleVerdict::Unit => "unit".into(),
        OracleVerdict::Unknown { reason } => format!("unknown ({reason})"),
    }
}

fn cmd_lemma32_check(domain: &str, monoid: &str, element: &str, samples: usize, seed: u64) -> Result<Outcome> {
    let alg = MonoidAlgebra::new(parse_domain(domain)?, parse_monoid(monoid)?)?;
    let f: AlgebraElem = parse_json(element)?;
    let bounds = OracleBounds {
        samples,
        ..OracleBounds::default()
    };
    let r = alg.lemma32_oracle_check(&f, seed, &bounds)?;
    let text = format!(
        "f = {}\nclass ({}, {})\nsamples: {} in rep, {} in intersection; violations: {}\n{}",
        r.rep.f,
        r.rep.class.domain,
        r.rep.class.monoid,
        r.samples_in_rep,
        r.samples_in_intersection,
        r.violation_count,
        if r.pass { "pass" } else { "FAIL" }
    );
    Ok(Outcome {
        text,
        exit_code: if r.pass { 0 } else { EXIT_VIOLATION },
        json: to_value(&r),
    })
}

fn cmd_counterexample(bound: u32) -> Result<Outcome> {
    let r = verify_counterexample(bound)?;
    let mut text: Vec<String> = r.symbolic.iter().map(|s| s.identity.clone()).collect();
    text.push(format!("symbolic minimum: {}", r.symbolic_min));
    text.push(r.summary.clone());
    Ok(Outcome {
        text: text.join("\n"),
        exit_code: if r.witness_found { EXIT_VIOLATION } else { 0 },
        json: to_value(&r),
    })
}

fn cmd_divisor_theory_check(monoid: &str, bound: u32) -> Result<Outcome> {
    let m = parse_monoid(monoid)?;
    let b = m
        .block()
        .ok_or_else(|| Error::precondition("a group has no prime divisors to check"))?;
    let r = b.verify_divisor_theory(bound);
    let mut text = vec![format!("status: {:?} ({} atoms up to total {bound})", r.status, r.atoms.len())];
    text.extend(r.notes.iter().cloned());
    let exit_code = match r.status {
        DivisorTheoryStatus::Holds => 0,
        DivisorTheoryStatus::Fails => EXIT_VIOLATION,
        DivisorTheoryStatus::Inconclusive => 4,
    };
    Ok(Outcome {
        text: text.join("\n"),
        json: to_value(&r),
        exit_code,
    })
}

/// Render the outcome the way the binary prints it.
pub fn render(outcome: &Outcome, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(&outcome.json).expect("json")
    } else {
        outcome.text.clone()
    }
}
